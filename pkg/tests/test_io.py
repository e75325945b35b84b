import json

import pytest

from hopfbrace import catalog, io
from hopfbrace.brace import verify_hopf_brace
from hopfbrace.fields import GF, QQ
from hopfbrace.linalg import maps_equal


@pytest.mark.parametrize("name", [
    "group_S3", "sb_Z4_radical", "triv_C4_Q", "yd_conj_S3_C3_F5",
    "mp_S3_C3_F5", "proj_identity_C2",
])
def test_payload_roundtrip_byte_identical(name):
    entry = catalog.builtin(name)
    serial = io.dumps(entry.payload)
    kind, obj = io.load_payload(json.loads(serial))
    assert kind == entry.kind
    reserialized = {
        "group": lambda o: io.group_to_json(*o),
        "skew_brace": io.skew_brace_to_json,
        "brace": io.brace_to_json,
        "yd_brace": io.yd_brace_to_json,
        "matched_pair": io.matched_pair_to_json,
        "projection": io.projection_to_json,
    }[kind](obj)
    assert io.dumps(reserialized) == serial


def test_dumps_deterministic():
    entry = catalog.builtin("triv_C2_Q")
    assert io.dumps(entry.payload) == io.dumps(json.loads(io.dumps(entry.payload)))


def test_field_override():
    payload = catalog.builtin("triv_C2_Q").payload
    b = io.brace_from_json(payload, GF(11))
    assert b.field == GF(11)
    assert verify_hopf_brace(b).ok


def test_rational_entries_survive():
    payload = catalog.builtin("triv_C4_Q").payload
    b = io.brace_from_json(payload)
    ref = catalog.builtin("triv_C4_Q").obj
    for name in ("mult1", "comult", "antipode1"):
        assert maps_equal(getattr(b, name), getattr(ref, name))[0]


def test_schema_errors():
    with pytest.raises(io.SchemaError):
        io.load_payload({"schema": 2, "kind": "brace"})
    with pytest.raises(io.SchemaError):
        io.load_payload({"schema": 1, "kind": "mystery"})
    with pytest.raises(io.SchemaError):
        io.load_payload("not a dict")
    good = dict(catalog.builtin("triv_C2_Q").payload)
    del good["mult1"]
    with pytest.raises(io.SchemaError):
        io.brace_from_json(good)
    bad_shape = dict(catalog.builtin("triv_C2_Q").payload)
    bad_shape["mult1"] = [["1", "0"]]
    with pytest.raises(io.SchemaError):
        io.brace_from_json(bad_shape)


def test_witnesses_roundtrip():
    from hopfbrace.ydmod import canonical_weak_yd, unit_weak_yd

    H = catalog.builtin("triv_C2_Q").obj
    members = (unit_weak_yd(H), canonical_weak_yd(H))
    doc = io.witnesses_to_json(members)
    back = io.witnesses_from_json(json.loads(io.dumps(doc)), H)
    assert len(back) == 2
    for orig, copy in zip(members, back):
        assert maps_equal(orig.coact, copy.coact)[0]
        assert maps_equal(orig.act2, copy.act2)[0]
