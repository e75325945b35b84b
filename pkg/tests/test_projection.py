import numpy as np
import pytest

from hopfbrace import catalog
from hopfbrace.brace import trivial_brace, verify_hopf_brace
from hopfbrace.fields import GF, QQ
from hopfbrace.hopf import group_algebra
from hopfbrace.linalg import LinMap, identity, maps_equal, tensor
from hopfbrace.projection import (
    HopfBraceProjection,
    HypothesisNotMet,
    NotV4,
    aux_maps,
    build_coinvariant_brace,
    check_cocommutative_compat,
    classify,
    coinvariant_yd_brace,
    identity_projection,
    nu_roundtrip,
    split_projection,
    verify_projection,
)


@pytest.fixture(scope="module")
def c2_split():
    P = catalog.builtin("proj_identity_C2").obj
    return P, split_projection(P)


def test_identity_projection_verifies(c2_split):
    P, S = c2_split
    assert verify_projection(P).ok
    assert S.rank == 1


def test_identity_projection_classifies_v4(c2_split):
    _, S = c2_split
    cls = classify(S)
    assert cls.level == "v4"
    assert cls.reports["roundtrip"].ok


def test_cocommutative_compat_and_coinvariant_brace(c2_split):
    _, S = c2_split
    assert check_cocommutative_compat(S).ok
    B = build_coinvariant_brace(S, "cocommutative")
    assert B.dim == 1
    assert verify_hopf_brace(B).ok


def test_boson_projection_idempotents(boson_splits):
    for name, (A, P, S, cls) in boson_splits.items():
        H = A.base
        F = A.field
        qexp = tensor(identity(A.dim, F), tensor(H.unit1, H.counit))
        assert maps_equal(S.q1, qexp)[0], name
        assert maps_equal(S.q2, qexp)[0], name
        assert S.rank == A.dim


def test_boson_projection_coinvariants_recover_input(boson_splits):
    names = ("unit", "mult1", "mult2", "counit", "comult",
             "antipode1", "antipode2", "act1", "act2", "coact")
    for name, (A, P, S, cls) in boson_splits.items():
        for mapname in names:
            ok, w = maps_equal(getattr(S.coinv, mapname), getattr(A, mapname))
            assert ok, (name, mapname, w)


def test_boson_projection_classifies_v4_with_roundtrip(boson_splits):
    for name, (A, P, S, cls) in boson_splits.items():
        assert cls.level == "v4", (name, {k: v.first_failure() for k, v in cls.reports.items()})
        assert cls.reports["roundtrip"].ok, name
        A2 = coinvariant_yd_brace(S)
        for mapname in ("unit", "mult1", "mult2", "counit", "comult",
                        "antipode1", "antipode2"):
            assert maps_equal(getattr(A2, mapname), getattr(A, mapname))[0]


def test_boson_aux_map_shape(boson_splits):
    A, P, S, cls = boson_splits["yd_conj_S3_C3_F5"]
    H = A.base
    aux = aux_maps(S)
    rexp = tensor(A.antipode1, tensor(H.unit1, H.counit))
    assert maps_equal(aux["r_d"], rexp)[0]


def test_matched_pair_projection_at_least_v1():
    F5 = GF(5)
    HA_c3, H, phi, psi = catalog.s3_conjugation_data(F5)
    from hopfbrace.brace import MatchedPairInput, matched_pair_hopf_brace

    MP = matched_pair_hopf_brace(MatchedPairInput(HA_c3, H, phi, psi, phi))
    x = tensor(LinMap(F5, [[1], [0], [0]]), identity(6, F5))
    y = tensor(LinMap(F5, [[1, 1, 1]]), identity(6, F5))
    P = HopfBraceProjection(H, MP, x, y)
    assert verify_projection(P).ok
    S = split_projection(P)
    assert S.rank == 3
    cls = classify(S)
    assert cls.v1, {k: v.first_failure() for k, v in cls.reports.items()}


def test_build_coinvariant_brace_v2_mode(c2_split):
    _, S = c2_split
    A = build_coinvariant_brace(S, "v2")
    from hopfbrace.bosonize import verify_yd_hopf_brace

    assert verify_yd_hopf_brace(A).ok


def test_nu_roundtrip_on_identity_projection(c2_split):
    _, S = c2_split
    assert nu_roundtrip(S).ok
