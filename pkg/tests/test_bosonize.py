import numpy as np
import pytest

from hopfbrace import catalog
from hopfbrace.bosonize import (
    NotBosonizable,
    YDHopfBrace,
    bosonize,
    crossing_identity_report,
    hopf_bosonization,
    is_bosonizable,
    trivial_structure_yd_brace,
    verify_yd_hopf_brace,
)
from hopfbrace.brace import matched_pair_hopf_brace, verify_hopf_brace
from hopfbrace.fields import GF, QQ
from hopfbrace.hopf import YDHopfAlgebraData, group_algebra
from hopfbrace.linalg import LinMap, chain, flip, identity, maps_equal


@pytest.fixture(scope="module")
def bundled():
    return {name: catalog.builtin(name).obj
            for name in ("yd_unit_C2_F7", "yd_tensor_Z4_C2_Q", "yd_conj_S3_C3_F5")}


def test_unit_carrier_bosonization_recovers_base(bundled):
    A = bundled["yd_unit_C2_F7"]
    B = bosonize(A)
    base = A.base
    for name in ("mult1", "mult2", "comult", "antipode1", "antipode2", "counit"):
        assert maps_equal(getattr(B, name), getattr(base, name))[0], name


def test_trivial_crossings_give_tensor_brace(bundled):
    A = bundled["yd_tensor_Z4_C2_Q"]
    B = bosonize(A)
    assert verify_hopf_brace(B).ok
    H = A.base
    c = flip(H.dim, A.dim, QQ)
    for name in ("mult1", "mult2"):
        tens = chain(
            [getattr(A, name), getattr(H, name)],
            [identity(A.dim, QQ), c, identity(H.dim, QQ)],
        )
        assert maps_equal(getattr(B, name), tens)[0], name


def test_conjugation_bosonization_matches_matched_pair(bundled):
    A = bundled["yd_conj_S3_C3_F5"]
    B = bosonize(A)
    MP = matched_pair_hopf_brace(catalog.matched_pair_input(GF(5)))
    for name in ("counit", "comult", "unit1", "unit2", "mult1", "mult2",
                 "antipode1", "antipode2"):
        assert maps_equal(getattr(B, name), getattr(MP, name))[0], name


@pytest.mark.parametrize("name", ["yd_unit_C2_F7", "yd_tensor_Z4_C2_Q",
                                  "yd_conj_S3_C3_F5"])
def test_bundled_braces_verify_and_cross(name, bundled):
    A = bundled[name]
    assert verify_yd_hopf_brace(A).ok
    assert crossing_identity_report(A).ok
    assert is_bosonizable(A).ok


def _with_mult2(A, mult2):
    return YDHopfBrace(A.carrier, A.unit, A.mult1, mult2, A.counit, A.comult,
                       A.antipode1, A.antipode2)


def test_corrupted_mult2_fails_bosonizability(bundled):
    A = bundled["yd_conj_S3_C3_F5"]
    swap = np.eye(3, dtype=np.int64)[[1, 0, 2]]
    bad = _with_mult2(A, LinMap(GF(5), swap @ np.asarray(A.mult2.entries)))
    rep = is_bosonizable(bad)
    assert not rep.ok
    failing = {e.identity_name for e in rep.entries if not e.passed}
    assert failing & {
        "bosonizable.mixed_mult_exchange",
        "bosonizable.psi2_mult1_exchange",
        "bosonizable.gamma_crossing_mult_compat",
    }
    with pytest.raises(NotBosonizable):
        bosonize(bad)
    assert not verify_yd_hopf_brace(bad).ok


def test_hopf_bosonization_single_structure():
    F5 = GF(5)
    HA_c3, H, phi, _ = catalog.s3_conjugation_data(F5)
    A = catalog.yd_conjugation_brace(F5)
    I = YDHopfAlgebraData(H.h1, 3, phi, A.coact, A.unit, A.mult1, A.counit,
                          A.comult, A.antipode1)
    Y = hopf_bosonization(I)
    MP = matched_pair_hopf_brace(catalog.matched_pair_input(F5))
    assert maps_equal(Y.mult, MP.mult1)[0]
    assert maps_equal(Y.comult, MP.comult)[0]
    assert maps_equal(Y.antipode, MP.antipode1)[0]


def test_trivial_structure_requires_cocommutative_interplay():
    # building over a commuting pair always succeeds
    F = GF(7)
    H = catalog.builtin("triv_C2_Q").obj
    A = trivial_structure_yd_brace(H, H)
    assert verify_yd_hopf_brace(A).ok
