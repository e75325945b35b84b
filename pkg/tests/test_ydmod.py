import numpy as np
import pytest

from hopfbrace import catalog
from hopfbrace.brace import hopf_brace_from_skew_brace, trivial_brace
from hopfbrace.fields import GF, QQ
from hopfbrace.hopf import group_algebra
from hopfbrace.linalg import LinMap, identity, maps_equal, tensor
from hopfbrace.ydmod import (
    HBraceModule,
    NotAnAction,
    NotCocommutative,
    WeakYDModule,
    canonical_weak_yd,
    default_witnesses,
    half_braiding,
    module_from_h2,
    regular_module,
    tensor_module,
    tensor_weak_yd,
    trivial_module,
    unit_weak_yd,
    verify_braiding_properties,
    verify_hbrace_module,
    verify_weak_yd,
    verify_yd,
)


@pytest.fixture(scope="module")
def z4_brace():
    return hopf_brace_from_skew_brace(catalog.z4_radical_skew_brace(), GF(7))


@pytest.fixture(scope="module")
def s3_brace():
    g = catalog.BUILTIN_GROUPS["S3"]()
    return trivial_brace(group_algebra(g.order, g.table, GF(5)))


def test_regular_module_verifies(z4_brace):
    rep = verify_hbrace_module(regular_module(z4_brace))
    assert rep.ok, rep.first_failure()


def test_trivial_module_verifies(z4_brace, s3_brace):
    for B in (z4_brace, s3_brace):
        rep = verify_hbrace_module(trivial_module(B))
        assert rep.ok, rep.first_failure()


def test_tensor_module_cocommutative(z4_brace):
    M = regular_module(z4_brace)
    T = tensor_module(M, trivial_module(z4_brace, 2))
    rep = verify_hbrace_module(T)
    assert rep.ok, rep.first_failure()


def test_tensor_module_rejects_noncocommutative():
    from conftest import sweedler_hopf_algebra
    from hopfbrace.hopf import verify_hopf_algebra

    H4 = sweedler_hopf_algebra(GF(5))
    assert verify_hopf_algebra(H4).ok
    B = trivial_brace(H4)
    with pytest.raises(NotCocommutative):
        tensor_module(regular_module(B), regular_module(B))


def test_unit_and_canonical_weak_yd(z4_brace, s3_brace):
    for B in (z4_brace, s3_brace):
        assert verify_weak_yd(unit_weak_yd(B)).ok
        rep = verify_weak_yd(canonical_weak_yd(B))
        assert rep.ok, rep.first_failure()


def test_verify_yd_canonical_default_witnesses(z4_brace):
    W = canonical_weak_yd(z4_brace)
    rep = verify_yd(W)
    assert rep.ok, rep.first_failure()
    names = [e.identity_name for e in rep.entries]
    assert "braiding.long_dimodule" in names


def test_module_from_h2_rejects_non_action(z4_brace):
    bad = LinMap(GF(7), np.zeros((2, 8), dtype=np.int64))
    with pytest.raises(NotAnAction):
        module_from_h2(bad, z4_brace, 2)


def test_half_braiding_of_conjugation_carrier():
    A = catalog.builtin("yd_conj_S3_C3_F5").obj
    W = A.carrier
    rep = verify_weak_yd(W)
    assert rep.ok, rep.first_failure()
    rep = verify_yd(W)
    assert rep.ok, rep.first_failure()
    rep = verify_braiding_properties(W)
    assert rep.ok, rep.first_failure()


def test_tensor_weak_yd_closure(z4_brace):
    W = canonical_weak_yd(z4_brace)
    T = tensor_weak_yd(W, W)
    rep = verify_weak_yd(T)
    assert rep.ok, rep.first_failure()


def test_half_braiding_trivial_coaction_is_flip_twist(z4_brace):
    # with trivial coaction the half braiding is act2-then-flip
    B = z4_brace
    W = unit_weak_yd(B)
    V = canonical_weak_yd(B)
    t = half_braiding(W, V)
    # W is one-dimensional with trivial coaction: t must be multiplication by
    # the unit, i.e. the identity on V up to the flip of a 1-dim factor
    assert maps_equal(t, identity(4, GF(7)))[0]
