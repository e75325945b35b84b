import numpy as np
import pytest

from hopfbrace import catalog
from hopfbrace.brace import (
    SkewBrace,
    gamma,
    gamma_prime,
    hopf_brace_from_skew_brace,
    matched_pair_hopf_brace,
    trivial_brace,
    verify_brace_morphism,
    verify_hopf_brace,
    verify_matched_pair,
    verify_skew_brace,
)
from hopfbrace.fields import GF, QQ
from hopfbrace.hopf import group_algebra
from hopfbrace.linalg import LinMap, identity, maps_equal


def test_skew_brace_verifies():
    sb = catalog.z4_radical_skew_brace()
    rep = verify_skew_brace(sb)
    assert rep.ok, rep.first_failure()
    # the two group structures genuinely differ
    assert sb.dot_table != sb.circ_table


def test_incompatible_tables_fail():
    # both tables present C4, but with incompatibly chosen generators
    dot = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1]]
    circ = catalog.cyclic_table(4).table
    rep = verify_skew_brace(SkewBrace.from_arrays(dot, circ))
    assert not rep.ok
    assert rep.first_failure().identity_name == "compatibility"


def test_non_latin_table_reported():
    rep = verify_skew_brace(SkewBrace.from_arrays([[0, 1], [1, 1]], [[0, 1], [1, 0]]))
    assert not rep.ok


@pytest.mark.parametrize("field", [QQ, GF(7)], ids=["Q", "F7"])
def test_lift_and_gamma_on_group_likes(field):
    sb = catalog.z4_radical_skew_brace()
    B = hopf_brace_from_skew_brace(sb, field)
    rep = verify_hopf_brace(B)
    assert rep.ok, rep.first_failure()
    n = sb.order
    dot = np.asarray(sb.dot_table)
    circ = np.asarray(sb.circ_table)
    inv = [int(np.nonzero(dot[g] == sb.identity)[0][0]) for g in range(n)]
    g_map = gamma(B)
    for g in range(n):
        for h in range(n):
            col = g_map.entries[:, g * n + h]
            expect = dot[inv[g], circ[g, h]]
            want = np.zeros(n, dtype=object)
            want[expect] = 1
            assert np.array_equal(np.asarray(col, dtype=object), want), (g, h)


def test_trivial_brace_has_equal_structures():
    B = trivial_brace(group_algebra(2, [[0, 1], [1, 0]], QQ))
    assert maps_equal(B.mult1, B.mult2)[0]
    assert verify_hopf_brace(B).ok
    # Gamma of a trivial brace is the adjoint-type action; on a commutative
    # group it degenerates to counit (x) id
    from hopfbrace.linalg import tensor

    assert maps_equal(gamma(B), tensor(B.counit, identity(2, QQ)))[0]


def test_gamma_prime_matches_gamma_on_cocommutative():
    B = hopf_brace_from_skew_brace(catalog.z4_radical_skew_brace(), GF(7))
    assert maps_equal(gamma(B), gamma_prime(B))[0]


def test_matched_pair_verifies_and_lifts():
    inp = catalog.matched_pair_input(GF(5))
    rep = verify_matched_pair(inp)
    assert rep.ok, rep.first_failure()
    MP = matched_pair_hopf_brace(inp)
    assert MP.dim == 18
    assert verify_hopf_brace(MP).ok


def test_brace_morphism_identity_and_corrupt():
    B = hopf_brace_from_skew_brace(catalog.z4_radical_skew_brace(), GF(7))
    rep = verify_brace_morphism(identity(4, GF(7)), B, B, "id")
    assert rep.ok
    perm = LinMap(GF(7), np.eye(4, dtype=np.int64)[[1, 0, 2, 3]])
    rep = verify_brace_morphism(perm, B, B, "row swap")
    assert not rep.ok


def test_mutation_of_each_brace_map_is_caught():
    B = hopf_brace_from_skew_brace(catalog.z4_radical_skew_brace(), GF(7))
    names = ("counit", "comult", "unit1", "unit2", "mult1", "mult2",
             "antipode1", "antipode2")
    from hopfbrace.brace import HopfBrace

    for name in names:
        entries = np.array(getattr(B, name).entries)
        entries[0, 0] = (entries[0, 0] + 1) % 7
        maps = {k: getattr(B, k) for k in names}
        maps[name] = LinMap(GF(7), entries)
        bad = HopfBrace(4, **maps)
        assert not verify_hopf_brace(bad).ok, name
