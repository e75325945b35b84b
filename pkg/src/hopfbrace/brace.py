"""Hopf braces: skew-brace lifts, trivial braces, matched pairs, and the
Gamma operators, with full axiom verification."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import FieldSpec
from .hopf import (
    AlgebraData,
    CoalgebraData,
    HopfAlgebraData,
    group_algebra,
    is_cocommutative,
    module_algebra_report,
    module_coalgebra_report,
    verify_hopf_algebra,
)
from .linalg import LinMap, chain, compose, flip, identity, maps_equal, tensor
from .report import Report


class InvalidSkewBrace(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"skew brace laws fail: {report.first_failure()}")


class DerivedIdentityError(ValueError):
    pass


class MatchedPairViolation(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"matched pair laws fail: {report.first_failure()}")


# ---------------------------------------------------------------------------
# skew braces


@dataclass(frozen=True)
class SkewBrace:
    order: int
    dot_table: tuple  # n x n tuple of tuples of indices
    circ_table: tuple
    identity: int = 0

    @staticmethod
    def from_arrays(dot, circ, identity=0) -> "SkewBrace":
        dot = np.asarray(dot, dtype=np.int64)
        return SkewBrace(
            dot.shape[0],
            tuple(tuple(int(v) for v in row) for row in dot),
            tuple(tuple(int(v) for v in row) for row in np.asarray(circ, dtype=np.int64)),
            identity,
        )


def _group_table_report(table: np.ndarray, e: int, rep: Report, prefix: str):
    n = table.shape[0]
    ok = bool(((table >= 0) & (table < n)).all())
    rep.add_bool(f"{prefix}.closure", ok)
    if not ok:
        return None
    rep.add_bool(
        f"{prefix}.identity",
        bool(np.array_equal(table[e], np.arange(n)) and np.array_equal(table[:, e], np.arange(n))),
        lhs_desc=f"identity index {e}",
    )
    inv = np.full(n, -1, dtype=np.int64)
    inv_ok = True
    for g in range(n):
        hits = np.nonzero(table[g] == e)[0]
        if hits.size != 1 or table[hits[0], g] != e:
            inv_ok = False
            break
        inv[g] = hits[0]
    rep.add_bool(f"{prefix}.inverses", inv_ok)
    # a*(b*c) == (a*b)*c, vectorized over all triples
    lhs = table[:, table]  # [a, b, c] -> a*(b*c)
    rhs = table[table]  # [a, b, c] -> (a*b)*c
    assoc = np.array_equal(lhs, rhs)
    if assoc:
        rep.add_bool(f"{prefix}.associativity", True)
    else:
        bad = np.argwhere(lhs != rhs)[0]
        rep.add_bool(
            f"{prefix}.associativity", False, lhs_desc=f"first failing triple {tuple(int(v) for v in bad)}"
        )
    return inv if inv_ok else None


def verify_skew_brace(S: SkewBrace) -> Report:
    rep = Report(f"skew brace of order {S.order}")
    dot = np.asarray(S.dot_table, dtype=np.int64)
    circ = np.asarray(S.circ_table, dtype=np.int64)
    e = S.identity
    inv = _group_table_report(dot, e, rep, "dot")
    _group_table_report(circ, e, rep, "circ")
    if inv is None or not rep.ok:
        rep.add_bool("compatibility", False, lhs_desc="skipped: group laws fail")
        return rep
    n = S.order
    # g o (h . t) == (g o h) . g^{-1} . (g o t) over all triples
    lhs = circ[:, dot]  # [g, h, t]
    goh = circ  # [g, h]
    got = circ  # [g, t]
    step = dot[goh, inv[:, None]]  # [g, h] -> (g o h) . g^{-1}
    rhs = dot[step[:, :, None], got[:, None, :]]
    if np.array_equal(lhs, rhs):
        rep.add_bool("compatibility", True)
    else:
        bad = np.argwhere(lhs != rhs)[0]
        rep.add_bool(
            "compatibility",
            False,
            lhs_desc=f"first failing triple {tuple(int(v) for v in bad)}",
        )
    return rep


# ---------------------------------------------------------------------------
# Hopf braces


@dataclass(frozen=True)
class HopfBrace:
    """One coalgebra (counit, comult) with two Hopf structures on top."""

    dim: int
    counit: LinMap
    comult: LinMap
    unit1: LinMap
    unit2: LinMap
    mult1: LinMap
    mult2: LinMap
    antipode1: LinMap
    antipode2: LinMap

    @property
    def field(self):
        return self.comult.field

    @property
    def h1(self) -> HopfAlgebraData:
        return HopfAlgebraData(
            AlgebraData(self.dim, self.unit1, self.mult1),
            CoalgebraData(self.dim, self.counit, self.comult),
            self.antipode1,
        )

    @property
    def h2(self) -> HopfAlgebraData:
        return HopfAlgebraData(
            AlgebraData(self.dim, self.unit2, self.mult2),
            CoalgebraData(self.dim, self.counit, self.comult),
            self.antipode2,
        )

    @property
    def coalgebra(self) -> CoalgebraData:
        return CoalgebraData(self.dim, self.counit, self.comult)


def hopf_brace_from_skew_brace(S: SkewBrace, field: FieldSpec) -> HopfBrace:
    """Group-like lift: basis = brace elements, both products linearized."""
    rep = verify_skew_brace(S)
    if not rep.ok:
        raise InvalidSkewBrace(rep)
    Hdot = group_algebra(S.order, S.dot_table, field, S.identity)
    Hcirc = group_algebra(S.order, S.circ_table, field, S.identity)
    return HopfBrace(
        S.order,
        Hdot.counit,
        Hdot.comult,
        Hdot.unit,
        Hcirc.unit,
        Hdot.mult,
        Hcirc.mult,
        Hdot.antipode,
        Hcirc.antipode,
    )


def trivial_brace(H: HopfAlgebraData) -> HopfBrace:
    return HopfBrace(
        H.dim, H.counit, H.comult, H.unit, H.unit, H.mult, H.mult, H.antipode, H.antipode
    )


def _gamma(H: HopfBrace) -> LinMap:
    Id = identity(H.dim, H.field)
    return chain(H.mult1, [H.antipode1, H.mult2], [H.comult, Id])


def _gamma_prime(H: HopfBrace) -> LinMap:
    F = H.field
    Id = identity(H.dim, F)
    return chain(H.mult1, [H.mult2, H.antipode1], [Id, flip(H.dim, H.dim, F)], [H.comult, Id])


def gamma(H: HopfBrace) -> LinMap:
    """Gamma = mult1 . (antipode1 (x) mult2) . (comult (x) id), with its
    derived identities asserted as a self-test."""
    F = H.field
    n = H.dim
    Id = identity(n, F)
    g = _gamma(H)
    eb2 = chain(H.mult1, [Id, g], [H.comult, Id])
    ok, w = maps_equal(H.mult2, eb2)
    if not ok:
        raise DerivedIdentityError(f"mult2 != mult1.(id(x)Gamma).(comult(x)id) at {w}")
    lhs = chain(g, [Id, H.antipode1])
    rhs = chain(H.mult1, [compose(H.antipode1, H.mult2), Id], [Id, flip(n, n, F)], [H.comult, Id])
    ok, w = maps_equal(lhs, rhs)
    if not ok:
        raise DerivedIdentityError(f"Gamma/antipode exchange fails at {w}")
    return g


def gamma_prime(H: HopfBrace) -> LinMap:
    F = H.field
    n = H.dim
    Id = identity(n, F)
    g = _gamma_prime(H)
    rebuilt = chain(H.mult1, [g, Id], [Id, flip(n, n, F)], [H.comult, Id])
    ok, w = maps_equal(H.mult2, rebuilt)
    if not ok:
        raise DerivedIdentityError(f"mult2 != mult1.(Gamma'(x)id).(id(x)c).(comult(x)id) at {w}")
    return g


def verify_hopf_brace(H: HopfBrace, subject: str = "hopf brace") -> Report:
    F = H.field
    n = H.dim
    Id = identity(n, F)
    c = flip(n, n, F)
    rep = Report(subject)
    rep.extend(verify_hopf_algebra(H.h1, subject), prefix="h1.")
    rep.extend(verify_hopf_algebra(H.h2, subject), prefix="h2.")
    rep.add("brace.unit_equality", H.unit1, H.unit2, "unit1", "unit2")
    g = _gamma(H)
    gp = _gamma_prime(H)
    lhs = chain(H.mult2, [Id, H.mult1])
    rep.add(
        "brace.compatibility",
        lhs,
        chain(H.mult1, [H.mult2, g], [Id, c, Id], [H.comult, Id, Id]),
        "mult2.(id(x)mult1)",
        "mult1.(mult2(x)Gamma).(id(x)c(x)id).(comult(x)id(x)id)",
    )
    rep.add(
        "brace.mult2_from_gamma",
        H.mult2,
        chain(H.mult1, [Id, g], [H.comult, Id]),
        "mult2",
        "mult1.(id(x)Gamma).(comult(x)id)",
    )
    rep.add(
        "brace.compatibility_gamma_prime",
        lhs,
        chain(H.mult1, [gp, H.mult2], [Id, c, Id], [H.comult, Id, Id]),
        "mult2.(id(x)mult1)",
        "mult1.(Gamma'(x)mult2).(id(x)c(x)id).(comult(x)id(x)id)",
    )
    rep.add(
        "brace.mult2_from_gamma_prime",
        H.mult2,
        chain(H.mult1, [gp, Id], [Id, c], [H.comult, Id]),
        "mult2",
        "mult1.(Gamma'(x)id).(id(x)c).(comult(x)id)",
    )
    rep.add(
        "brace.gamma_antipode_exchange",
        chain(g, [Id, H.antipode1]),
        chain(H.mult1, [compose(H.antipode1, H.mult2), Id], [Id, c], [H.comult, Id]),
        "Gamma.(id(x)antipode1)",
        "mult1.((antipode1.mult2)(x)id).(id(x)c).(comult(x)id)",
    )
    if is_cocommutative(H.coalgebra):
        rep.add("brace.symmetry_involutive", compose(c, c), identity(n * n, F), "c.c", "id")
        for name, op in (("gamma", g), ("gamma_prime", gp)):
            rep.add(
                f"brace.{name}_counit",
                compose(H.counit, op),
                tensor(H.counit, H.counit),
                f"counit.{name}",
                "counit(x)counit",
            )
            rep.add(
                f"brace.{name}_comult",
                compose(H.comult, op),
                chain([op, op], [Id, c, Id], [H.comult, H.comult]),
                f"comult.{name}",
                f"({name}(x){name}).comult_tensor",
            )
    return rep


def verify_brace_morphism(g: LinMap, src: HopfBrace, dst: HopfBrace,
                          subject: str = "brace morphism") -> Report:
    rep = Report(subject)
    rep.add("morphism.mult1", compose(g, src.mult1), chain(dst.mult1, [g, g]), "f.mult1", "mult1.(f(x)f)")
    rep.add("morphism.unit1", compose(g, src.unit1), dst.unit1, "f.unit1", "unit1")
    rep.add("morphism.mult2", compose(g, src.mult2), chain(dst.mult2, [g, g]), "f.mult2", "mult2.(f(x)f)")
    rep.add("morphism.unit2", compose(g, src.unit2), dst.unit2, "f.unit2", "unit2")
    rep.add("morphism.comult", compose(dst.comult, g), chain([g, g], src.comult), "comult.f", "(f(x)f).comult")
    rep.add("morphism.counit", compose(dst.counit, g), src.counit, "counit.f", "counit")
    return rep


# ---------------------------------------------------------------------------
# matched pairs


@dataclass(frozen=True)
class MatchedPairInput:
    A: HopfAlgebraData
    H: HopfBrace
    phi_A: LinMap  # left action of H1 on A: n*a -> a
    psi_H: LinMap  # right action of A on H1: n*a -> n
    phi2_A: LinMap  # left action of H2 on A: n*a -> a


def _mp_crossing(inp: MatchedPairInput) -> LinMap:
    """Psi = (phi (x) psi) . (H (x) c_{H,A} (x) A) . (comult_H (x) comult_A)."""
    A, H = inp.A, inp.H
    F = H.field
    n, a = H.dim, A.dim
    return chain(
        [inp.phi_A, inp.psi_H],
        [identity(n, F), flip(n, a, F), identity(a, F)],
        [H.comult, A.comult],
    )


def _gamma_crossing(inp: MatchedPairInput) -> LinMap:
    """Gamma_A^{H2} = (phi2 (x) H) . (H (x) c_{H,A}) . (comult_H (x) A)."""
    A, H = inp.A, inp.H
    F = H.field
    n, a = H.dim, A.dim
    return chain(
        [inp.phi2_A, identity(n, F)],
        [identity(n, F), flip(n, a, F)],
        [H.comult, identity(a, F)],
    )


def verify_matched_pair(inp: MatchedPairInput) -> Report:
    A, H = inp.A, inp.H
    F = H.field
    n, a = H.dim, A.dim
    IdH = identity(n, F)
    IdA = identity(a, F)
    rep = Report("matched pair")
    rep.add_bool("mp.base_cocommutative", is_cocommutative(H.coalgebra))
    rep.extend(module_coalgebra_report(H.h1, A.coalgebra, inp.phi_A, "phi"), prefix="phi.")
    # right A-module coalgebra structure on H1
    rep.add("psi.module_unit", chain(inp.psi_H, [IdH, A.unit]), IdH, "psi.(id(x)unit)", "id")
    rep.add(
        "psi.module_associativity",
        chain(inp.psi_H, [inp.psi_H, IdA]),
        chain(inp.psi_H, [IdH, A.mult]),
        "psi.(psi(x)id)",
        "psi.(id(x)mult)",
    )
    rep.add(
        "psi.counit_linear",
        compose(H.counit, inp.psi_H),
        tensor(H.counit, A.counit),
        "counit.psi",
        "counit(x)counit",
    )
    rep.add(
        "psi.comult_linear",
        compose(H.comult, inp.psi_H),
        chain([inp.psi_H, inp.psi_H], [IdH, flip(n, a, F), IdA], [H.comult, A.comult]),
        "comult.psi",
        "(psi(x)psi).comult_tensor",
    )
    psi_cross = _mp_crossing(inp)
    rep.add(
        "mp.phi_unit",
        chain(inp.phi_A, [IdH, A.unit]),
        tensor(H.counit, A.unit),
        "phi.(id(x)unit)",
        "counit(x)unit",
    )
    rep.add(
        "mp.psi_unit",
        chain(inp.psi_H, [H.unit1, IdA]),
        tensor(H.unit1, A.counit),
        "psi.(unit(x)id)",
        "unit(x)counit",
    )
    rep.add(
        "mp.phi_mult_twisted",
        chain(inp.phi_A, [IdH, A.mult]),
        chain(A.mult, [IdA, inp.phi_A], [psi_cross, IdA]),
        "phi.(id(x)mult)",
        "mult.(id(x)phi).(Psi(x)id)",
    )
    rep.add(
        "mp.psi_mult_twisted",
        chain(inp.psi_H, [H.mult1, IdA]),
        chain(H.mult1, [inp.psi_H, IdH], [IdH, psi_cross]),
        "psi.(mult1(x)id)",
        "mult1.(psi(x)id).(id(x)Psi)",
    )
    rep.add(
        "mp.crossing_symmetry",
        chain([inp.psi_H, inp.phi_A], [IdH, flip(n, a, F), IdA], [H.comult, A.comult]),
        compose(flip(a, n, F), psi_cross),
        "(psi(x)phi).comult_tensor",
        "c.Psi",
    )
    rep.extend(module_algebra_report(H.h2, A.algebra, inp.phi2_A, "phi2"), prefix="phi2.")
    rep.extend(module_coalgebra_report(H.h2, A.coalgebra, inp.phi2_A, "phi2"), prefix="phi2.")
    # the two compatibility equalities linking phi2 and psi to the brace
    conj1 = chain([H.mult2, IdH], [IdH, flip(n, n, F)], [H.comult, IdH])  # (mult2(x)H).(H(x)c).(comult(x)H)
    twist = chain(H.mult1, [IdH, H.antipode1])  # mult1.(H(x)antipode1)
    rep.add(
        "mp.phi2_from_phi",
        chain(inp.phi2_A, [IdH, inp.phi_A]),
        chain(inp.phi_A, [twist, inp.phi2_A], [IdH, H.comult, IdA], [conj1, IdA]),
        "phi2.(id(x)phi)",
        "phi.((mult1.(id(x)antipode1))(x)phi2).(id(x)comult(x)id).(conj(x)id)",
    )
    gamma_cross = _gamma_crossing(inp)
    rep.add(
        "mp.mult2_psi_compat",
        chain(H.mult2, [IdH, inp.psi_H]),
        chain(
            H.mult1,
            [inp.psi_H, IdH],
            [twist, gamma_cross],
            [IdH, H.comult, IdA],
            [conj1, IdA],
        ),
        "mult2.(id(x)psi)",
        "mult1.(psi(x)id).((mult1.(id(x)antipode1))(x)Gamma_cross).(id(x)comult(x)id).(conj(x)id)",
    )
    return rep


def matched_pair_hopf_brace(inp: MatchedPairInput) -> HopfBrace:
    rep = verify_matched_pair(inp)
    if not rep.ok:
        raise MatchedPairViolation(rep)
    A, H = inp.A, inp.H
    F = H.field
    n, a = H.dim, A.dim
    IdH = identity(n, F)
    IdA = identity(a, F)
    psi_cross = _mp_crossing(inp)
    gamma_cross = _gamma_crossing(inp)
    mult1 = chain([A.mult, H.mult1], [IdA, psi_cross, IdH])
    mult2 = chain([A.mult, H.mult2], [IdA, gamma_cross, IdH])
    comult = chain([IdA, flip(a, n, F), IdH], [A.comult, H.comult])
    counit = tensor(A.counit, H.counit)
    unit = tensor(A.unit, H.unit1)
    anti1 = chain(psi_cross, [H.antipode1, A.antipode], flip(a, n, F))
    anti2 = chain(gamma_cross, [H.antipode2, A.antipode], flip(a, n, F))
    return HopfBrace(a * n, counit, comult, unit, unit, mult1, mult2, anti1, anti2)
