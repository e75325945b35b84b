"""Structure-constant Hopf algebras: verifiers, convolution, adjoint
(co)actions, smash (co)products and Hopf algebra projections."""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldSpec
from .linalg import LinMap, chain, compose, flip, identity, maps_equal, split_idempotent, tensor
from .report import Report


class ModuleAlgebraViolation(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"module algebra laws fail: {report.first_failure()}")


class ComoduleCoalgebraViolation(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"comodule coalgebra laws fail: {report.first_failure()}")


class NotAProjection(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"projection laws fail: {report.first_failure()}")


class InvalidGroupTable(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraData:
    dim: int
    unit: LinMap  # 1 -> n
    mult: LinMap  # n^2 -> n

    @property
    def field(self):
        return self.mult.field


@dataclass(frozen=True)
class CoalgebraData:
    dim: int
    counit: LinMap  # n -> 1
    comult: LinMap  # n -> n^2

    @property
    def field(self):
        return self.comult.field


@dataclass(frozen=True)
class HopfAlgebraData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: LinMap  # n -> n

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def counit(self):
        return self.coalgebra.counit

    @property
    def comult(self):
        return self.coalgebra.comult


@dataclass(frozen=True)
class ModuleData:
    algebra: AlgebraData
    carrier_dim: int
    action: LinMap  # n*m -> m


@dataclass(frozen=True)
class ComoduleData:
    coalgebra: CoalgebraData
    carrier_dim: int
    coaction: LinMap  # m -> n*m


@dataclass(frozen=True)
class HopfProjection:
    X: HopfAlgebraData
    Y: HopfAlgebraData
    f: LinMap  # dim X -> dim Y
    h: LinMap  # dim Y -> dim X


@dataclass(frozen=True)
class YDHopfAlgebraData:
    """A Hopf algebra internal to the Yetter-Drinfeld category over X."""

    X: HopfAlgebraData
    dim: int
    action: LinMap  # n*a -> a
    coaction: LinMap  # a -> n*a
    unit: LinMap
    mult: LinMap
    counit: LinMap
    comult: LinMap
    antipode: LinMap

    @property
    def field(self):
        return self.X.field


def group_algebra(order: int, table, field: FieldSpec, identity_index: int = 0) -> HopfAlgebraData:
    """Hopf algebra of a finite group given by its multiplication table.

    Basis = group elements; the comultiplication is group-like and the
    antipode is inversion.  Identity element and two-sided inverses are
    validated; associativity is left to the verifier.
    """
    import numpy as np

    t = np.asarray(table, dtype=np.int64)
    if t.shape != (order, order):
        raise InvalidGroupTable(f"table must be {order}x{order}")
    e = identity_index
    if not (np.array_equal(t[e], np.arange(order)) and np.array_equal(t[:, e], np.arange(order))):
        raise InvalidGroupTable("designated identity is not an identity")
    inv = np.full(order, -1, dtype=np.int64)
    for g in range(order):
        hits = np.nonzero(t[g] == e)[0]
        if hits.size != 1 or t[hits[0], g] != e:
            raise InvalidGroupTable(f"element {g} has no two-sided inverse")
        inv[g] = hits[0]
    n = order
    mult = np.zeros((n, n * n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            mult[t[g, h], g * n + h] = 1
    comult = np.zeros((n * n, n), dtype=np.int64)
    for g in range(n):
        comult[g * n + g, g] = 1
    unit = np.zeros((n, 1), dtype=np.int64)
    unit[e, 0] = 1
    counit = np.ones((1, n), dtype=np.int64)
    anti = np.zeros((n, n), dtype=np.int64)
    for g in range(n):
        anti[inv[g], g] = 1
    return HopfAlgebraData(
        AlgebraData(n, LinMap(field, unit), LinMap(field, mult)),
        CoalgebraData(n, LinMap(field, counit), LinMap(field, comult)),
        LinMap(field, anti),
    )


def convolution(f: LinMap, g: LinMap, source: CoalgebraData, target: AlgebraData) -> LinMap:
    """f * g = mult . (f (x) g) . comult."""
    return chain(target.mult, [f, g], source.comult)


def unit_counit(target: AlgebraData, source: CoalgebraData) -> LinMap:
    """The convolution unit eta . eps."""
    return compose(target.unit, source.counit)


def verify_algebra(A: AlgebraData, subject: str = "algebra") -> Report:
    F = A.field
    n = A.dim
    Id = identity(n, F)
    rep = Report(subject)
    rep.add("algebra.unit_left", chain(A.mult, [A.unit, Id]), Id, "mult.(unit(x)id)", "id")
    rep.add("algebra.unit_right", chain(A.mult, [Id, A.unit]), Id, "mult.(id(x)unit)", "id")
    rep.add(
        "algebra.associativity",
        chain(A.mult, [A.mult, Id]),
        chain(A.mult, [Id, A.mult]),
        "mult.(mult(x)id)",
        "mult.(id(x)mult)",
    )
    return rep


def verify_coalgebra(C: CoalgebraData, subject: str = "coalgebra") -> Report:
    F = C.field
    n = C.dim
    Id = identity(n, F)
    rep = Report(subject)
    rep.add("coalgebra.counit_left", chain([C.counit, Id], C.comult), Id, "(counit(x)id).comult", "id")
    rep.add("coalgebra.counit_right", chain([Id, C.counit], C.comult), Id, "(id(x)counit).comult", "id")
    rep.add(
        "coalgebra.coassociativity",
        chain([C.comult, Id], C.comult),
        chain([Id, C.comult], C.comult),
        "(comult(x)id).comult",
        "(id(x)comult).comult",
    )
    return rep


def is_cocommutative(C: CoalgebraData) -> bool:
    return maps_equal(compose(flip(C.dim, C.dim, C.field), C.comult), C.comult)[0]


def is_commutative(A: AlgebraData) -> bool:
    return maps_equal(compose(A.mult, flip(A.dim, A.dim, A.field)), A.mult)[0]


def verify_bialgebra(H: HopfAlgebraData, subject: str = "bialgebra") -> Report:
    F = H.field
    n = H.dim
    Id = identity(n, F)
    rep = Report(subject)
    rep.extend(verify_algebra(H.algebra, subject))
    rep.extend(verify_coalgebra(H.coalgebra, subject))
    rep.add(
        "bialgebra.counit_on_unit",
        compose(H.counit, H.unit),
        identity(1, F),
        "counit.unit",
        "id_K",
    )
    rep.add(
        "bialgebra.counit_on_mult",
        compose(H.counit, H.mult),
        tensor(H.counit, H.counit),
        "counit.mult",
        "counit(x)counit",
    )
    rep.add(
        "bialgebra.comult_on_unit",
        compose(H.comult, H.unit),
        tensor(H.unit, H.unit),
        "comult.unit",
        "unit(x)unit",
    )
    rep.add(
        "bialgebra.comult_on_mult",
        chain(H.comult, H.mult),
        chain([H.mult, H.mult], [Id, flip(n, n, F), Id], [H.comult, H.comult]),
        "comult.mult",
        "(mult(x)mult).(id(x)c(x)id).(comult(x)comult)",
    )
    return rep


def verify_hopf_algebra(H: HopfAlgebraData, subject: str = "hopf algebra") -> Report:
    F = H.field
    n = H.dim
    Id = identity(n, F)
    cnn = flip(n, n, F)
    rep = verify_bialgebra(H, subject)
    ue = unit_counit(H.algebra, H.coalgebra)
    rep.add(
        "antipode.left",
        convolution(H.antipode, Id, H.coalgebra, H.algebra),
        ue,
        "antipode * id",
        "unit.counit",
    )
    rep.add(
        "antipode.right",
        convolution(Id, H.antipode, H.coalgebra, H.algebra),
        ue,
        "id * antipode",
        "unit.counit",
    )
    # derived consequences: anti(co)multiplicativity and (co)unit invariance
    rep.add(
        "antipode.antimultiplicative",
        compose(H.antipode, H.mult),
        chain(H.mult, [H.antipode, H.antipode], cnn),
        "antipode.mult",
        "mult.(antipode(x)antipode).c",
    )
    rep.add(
        "antipode.anticomultiplicative",
        compose(H.comult, H.antipode),
        chain(cnn, [H.antipode, H.antipode], H.comult),
        "comult.antipode",
        "c.(antipode(x)antipode).comult",
    )
    rep.add("antipode.fixes_unit", compose(H.antipode, H.unit), H.unit, "antipode.unit", "unit")
    rep.add("antipode.fixes_counit", compose(H.counit, H.antipode), H.counit, "counit.antipode", "counit")
    if is_cocommutative(H.coalgebra) or is_commutative(H.algebra):
        rep.add(
            "antipode.involutive",
            compose(H.antipode, H.antipode),
            Id,
            "antipode.antipode",
            "id",
        )
    return rep


# ---------------------------------------------------------------------------
# modules, comodules, Yetter-Drinfeld condition


def verify_module(alg: AlgebraData, action: LinMap, carrier_dim: int, subject="module") -> Report:
    F = alg.field
    Idm = identity(carrier_dim, F)
    Idn = identity(alg.dim, F)
    rep = Report(subject)
    rep.add("module.unit", chain(action, [alg.unit, Idm]), Idm, "act.(unit(x)id)", "id")
    rep.add(
        "module.associativity",
        chain(action, [Idn, action]),
        chain(action, [alg.mult, Idm]),
        "act.(id(x)act)",
        "act.(mult(x)id)",
    )
    return rep


def verify_comodule(coalg: CoalgebraData, coaction: LinMap, carrier_dim: int, subject="comodule") -> Report:
    F = coalg.field
    Idm = identity(carrier_dim, F)
    Idn = identity(coalg.dim, F)
    rep = Report(subject)
    rep.add("comodule.counit", chain([coalg.counit, Idm], coaction), Idm, "(counit(x)id).coact", "id")
    rep.add(
        "comodule.coassociativity",
        chain([coalg.comult, Idm], coaction),
        chain([Idn, coaction], coaction),
        "(comult(x)id).coact",
        "(id(x)coact).coact",
    )
    return rep


def yd_condition_report(H: HopfAlgebraData, action: LinMap, coaction: LinMap, m: int,
                        subject="yd", name="yd.compatibility") -> Report:
    F = H.field
    n = H.dim
    Idn = identity(n, F)
    Idm = identity(m, F)
    lhs = chain(
        [H.mult, Idm],
        [Idn, flip(m, n, F)],
        [compose(coaction, action), Idn],
        [Idn, flip(n, m, F)],
        [H.comult, Idm],
    )
    rhs = chain(
        [H.mult, action],
        [Idn, flip(n, n, F), Idm],
        [H.comult, coaction],
    )
    rep = Report(subject)
    rep.add(
        name,
        lhs,
        rhs,
        "(mult(x)id).(id(x)c).((coact.act)(x)id).(id(x)c).(comult(x)id)",
        "(mult(x)act).(id(x)c(x)id).(comult(x)coact)",
    )
    return rep


def verify_yd_module(H: HopfAlgebraData, action: LinMap, coaction: LinMap, m: int,
                     subject="yd module") -> Report:
    rep = Report(subject)
    rep.extend(verify_module(H.algebra, action, m, subject))
    rep.extend(verify_comodule(H.coalgebra, coaction, m, subject))
    rep.extend(yd_condition_report(H, action, coaction, m, subject))
    return rep


def yd_braiding(action_n: LinMap, coaction_m: LinMap, n: int, m_dim: int, v_dim: int,
                field: FieldSpec) -> LinMap:
    """t_{M,N} = (act_N (x) M) . (X (x) c_{M,N}) . (coact_M (x) N)."""
    Idm = identity(m_dim, field)
    Idv = identity(v_dim, field)
    return chain(
        [action_n, Idm],
        [identity(n, field), flip(m_dim, v_dim, field)],
        [coaction_m, Idv],
    )


def adjoint_action(H: HopfAlgebraData) -> ModuleData:
    """Conjugation-style action of H on itself; verified as a module and as
    the action half of a YD module with the regular coaction."""
    F = H.field
    n = H.dim
    Id = identity(n, F)
    act = chain(H.mult, [H.mult, H.antipode], [Id, flip(n, n, F)], [H.comult, Id])
    rep = verify_module(H.algebra, act, n)
    rep.extend(yd_condition_report(H, act, H.comult, n))
    if not rep.ok:
        raise ModuleAlgebraViolation(rep)
    return ModuleData(H.algebra, n, act)


def adjoint_coaction(H: HopfAlgebraData) -> ComoduleData:
    F = H.field
    n = H.dim
    Id = identity(n, F)
    coact = chain([H.mult, Id], [Id, flip(n, n, F)], [H.comult, H.antipode], H.comult)
    rep = verify_comodule(H.coalgebra, coact, n)
    rep.extend(yd_condition_report(H, H.mult, coact, n))
    if not rep.ok:
        raise ComoduleCoalgebraViolation(rep)
    return ComoduleData(H.coalgebra, n, coact)


def module_algebra_report(X: HopfAlgebraData, A: AlgebraData, action: LinMap,
                          subject="module algebra") -> Report:
    F = X.field
    n, a = X.dim, A.dim
    Idn = identity(n, F)
    Ida = identity(a, F)
    rep = Report(subject)
    rep.extend(verify_module(X.algebra, action, a, subject))
    rep.add(
        "modalg.unit_linear",
        chain(action, [Idn, A.unit]),
        tensor(X.counit, A.unit),
        "act.(id(x)unit)",
        "counit(x)unit",
    )
    rep.add(
        "modalg.mult_linear",
        chain(action, [Idn, A.mult]),
        chain(A.mult, [action, action], [Idn, flip(n, a, F), Ida], [X.comult, Ida, Ida]),
        "act.(id(x)mult)",
        "mult.(act(x)act).(id(x)c(x)id).(comult(x)id(x)id)",
    )
    return rep


def module_coalgebra_report(X: HopfAlgebraData, B: CoalgebraData, action: LinMap,
                            subject="module coalgebra") -> Report:
    F = X.field
    n, b = X.dim, B.dim
    Idn = identity(n, F)
    Idb = identity(b, F)
    rep = Report(subject)
    rep.extend(verify_module(X.algebra, action, b, subject))
    rep.add(
        "modcoalg.counit_linear",
        compose(B.counit, action),
        tensor(X.counit, B.counit),
        "counit.act",
        "counit(x)counit",
    )
    rep.add(
        "modcoalg.comult_linear",
        compose(B.comult, action),
        chain([action, action], [Idn, flip(n, b, F), Idb], [X.comult, Idb, Idb], [Idn, B.comult]),
        "comult.act",
        "(act(x)act).(id(x)c(x)id).(comult(x)id(x)id).(id(x)comult)",
    )
    return rep


def comodule_algebra_report(X: HopfAlgebraData, A: AlgebraData, coaction: LinMap,
                            subject="comodule algebra") -> Report:
    F = X.field
    n, a = X.dim, A.dim
    Idn = identity(n, F)
    Ida = identity(a, F)
    rep = Report(subject)
    rep.extend(verify_comodule(X.coalgebra, coaction, a, subject))
    rep.add(
        "comodalg.unit_colinear",
        compose(coaction, A.unit),
        tensor(X.unit, A.unit),
        "coact.unit",
        "unit(x)unit",
    )
    rep.add(
        "comodalg.mult_colinear",
        compose(coaction, A.mult),
        chain([Idn, A.mult], [X.mult, Ida, Ida], [Idn, flip(a, n, F), Ida], [coaction, coaction]),
        "coact.mult",
        "(id(x)mult).(mult(x)id(x)id).(id(x)c(x)id).(coact(x)coact)",
    )
    return rep


def comodule_coalgebra_report(X: HopfAlgebraData, B: CoalgebraData, coaction: LinMap,
                              subject="comodule coalgebra") -> Report:
    F = X.field
    n, b = X.dim, B.dim
    Idn = identity(n, F)
    Idb = identity(b, F)
    rep = Report(subject)
    rep.extend(verify_comodule(X.coalgebra, coaction, b, subject))
    rep.add(
        "comodcoalg.counit_colinear",
        chain([Idn, B.counit], coaction),
        tensor(X.unit, B.counit),
        "(id(x)counit).coact",
        "unit(x)counit",
    )
    rep.add(
        "comodcoalg.comult_colinear",
        chain([Idn, B.comult], coaction),
        chain([X.mult, Idb, Idb], [Idn, flip(b, n, F), Idb], [coaction, coaction], B.comult),
        "(id(x)comult).coact",
        "(mult(x)id(x)id).(id(x)c(x)id).(coact(x)coact).comult",
    )
    return rep


# ---------------------------------------------------------------------------
# smash product / smash coproduct


def smash_crossing(X: HopfAlgebraData, action: LinMap, a: int) -> LinMap:
    """Psi = (act (x) X) . (X (x) c_{X,A}) . (comult (x) A): X(x)A -> A(x)X."""
    F = X.field
    n = X.dim
    return chain(
        [action, identity(n, F)],
        [identity(n, F), flip(n, a, F)],
        [X.comult, identity(a, F)],
    )


def cosmash_crossing(X: HopfAlgebraData, coaction: LinMap, b: int) -> LinMap:
    """Omega = (mult (x) B) . (X (x) c_{B,X}) . (coact (x) X): B(x)X -> X(x)B."""
    F = X.field
    n = X.dim
    return chain(
        [X.mult, identity(b, F)],
        [identity(n, F), flip(b, n, F)],
        [coaction, identity(n, F)],
    )


def smash_product(X: HopfAlgebraData, A: AlgebraData, action: LinMap) -> AlgebraData:
    rep = module_algebra_report(X, A, action)
    if not rep.ok:
        raise ModuleAlgebraViolation(rep)
    F = X.field
    n, a = X.dim, A.dim
    psi = smash_crossing(X, action, a)
    mult = chain([A.mult, X.mult], [identity(a, F), psi, identity(n, F)])
    return AlgebraData(a * n, tensor(A.unit, X.unit), mult)


def smash_coproduct(X: HopfAlgebraData, B: CoalgebraData, coaction: LinMap) -> CoalgebraData:
    rep = comodule_coalgebra_report(X, B, coaction)
    if not rep.ok:
        raise ComoduleCoalgebraViolation(rep)
    F = X.field
    n, b = X.dim, B.dim
    omega = cosmash_crossing(X, coaction, b)
    comult = chain([identity(b, F), omega, identity(n, F)], [B.comult, X.comult])
    return CoalgebraData(b * n, tensor(B.counit, X.counit), comult)


# ---------------------------------------------------------------------------
# Hopf algebras in YD(X)


def verify_yd_hopf_algebra(S: YDHopfAlgebraData, subject="hopf algebra in YD") -> Report:
    F = S.field
    n, a = S.X.dim, S.dim
    Idn = identity(n, F)
    Ida = identity(a, F)
    A_alg = AlgebraData(a, S.unit, S.mult)
    A_coalg = CoalgebraData(a, S.counit, S.comult)
    rep = Report(subject)
    rep.extend(verify_algebra(A_alg, subject))
    rep.extend(verify_coalgebra(A_coalg, subject))
    rep.extend(yd_condition_report(S.X, S.action, S.coaction, a, subject))
    rep.extend(module_algebra_report(S.X, A_alg, S.action, subject))
    rep.extend(module_coalgebra_report(S.X, A_coalg, S.action, subject))
    rep.extend(comodule_algebra_report(S.X, A_alg, S.coaction, subject))
    rep.extend(comodule_coalgebra_report(S.X, A_coalg, S.coaction, subject))
    rep.add(
        "ydhopf.antipode_linear",
        chain(S.action, [Idn, S.antipode]),
        compose(S.antipode, S.action),
        "act.(id(x)antipode)",
        "antipode.act",
    )
    rep.add(
        "ydhopf.antipode_colinear",
        compose(S.coaction, S.antipode),
        chain([Idn, S.antipode], S.coaction),
        "coact.antipode",
        "(id(x)antipode).coact",
    )
    rep.add(
        "ydhopf.counit_on_unit", compose(S.counit, S.unit), identity(1, F), "counit.unit", "id_K"
    )
    rep.add(
        "ydhopf.counit_on_mult",
        compose(S.counit, S.mult),
        tensor(S.counit, S.counit),
        "counit.mult",
        "counit(x)counit",
    )
    rep.add(
        "ydhopf.comult_on_unit",
        compose(S.comult, S.unit),
        tensor(S.unit, S.unit),
        "comult.unit",
        "unit(x)unit",
    )
    t = yd_braiding(S.action, S.coaction, n, a, a, F)
    rep.add(
        "ydhopf.comult_on_mult_braided",
        chain(S.comult, S.mult),
        chain([S.mult, S.mult], [Ida, t, Ida], [S.comult, S.comult]),
        "comult.mult",
        "(mult(x)mult).(id(x)t(x)id).(comult(x)comult)",
    )
    ue = compose(S.unit, S.counit)
    rep.add(
        "ydhopf.antipode_left",
        chain(S.mult, [S.antipode, Ida], S.comult),
        ue,
        "antipode * id",
        "unit.counit",
    )
    rep.add(
        "ydhopf.antipode_right",
        chain(S.mult, [Ida, S.antipode], S.comult),
        ue,
        "id * antipode",
        "unit.counit",
    )
    return rep


# ---------------------------------------------------------------------------
# Hopf algebra projections


def hopf_morphism_report(g: LinMap, src: HopfAlgebraData, dst: HopfAlgebraData,
                         subject="hopf morphism") -> Report:
    rep = Report(subject)
    rep.add("morphism.mult", compose(g, src.mult), chain(dst.mult, [g, g]), "f.mult", "mult.(f(x)f)")
    rep.add("morphism.unit", compose(g, src.unit), dst.unit, "f.unit", "unit")
    rep.add("morphism.comult", compose(dst.comult, g), chain([g, g], src.comult), "comult.f", "(f(x)f).comult")
    rep.add("morphism.counit", compose(dst.counit, g), src.counit, "counit.f", "counit")
    return rep


@dataclass(frozen=True)
class ProjectionAnalysis:
    q: LinMap
    split: object  # SplitIdempotent
    coinvariants: YDHopfAlgebraData
    nu: LinMap
    nu_inv: LinMap
    report: Report


def analyze_hopf_projection(P: HopfProjection) -> ProjectionAnalysis:
    """Split the canonical idempotent of a Hopf algebra projection and verify
    the induced coinvariant structure and the bosonization isomorphism."""
    from .bosonize import hopf_bosonization

    X, Y, f, h = P.X, P.Y, P.f, P.h
    F = X.field
    nx, ny = X.dim, Y.dim
    pre = hopf_morphism_report(f, X, Y, "f")
    pre.extend(hopf_morphism_report(h, Y, X, "h"), prefix="h.")
    pre.add("retraction", compose(h, f), identity(nx, F), "h.f", "id")
    if not pre.ok:
        raise NotAProjection(pre)

    IdY = identity(ny, F)
    q = convolution(IdY, compose(f, compose(X.antipode, h)), Y.coalgebra, Y.algebra)
    sp = split_idempotent(q)
    i, p = sp.i_map, sp.p_map
    r = sp.rank
    Idr = identity(r, F)
    IdX = identity(nx, F)

    unit_I = compose(p, Y.unit)
    mult_I = chain(p, Y.mult, [i, i])
    counit_I = compose(Y.counit, i)
    comult_I = chain([p, p], Y.comult, i)
    act_I = chain(p, Y.mult, [f, i])
    coact_I = chain([h, p], Y.comult, i)
    anti_plain = chain(p, Y.antipode, i)
    anti_I = chain(act_I, [IdX, anti_plain], coact_I)
    coinv = YDHopfAlgebraData(X, r, act_I, coact_I, unit_I, mult_I, counit_I, comult_I, anti_I)

    rep = Report("hopf projection analysis")
    rep.extend(pre)
    rep.extend(verify_yd_hopf_algebra(coinv, "coinvariants"))
    rep.add(
        "projection.action_pullback",
        compose(i, act_I),
        chain(adjoint_action(Y).action, [f, i]),
        "i.act",
        "adjoint_act.(f(x)i)",
    )
    rep.add(
        "projection.mult_absorbs_q",
        chain(p, Y.mult, [IdY, q]),
        compose(p, Y.mult),
        "p.mult.(id(x)q)",
        "p.mult",
    )
    rep.add(
        "projection.comult_absorbs_q",
        chain([IdY, q], Y.comult, i),
        compose(Y.comult, i),
        "(id(x)q).comult.i",
        "comult.i",
    )
    boson = hopf_bosonization(coinv)
    nu = chain([p, h], Y.comult)
    nu_inv = chain(Y.mult, [i, f])
    rep.add("nu.right_inverse", compose(nu, nu_inv), identity(r * nx, F), "nu.nu_inv", "id")
    rep.add("nu.left_inverse", compose(nu_inv, nu), IdY, "nu_inv.nu", "id")
    rep.extend(hopf_morphism_report(nu, Y, boson, "nu"), prefix="nu.")
    # i is a coalgebra morphism iff the coinvariant coaction is trivial
    i_coalg = maps_equal(compose(Y.comult, i), chain([i, i], comult_I))[0]
    triv = maps_equal(coact_I, tensor(X.unit, Idr))[0]
    rep.add_bool("projection.i_coalgebra_iff_trivial_coaction", i_coalg == triv)
    if is_cocommutative(Y.coalgebra):
        rep.add(
            "projection.q_coalgebra_morphism",
            compose(Y.comult, q),
            chain([q, q], Y.comult),
            "comult.q",
            "(q(x)q).comult",
        )
        rep.add(
            "projection.antipode_restricts",
            compose(i, anti_plain),
            compose(Y.antipode, i),
            "i.antipode_I",
            "antipode.i",
        )
    return ProjectionAnalysis(q, sp, coinv, nu, nu_inv, rep)
