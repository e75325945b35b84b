"""Projections of Hopf braces: canonical idempotents, splitting through the
common coinvariant image, the induced structure on that image, the
strong / v1 / v2 / v3 / v4 hierarchy, and the roundtrip against bosonization."""

from __future__ import annotations

from dataclasses import dataclass

from .bosonize import YDHopfBrace, bosonize, is_bosonizable, verify_yd_hopf_brace
from .brace import (
    DerivedIdentityError,
    HopfBrace,
    _gamma_prime,
    verify_brace_morphism,
    verify_hopf_brace,
)
from .hopf import NotAProjection, adjoint_action, is_cocommutative, smash_crossing
from .linalg import LinMap, chain, compose, flip, identity, maps_equal, split_idempotent, tensor
from .report import Report
from .ydmod import (
    HBraceModule,
    WeakYDModule,
    YDWitnessSet,
    _h1_linearity_entry,
    default_witnesses,
    half_braiding,
    verify_weak_yd,
    verify_yd,
)


class ImagesDiffer(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"the two canonical idempotents have different images: "
                         f"{report.first_failure()}")


class HypothesisNotMet(ValueError):
    pass


class NotV4(ValueError):
    pass


@dataclass(frozen=True)
class HopfBraceProjection:
    H: HopfBrace
    D: HopfBrace
    x: LinMap  # dim H -> dim D
    y: LinMap  # dim D -> dim H


@dataclass(frozen=True)
class CoinvariantMaps:
    """The structure induced on the common image of the two idempotents."""

    unit: LinMap
    mult1: LinMap
    mult2: LinMap
    counit: LinMap
    comult: LinMap
    antipode1: LinMap
    antipode2: LinMap
    act1: LinMap
    act2: LinMap
    coact: LinMap


@dataclass(frozen=True)
class SplitProjection:
    source: HopfBraceProjection
    q1: LinMap
    q2: LinMap
    i: LinMap  # rank -> d
    p1: LinMap  # d -> rank
    p2: LinMap
    rank: int
    coinv: CoinvariantMaps

    @property
    def field(self):
        return self.source.H.field


def verify_projection(P: HopfBraceProjection, subject: str = "projection") -> Report:
    rep = Report(subject)
    rep.extend(verify_brace_morphism(P.x, P.H, P.D, subject), "x_")
    rep.extend(verify_brace_morphism(P.y, P.D, P.H, subject), "y_")
    rep.add(
        "projection.section",
        compose(P.y, P.x),
        identity(P.H.dim, P.H.field),
        "y.x",
        "id",
    )
    return rep


def identity_projection(H: HopfBrace) -> HopfBraceProjection:
    return HopfBraceProjection(H, H, identity(H.dim, H.field), identity(H.dim, H.field))


def bosonization_projection(A: YDHopfBrace) -> HopfBraceProjection:
    """The canonical projection carried by a bosonization: x = unit_A (x) H and
    y = counit_A (x) H."""
    H = A.base
    D = bosonize(A)
    IdH = identity(H.dim, H.field)
    return HopfBraceProjection(H, D, tensor(A.unit, IdH), tensor(A.counit, IdH))


def _canonical_idempotent(P: HopfBraceProjection, mult, antipode_h) -> LinMap:
    """id * (x . antipode_H . y) with respect to the given product of D."""
    D = P.D
    d = D.dim
    corr = compose(P.x, compose(antipode_h, P.y))
    return chain(mult, [identity(d, D.field), corr], D.comult)


def split_projection(P: HopfBraceProjection) -> SplitProjection:
    rep = verify_projection(P)
    if not rep.ok:
        raise NotAProjection(rep)
    H, D = P.H, P.D
    F = H.field
    d, n = D.dim, H.dim
    IdD = identity(d, F)
    IdH = identity(n, F)
    q1 = _canonical_idempotent(P, D.mult1, H.antipode1)
    q2 = _canonical_idempotent(P, D.mult2, H.antipode2)
    img = Report("idempotent images")
    img.add("split.q2_after_q1", compose(q2, q1), q1, "q2.q1", "q1")
    img.add("split.q1_after_q2", compose(q1, q2), q2, "q1.q2", "q2")
    if not img.ok:
        raise ImagesDiffer(img)
    sp = split_idempotent(q1)
    i, p1 = sp.i_map, sp.p_map
    r = sp.rank
    p2 = compose(p1, q2)
    Idr = identity(r, F)
    checks = Report("splitting")
    checks.add("split.q2_factorization", compose(i, p2), q2, "i.p2", "q2")
    checks.add("split.p2_section", compose(p2, i), Idr, "p2.i", "id")
    checks.add("split.p1_through_q1", compose(p2, q1), p1, "p2.q1", "p1")
    checks.add(
        "split.equalizer",
        chain([IdD, P.y], D.comult, i),
        tensor(i, H.unit1),
        "(id(x)y).comult.i",
        "i(x)unit_h",
    )
    for tag, q, p, mult in (("1", q1, p1, D.mult1), ("2", q2, p2, D.mult2)):
        checks.add(
            f"split.mult{tag}_absorbs_q{tag}",
            chain(p, mult, [IdD, q]),
            compose(p, mult),
            "p.mult.(id(x)q)",
            "p.mult",
        )
        checks.add(
            f"split.comult_absorbs_q{tag}",
            chain([IdD, q], D.comult, i),
            compose(D.comult, i),
            "(id(x)q).comult.i",
            "comult.i",
        )
    if not checks.ok:
        raise DerivedIdentityError(str(checks.first_failure()))
    unit1 = compose(p1, D.unit1)
    unit2 = compose(p2, D.unit1)
    act1 = chain(p1, D.mult1, [P.x, i])
    act2 = chain(p2, D.mult2, [P.x, i])
    coact1 = chain([P.y, p1], D.comult, i)
    coact2 = chain([P.y, p2], D.comult, i)
    derived = Report("induced structure")
    derived.add("split.unit_agreement", unit1, unit2, "p1.unit", "p2.unit")
    derived.add("split.coaction_agreement", coact1, coact2,
                "(y(x)p1).comult.i", "(y(x)p2).comult.i")
    for tag, q, p, act, ha in (("1", q1, p1, act1, D.h1), ("2", q2, p2, act2, D.h2)):
        derived.add(
            f"split.action{tag}_adjoint_pullback",
            compose(i, act),
            chain(adjoint_action(ha).action, [P.x, i]),
            f"i.act{tag}",
            "adjoint.(x(x)i)",
        )
    if not derived.ok:
        raise DerivedIdentityError(str(derived.first_failure()))
    coinv = CoinvariantMaps(
        unit=unit1,
        mult1=chain(p1, D.mult1, [i, i]),
        mult2=chain(p2, D.mult2, [i, i]),
        counit=compose(D.counit, i),
        comult=chain([p1, p1], D.comult, i),
        antipode1=chain(p1, D.antipode1, i),
        antipode2=chain(p2, D.antipode2, i),
        act1=act1,
        act2=act2,
        coact=coact1,
    )
    return SplitProjection(P, q1, q2, i, p1, p2, r, coinv)


def check_cocommutative_compat(S: SplitProjection,
                               subject: str = "cocommutative compatibility") -> Report:
    P = S.source
    D = P.D
    F = S.field
    d = D.dim
    IdD = identity(d, F)
    rep = Report(subject)
    rep.add(
        "cocompat.idempotent_comult_agreement",
        chain([S.q1, IdD], D.comult, S.i),
        chain([S.q2, IdD], D.comult, S.i),
        "(q1(x)id).comult.i",
        "(q2(x)id).comult.i",
    )
    if is_cocommutative(D.coalgebra):
        rep.add(
            "cocompat.q1_comult_morphism",
            compose(D.comult, S.q1),
            chain([S.q1, S.q1], D.comult),
            "comult.q1",
            "(q1(x)q1).comult",
        )
        rep.add(
            "cocompat.q1_counit_morphism",
            compose(D.counit, S.q1),
            D.counit,
            "counit.q1",
            "counit",
        )
        rep.add(
            "cocompat.induced_comult_agreement",
            S.coinv.comult,
            chain([S.p2, S.p2], D.comult, S.i),
            "(p1(x)p1).comult.i",
            "(p2(x)p2).comult.i",
        )
        rep.add(
            "cocompat.antipode1_restriction",
            compose(S.i, S.coinv.antipode1),
            compose(D.antipode1, S.i),
            "i.antipode1_coinv",
            "antipode1.i",
        )
    return rep


def coinvariant_weak_yd(S: SplitProjection) -> WeakYDModule:
    c = S.coinv
    return WeakYDModule(HBraceModule(S.source.H, S.rank, c.act1, c.act2), c.coact)


def aux_maps(S: SplitProjection):
    """The auxiliary morphisms used by the v2/v3 levels: r, alpha, beta on D
    and gamma on D (x) H."""
    P = S.source
    H, D = P.H, P.D
    F = S.field
    d, n = D.dim, H.dim
    IdD = identity(d, F)
    IdH = identity(n, F)
    xy = compose(P.x, P.y)
    r_d = chain(D.mult1, [xy, D.antipode1], D.comult)
    r_full = chain(S.q1, D.mult1, [xy, D.antipode1], D.comult, S.q1)
    if not maps_equal(r_d, r_full)[0]:
        raise DerivedIdentityError(
            "the convolution correction map does not absorb the idempotent"
        )
    alpha_d = chain(
        D.mult1,
        [compose(S.q2, D.mult2), r_d],
        [IdD, flip(d, d, F)],
        [D.comult, IdD],
    )
    beta_d = chain(D.mult1, [r_d, D.mult2], [D.comult, IdD])
    gamma_dh = chain(
        [D.mult1, IdH],
        [P.x, flip(n, d, F)],
        [compose(H.comult, _gamma_prime(H)), r_d],
        [P.y, flip(d, n, F)],
        [D.comult, IdH],
    )
    return {"r_d": r_d, "alpha_d": alpha_d, "beta_d": beta_d, "gamma_dh": gamma_dh}


@dataclass(frozen=True)
class ClassificationReport:
    """Monotone verdicts for the hierarchy; every level is always evaluated
    and keeps its full diagnostic report."""

    projection_ok: bool
    reports: dict  # level name -> Report
    verdicts: dict  # level name -> bool (monotone: includes previous levels)

    LEVELS = ("strong", "v1", "v2", "v3", "v4")

    @property
    def strong(self) -> bool:
        return self.verdicts["strong"]

    @property
    def v1(self) -> bool:
        return self.verdicts["v1"]

    @property
    def v2(self) -> bool:
        return self.verdicts["v2"]

    @property
    def v3(self) -> bool:
        return self.verdicts["v3"]

    @property
    def v4(self) -> bool:
        return self.verdicts["v4"]

    @property
    def level(self) -> str:
        best = "none"
        for name in self.LEVELS:
            if self.verdicts[name]:
                best = name
        return best

    def first_failure(self, level: str):
        return self.reports[level].first_failure()


def _strong_report(S: SplitProjection) -> Report:
    P = S.source
    H, D = P.H, P.D
    F = S.field
    d, n, r = D.dim, H.dim, S.rank
    IdD = identity(d, F)
    rep = Report("strong level")
    rep.add(
        "strong.idempotent_comult_agreement",
        chain([S.q1, IdD], D.comult, S.i),
        chain([S.q2, IdD], D.comult, S.i),
        "(q1(x)id).comult.i",
        "(q2(x)id).comult.i",
    )
    rep.add(
        "strong.mixed_action_agreement",
        chain(S.p1, D.mult2, [P.x, IdD]),
        chain(S.p2, D.mult2, [P.x, S.q1]),
        "p1.mult2.(x(x)id)",
        "p2.mult2.(x(x)q1)",
    )
    if rep.ok:
        c = S.coinv
        Idr = identity(r, F)
        psi2x = smash_crossing(H.h2, c.act2, r)
        rep.add(
            "strong.crossing_mult_exchange",
            chain([c.mult1, identity(n, F)], [Idr, psi2x], [psi2x, Idr]),
            chain(psi2x, [identity(n, F), c.mult1]),
            "(mult1(x)id).(id(x)crossing2).(crossing2(x)id)",
            "crossing2.(id(x)mult1)",
        )
        if is_cocommutative(H.coalgebra):
            IdH = identity(n, F)
            psi1x = smash_crossing(H.h1, c.act1, r)
            pre_gp = chain([_gamma_prime(H), IdH], [IdH, flip(n, n, F)], [H.comult, IdH])
            rep.add(
                "strong.mixed_mult_exchange",
                chain([Idr, H.mult1], [psi1x, H.mult2], [IdH, psi2x, IdH],
                      [pre_gp, Idr, IdH]),
                chain([Idr, H.mult2], [psi2x, H.mult1], [IdH, psi1x, IdH]),
                "(id(x)mult1_h).(crossing1(x)mult2_h).(id(x)crossing2(x)id).(twisted crossing(x)id(x)id)",
                "(id(x)mult2_h).(crossing2(x)mult1_h).(id(x)crossing1(x)id)",
            )
    return rep


def _v1_report(S: SplitProjection, witnesses: YDWitnessSet | None) -> Report:
    P = S.source
    H = P.H
    F = S.field
    n, r = H.dim, S.rank
    Idr = identity(r, F)
    W = coinvariant_weak_yd(S)
    rep = Report("v1 level")
    rep.add(
        "v1.coaction_mult_agreement",
        chain([H.mult1, Idr], [identity(n, F), flip(r, n, F)], [W.coact, identity(n, F)]),
        chain([H.mult2, Idr], [identity(n, F), flip(r, n, F)], [W.coact, identity(n, F)]),
        "(mult1_h(x)id).(id(x)c).(coact(x)id)",
        "(mult2_h(x)id).(id(x)c).(coact(x)id)",
    )
    members = witnesses if witnesses is not None else default_witnesses(W)
    for k, V in enumerate(members):
        t = half_braiding(W, V)
        _h1_linearity_entry(
            rep, f"v1.braiding_h1_linear.witness{k}_dim{V.carrier_dim}", t, W, V
        )
    if rep.ok:
        rep.extend(verify_weak_yd(W, "coinvariants"), "v1.")
        rep.extend(verify_yd(W, members, "coinvariants"), "v1.")
    return rep


def coinvariant_yd_brace(S: SplitProjection) -> YDHopfBrace:
    """The coinvariant Hopf brace living in the YD category of the base, with
    the action-twisted antipodes."""
    c = S.coinv
    W = coinvariant_weak_yd(S)
    F = S.field
    n, r = S.source.H.dim, S.rank
    anti1 = chain(c.act1, [identity(n, F), c.antipode1], c.coact)
    anti2 = chain(c.act2, [identity(n, F), c.antipode2], c.coact)
    return YDHopfBrace(W, c.unit, c.mult1, c.mult2, c.counit, c.comult, anti1, anti2)


def build_coinvariant_brace(S: SplitProjection, mode: str = "cocommutative"):
    """The Hopf brace induced on the coinvariants.

    In "cocommutative" mode (D cocommutative) the result is an ordinary
    verified HopfBrace with the restricted antipodes.  In "v2" mode (the
    classification reaches v2) it is a YDHopfBrace over the base, with the
    action-twisted antipodes.
    """
    c = S.coinv
    if mode == "cocommutative":
        if not is_cocommutative(S.source.D.coalgebra):
            raise HypothesisNotMet("D is not cocommutative")
        out = HopfBrace(S.rank, c.counit, c.comult, c.unit, c.unit,
                        c.mult1, c.mult2, c.antipode1, c.antipode2)
        rep = verify_hopf_brace(out, "coinvariant brace")
        if not rep.ok:
            raise DerivedIdentityError(str(rep.first_failure()))
        return out
    if mode == "v2":
        cls = classify(S)
        if not cls.v2:
            raise HypothesisNotMet(
                f"classification stops at {cls.level}: "
                f"{cls.first_failure('v2') or cls.first_failure('v1') or cls.first_failure('strong')}"
            )
        # the v2 level already ran the full YD-category verification
        return coinvariant_yd_brace(S)
    raise ValueError(f"unknown mode {mode!r}")


def _v2_report(S: SplitProjection) -> Report:
    P = S.source
    H, D = P.H, P.D
    F = S.field
    d, n, r = D.dim, H.dim, S.rank
    IdD = identity(d, F)
    Idr = identity(r, F)
    IdH = identity(n, F)
    c = S.coinv
    W = coinvariant_weak_yd(S)
    rep = Report("v2 level")
    rep.add(
        "v2.antipode1_h2_linear",
        compose(c.antipode1, c.act2),
        chain(c.act2, [IdH, c.antipode1]),
        "antipode1.act2",
        "act2.(id(x)antipode1)",
    )
    diag1 = chain([c.act1, c.act1], [IdH, flip(n, r, F), Idr], [H.comult, Idr, Idr])
    rep.add(
        "v2.mult2_h1_linear",
        compose(c.mult2, diag1),
        chain(c.act1, [IdH, c.mult2]),
        "mult2.act1_tensor",
        "act1.(id(x)mult2)",
    )
    rep.add(
        "v2.antipode2_h1_linear",
        compose(c.antipode2, c.act1),
        chain(c.act1, [IdH, c.antipode2]),
        "antipode2.act1",
        "act1.(id(x)antipode2)",
    )
    t = half_braiding(W, W)
    rep.add(
        "v2.comult_on_mult1_braided",
        compose(c.comult, c.mult1),
        chain([c.mult1, c.mult1], [Idr, t, Idr], [c.comult, c.comult]),
        "comult.mult1",
        "(mult1(x)mult1).(id(x)t(x)id).(comult(x)comult)",
    )
    aux = aux_maps(S)
    rep.add(
        "v2.brace_compatibility_descends",
        chain(S.p1, D.mult1, [aux["alpha_d"], D.mult2], [IdD, flip(d, d, F), IdD],
              [compose(D.comult, S.i), S.i, S.i]),
        chain(c.mult2, [Idr, c.mult1]),
        "p1.mult1.(alpha(x)mult2).(id(x)c(x)id).((comult.i)(x)i(x)i)",
        "mult2.(id(x)mult1)",
    )
    if rep.ok:
        A = coinvariant_yd_brace(S)
        rep.extend(verify_yd_hopf_brace(A, "coinvariant brace"), "v2.")
    return rep


def _v3_report(S: SplitProjection) -> Report:
    P = S.source
    H, D = P.H, P.D
    F = S.field
    d, n = D.dim, H.dim
    IdD = identity(d, F)
    IdH = identity(n, F)
    aux = aux_maps(S)
    rep = Report("v3 level")
    lhs = chain(
        [chain(S.p1, D.mult1), IdH],
        [IdD, flip(n, d, F)],
        [aux["gamma_dh"], D.mult2],
        [IdD, flip(d, n, F), IdD],
        [compose(D.comult, S.i), IdH, S.i],
    )
    inner = chain(
        [chain(S.q1, D.mult1, [P.x, IdD]), IdH],
        [IdH, flip(n, d, F)],
        [H.comult, S.i],
    )
    rhs = chain([compose(S.p1, aux["beta_d"]), IdH], [S.i, inner])
    rep.add(
        "v3.gamma_crossing_descends",
        lhs,
        rhs,
        "((p1.mult1)(x)id).(id(x)c).(gamma(x)mult2).(id(x)c(x)id).((comult.i)(x)id(x)i)",
        "((p1.beta)(x)id).(i(x)(((q1.mult1.(x(x)id))(x)id).(id(x)c).(comult_h(x)i)))",
    )
    if rep.ok:
        A = coinvariant_yd_brace(S)
        rep.extend(is_bosonizable(A, "coinvariant brace"), "v3.")
    return rep


def _v4_report(S: SplitProjection) -> Report:
    rep = Report("v4 level")
    rep.add("v4.idempotents_equal", S.q1, S.q2, "q1", "q2")
    return rep


def classify(S: SplitProjection, witnesses: YDWitnessSet | None = None) -> ClassificationReport:
    reports = {
        "strong": _strong_report(S),
        "v1": _v1_report(S, witnesses),
        "v2": _v2_report(S),
        "v3": _v3_report(S),
        "v4": _v4_report(S),
    }
    verdicts = {}
    previous = True
    for name in ClassificationReport.LEVELS:
        previous = previous and reports[name].ok
        verdicts[name] = previous
    out = ClassificationReport(True, reports, verdicts)
    if out.v4:
        reports["roundtrip"] = nu_roundtrip(S)
    return out


def nu_roundtrip(S: SplitProjection, subject: str = "roundtrip") -> Report:
    """Rebuild D from the coinvariants: bosonize the coinvariant brace and
    compare through the canonical isomorphism nu = (p (x) y) . comult."""
    if not maps_equal(S.q1, S.q2)[0]:
        raise NotV4("the two canonical idempotents differ")
    P = S.source
    H, D = P.H, P.D
    F = S.field
    A = coinvariant_yd_brace(S)
    B = bosonize(A)
    nu = chain([S.p1, P.y], D.comult)
    nu_inv = chain(D.mult1, [S.i, P.x])
    rep = Report(subject)
    rep.add("roundtrip.nu_section", compose(nu, nu_inv), identity(B.dim, F),
            "nu.nu_inv", "id")
    rep.add("roundtrip.nu_retraction", compose(nu_inv, nu), identity(D.dim, F),
            "nu_inv.nu", "id")
    rep.add(
        "roundtrip.inverse_mult_agreement",
        chain(D.mult1, [S.i, P.x]),
        chain(D.mult2, [S.i, P.x]),
        "mult1.(i(x)x)",
        "mult2.(i(x)x)",
    )
    rep.extend(verify_brace_morphism(nu, D, B, subject), "roundtrip.")
    return rep
