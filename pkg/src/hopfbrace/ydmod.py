"""Modules and (weak) Yetter-Drinfeld modules over a Hopf brace, their
tensor products, and the half braiding t with its checkable properties."""

from __future__ import annotations

from dataclasses import dataclass

from .brace import HopfBrace, DerivedIdentityError, _gamma, _gamma_prime
from .hopf import verify_comodule, verify_module, yd_condition_report
from .linalg import LinMap, chain, compose, flip, identity, maps_equal, rref, tensor
from .report import Report


class NotCocommutative(ValueError):
    pass


class NotAnAction(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"module laws fail: {report.first_failure()}")


@dataclass(frozen=True)
class HBraceModule:
    """A carrier with compatible actions of both multiplications."""

    brace: HopfBrace
    carrier_dim: int
    act1: LinMap  # n*m -> m
    act2: LinMap  # n*m -> m


@dataclass(frozen=True)
class WeakYDModule:
    module: HBraceModule
    coact: LinMap  # m -> n*m

    @property
    def brace(self) -> HopfBrace:
        return self.module.brace

    @property
    def carrier_dim(self) -> int:
        return self.module.carrier_dim

    @property
    def act1(self) -> LinMap:
        return self.module.act1

    @property
    def act2(self) -> LinMap:
        return self.module.act2


@dataclass(frozen=True)
class YDWitnessSet:
    """The finite family of weak YD modules used to test the
    universally-quantified half-braiding condition.

    The original condition quantifies over every weak YD module; checking a
    finite witness set is a documented approximation, so every report built
    from one states "against witnesses" rather than the universal claim.
    """

    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def gamma_m(M: HBraceModule) -> LinMap:
    """Gamma_M = act1 . (antipode1 (x) act2) . (comult (x) id)."""
    H = M.brace
    return chain(M.act1, [H.antipode1, M.act2], [H.comult, identity(M.carrier_dim, H.field)])


def verify_hbrace_module(M: HBraceModule, subject: str = "brace module") -> Report:
    H = M.brace
    F = H.field
    n, m = H.dim, M.carrier_dim
    Idn = identity(n, F)
    Idm = identity(m, F)
    c = flip(n, n, F)
    rep = Report(subject)
    rep.extend(verify_module(H.h1.algebra, M.act1, m, subject), prefix="act1.")
    rep.extend(verify_module(H.h2.algebra, M.act2, m, subject), prefix="act2.")
    g_m = gamma_m(M)
    lhs = chain(M.act2, [Idn, M.act1])
    rep.add(
        "bracemod.compatibility",
        lhs,
        chain(M.act1, [H.mult2, g_m], [Idn, c, Idm], [H.comult, Idn, Idm]),
        "act2.(id(x)act1)",
        "act1.(mult2(x)Gamma_M).(id(x)c(x)id).(comult(x)id(x)id)",
    )
    rep.add(
        "bracemod.compatibility_gamma_prime",
        lhs,
        chain(M.act1, [_gamma_prime(H), M.act2], [Idn, c, Idm], [H.comult, Idn, Idm]),
        "act2.(id(x)act1)",
        "act1.(Gamma'(x)act2).(id(x)c(x)id).(comult(x)id(x)id)",
    )
    rep.add(
        "bracemod.gamma_m_crossing",
        chain(g_m, [Idn, M.act1]),
        chain(M.act1, [_gamma(H), g_m], [Idn, c, Idm], [H.comult, Idn, Idm]),
        "Gamma_M.(id(x)act1)",
        "act1.(Gamma(x)Gamma_M).(id(x)c(x)id).(comult(x)id(x)id)",
    )
    rep.extend(verify_module(H.h2.algebra, g_m, m, subject), prefix="gamma_m.")
    return rep


def regular_module(H: HopfBrace) -> HBraceModule:
    return HBraceModule(H, H.dim, H.mult1, H.mult2)


def trivial_module(H: HopfBrace, m: int = 1) -> HBraceModule:
    act = tensor(H.counit, identity(m, H.field))
    return HBraceModule(H, m, act, act)


def _diag_action(H: HopfBrace, act_m: LinMap, act_n: LinMap, m: int, v: int) -> LinMap:
    F = H.field
    n = H.dim
    return chain(
        [act_m, act_n],
        [identity(n, F), flip(n, m, F), identity(v, F)],
        [H.comult, identity(m, F), identity(v, F)],
    )


def tensor_module(M: HBraceModule, N: HBraceModule) -> HBraceModule:
    H = M.brace
    F = H.field
    n = H.dim
    if not maps_equal(compose(flip(n, n, F), H.comult), H.comult)[0]:
        raise NotCocommutative("tensor modules need a cocommutative brace")
    m, v = M.carrier_dim, N.carrier_dim
    out = HBraceModule(
        H,
        m * v,
        _diag_action(H, M.act1, N.act1, m, v),
        _diag_action(H, M.act2, N.act2, m, v),
    )
    # Gamma of the tensor module must factor through the diagonal
    lhs = gamma_m(out)
    rhs = chain(
        [gamma_m(M), gamma_m(N)],
        [identity(n, F), flip(n, m, F), identity(v, F)],
        [H.comult, identity(m, F), identity(v, F)],
    )
    ok, w = maps_equal(lhs, rhs)
    if not ok:
        raise DerivedIdentityError(f"Gamma of the tensor module does not factor diagonally at {w}")
    return out


def verify_weak_yd(W: WeakYDModule, subject: str = "weak yd module") -> Report:
    H = W.brace
    F = H.field
    n, m = H.dim, W.carrier_dim
    Idn = identity(n, F)
    rep = Report(subject)
    rep.extend(verify_hbrace_module(W.module, subject))
    rep.extend(verify_comodule(H.coalgebra, W.coact, m, subject))
    rep.extend(yd_condition_report(H.h1, W.act1, W.coact, m, subject, "yd.compatibility_h1"))
    rep.extend(yd_condition_report(H.h2, W.act2, W.coact, m, subject, "yd.compatibility_h2"))
    cmh = flip(m, n, F)
    rep.add(
        "wyd.mult_coaction_agreement",
        chain([H.mult1, identity(m, F)], [Idn, cmh], [W.coact, Idn]),
        chain([H.mult2, identity(m, F)], [Idn, cmh], [W.coact, Idn]),
        "(mult1(x)id).(id(x)c).(coact(x)id)",
        "(mult2(x)id).(id(x)c).(coact(x)id)",
    )
    return rep


def unit_weak_yd(H: HopfBrace) -> WeakYDModule:
    return WeakYDModule(trivial_module(H, 1), H.unit1)


def canonical_weak_yd(H: HopfBrace) -> WeakYDModule:
    """The brace on its own carrier: trivial first action, second
    multiplication as second action, trivial coaction."""
    F = H.field
    Id = identity(H.dim, F)
    mod = HBraceModule(H, H.dim, tensor(H.counit, Id), H.mult2)
    return WeakYDModule(mod, tensor(H.unit1, Id))


def module_from_h2(act2: LinMap, H: HopfBrace, carrier_dim: int) -> WeakYDModule:
    """Induce a weak YD module from a bare second-structure action by taking
    the trivial first action and trivial coaction."""
    rep = verify_module(H.h2.algebra, act2, carrier_dim)
    if not rep.ok:
        raise NotAnAction(rep)
    F = H.field
    Idm = identity(carrier_dim, F)
    mod = HBraceModule(H, carrier_dim, tensor(H.counit, Idm), act2)
    return WeakYDModule(mod, tensor(H.unit1, Idm))


def tensor_weak_yd(W1: WeakYDModule, W2: WeakYDModule) -> WeakYDModule:
    H = W1.brace
    F = H.field
    n = H.dim
    m, v = W1.carrier_dim, W2.carrier_dim
    mod = tensor_module(W1.module, W2.module)
    Idm = identity(m, F)
    Idv = identity(v, F)
    coact = chain(
        [H.mult1, Idm, Idv],
        [identity(n, F), flip(m, n, F), Idv],
        [W1.coact, W2.coact],
    )
    alt = chain(
        [H.mult2, Idm, Idv],
        [identity(n, F), flip(m, n, F), Idv],
        [W1.coact, W2.coact],
    )
    ok, w = maps_equal(coact, alt)
    if not ok:
        raise DerivedIdentityError(f"tensor coaction differs between mult1 and mult2 at {w}")
    return WeakYDModule(mod, coact)


def half_braiding(W: WeakYDModule, V: WeakYDModule) -> LinMap:
    """t_{W,V} = (act2_V (x) W) . (H (x) c_{W,V}) . (coact_W (x) V)."""
    H = W.brace
    F = H.field
    m, v = W.carrier_dim, V.carrier_dim
    return chain(
        [V.act2, identity(m, F)],
        [identity(H.dim, F), flip(m, v, F)],
        [W.coact, identity(v, F)],
    )


def default_witnesses(W: WeakYDModule) -> YDWitnessSet:
    H = W.brace
    return YDWitnessSet((unit_weak_yd(H), canonical_weak_yd(H), W, tensor_weak_yd(W, W)))


def _h1_linearity_entry(rep, name, t, W, V):
    H = W.brace
    F = H.field
    n = H.dim
    m, v = W.carrier_dim, V.carrier_dim
    lhs = chain(_diag_action(H, V.act1, W.act1, v, m), [identity(n, F), t])
    rhs = chain(t, _diag_action(H, W.act1, V.act1, m, v))
    rep.add(name, lhs, rhs, "act1_tensor.(id(x)t)", "t.act1_tensor")


def _h2_linearity_entry(rep, name, t, W, V):
    H = W.brace
    F = H.field
    n = H.dim
    m, v = W.carrier_dim, V.carrier_dim
    lhs = chain(_diag_action(H, V.act2, W.act2, v, m), [identity(n, F), t])
    rhs = chain(t, _diag_action(H, W.act2, V.act2, m, v))
    rep.add(name, lhs, rhs, "act2_tensor.(id(x)t)", "t.act2_tensor")


def verify_yd(W: WeakYDModule, witnesses: YDWitnessSet | None = None,
              subject: str = "yd module against witnesses") -> Report:
    """Half-braiding linearity against the witness family.

    The defining condition quantifies over all weak YD modules; passing here
    certifies it only for the given witnesses.
    """
    H = W.brace
    F = H.field
    n, m = H.dim, W.carrier_dim
    if witnesses is None:
        witnesses = default_witnesses(W)
    rep = Report(subject)
    for k, V in enumerate(witnesses):
        t = half_braiding(W, V)
        tag = f"witness{k}_dim{V.carrier_dim}"
        _h1_linearity_entry(rep, f"braiding.h1_linear.{tag}", t, W, V)
        _h2_linearity_entry(rep, f"braiding.h2_linear.{tag}", t, W, V)
    rep.add(
        "braiding.long_dimodule",
        compose(W.coact, W.act1),
        chain([identity(n, F), W.act1], [flip(n, n, F), identity(m, F)], [identity(n, F), W.coact]),
        "coact.act1",
        "(id(x)act1).(c(x)id).(id(x)coact)",
    )
    return rep


def _is_invertible(t: LinMap) -> bool:
    if t.cod_dim != t.dom_dim:
        return False
    _, pivots = rref(t)
    return len(pivots) == t.dom_dim


def verify_braiding_properties(W: WeakYDModule, witnesses: YDWitnessSet | None = None,
                               morphisms=None,
                               subject: str = "braiding properties") -> Report:
    """Hexagon identities, naturality, invertibility and the Yang-Baxter
    equation for the half braiding of W, tested against witnesses."""
    H = W.brace
    F = H.field
    m = W.carrier_dim
    Idm = identity(m, F)
    if witnesses is None:
        witnesses = default_witnesses(W)
    rep = Report(subject)
    pairs = [(witnesses.members[0], W), (witnesses.members[1], W)]
    if len(witnesses.members) > 1:
        pairs.append((witnesses.members[1], witnesses.members[1]))
    for k, (N, P) in enumerate(pairs):
        v, w = N.carrier_dim, P.carrier_dim
        lhs = half_braiding(W, tensor_weak_yd(N, P))
        rhs = chain(
            [identity(v, F), half_braiding(W, P)],
            [half_braiding(W, N), identity(w, F)],
        )
        rep.add(
            f"braiding.hexagon.pair{k}_dims{v}x{w}",
            lhs,
            rhs,
            "t_{W,N(x)P}",
            "(N(x)t_{W,P}).(t_{W,N}(x)P)",
        )
    if morphisms is None:
        morphisms = [
            (H.counit, canonical_weak_yd(H), unit_weak_yd(H)),
            (Idm, W, W),
        ]
    for k, (f, src, dst) in enumerate(morphisms):
        lhs = chain([f, Idm], half_braiding(W, src))
        rhs = chain(half_braiding(W, dst), [Idm, f])
        rep.add(
            f"braiding.naturality.morphism{k}",
            lhs,
            rhs,
            "(f(x)W).t_{W,src}",
            "t_{W,dst}.(W(x)f)",
        )
    for k, V in enumerate(witnesses):
        rep.add_bool(
            f"braiding.invertible.witness{k}_dim{V.carrier_dim}",
            _is_invertible(half_braiding(W, V)),
        )
    t = half_braiding(W, W)
    rep.add(
        "braiding.yang_baxter",
        chain([t, Idm], [Idm, t], [t, Idm]),
        chain([Idm, t], [t, Idm], [Idm, t]),
        "(t(x)id).(id(x)t).(t(x)id)",
        "(id(x)t).(t(x)id).(id(x)t)",
    )
    return rep
