"""Bundled example structures and brute-force enumeration with oracles:
group tables, skew braces, trivial and matched-pair Hopf braces, YD Hopf
braces and their canonical projections.  Every builtin entry is verified by
its kind's verifier the first time it is loaded."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import io
from .bosonize import (
    YDHopfBrace,
    crossing_identity_report,
    is_bosonizable,
    trivial_structure_yd_brace,
    verify_yd_hopf_brace,
)
from .brace import (
    HopfBrace,
    MatchedPairInput,
    SkewBrace,
    _group_table_report,
    hopf_brace_from_skew_brace,
    matched_pair_hopf_brace,
    trivial_brace,
    verify_hopf_brace,
    verify_matched_pair,
    verify_skew_brace,
)
from .fields import GF, QQ
from .hopf import group_algebra
from .linalg import LinMap, identity, tensor
from .projection import bosonization_projection, identity_projection, verify_projection
from .report import Report
from .ydmod import HBraceModule, WeakYDModule

ENUMERATION_CAP = 8


class CapExceeded(ValueError):
    pass


class UnknownName(KeyError):
    pass


@dataclass(frozen=True)
class GroupTable:
    order: int
    table: tuple  # tuple of row tuples
    identity: int = 0

    @staticmethod
    def from_rows(rows, identity=0) -> "GroupTable":
        t = tuple(tuple(int(v) for v in row) for row in rows)
        return GroupTable(len(t), t, identity)


def verify_group_table(g: GroupTable, subject: str = "group table") -> Report:
    rep = Report(subject)
    _group_table_report(np.asarray(g.table, dtype=np.int64), g.identity, rep, "group")
    return rep


# ---------------------------------------------------------------------------
# builtin groups (identity always at index 0)


def cyclic_table(n: int) -> GroupTable:
    return GroupTable.from_rows([[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    n, m = g.order, h.order
    rows = [
        [g.table[i1][j1] * m + h.table[i2][j2] for j1 in range(n) for j2 in range(m)]
        for i1 in range(n)
        for i2 in range(m)
    ]
    # row index layout matches: index = i1*m + i2
    rows = [rows[i1 * m + i2] for i1 in range(n) for i2 in range(m)]
    return GroupTable.from_rows(rows)


def symmetric3_table() -> GroupTable:
    perms = sorted(itertools.permutations(range(3)))
    mul = lambda p, q: tuple(p[q[k]] for k in range(3))
    return GroupTable.from_rows(
        [[perms.index(mul(p, q)) for q in perms] for p in perms]
    )


def dihedral4_table() -> GroupTable:
    # elements r^a s^b, index a + 4*b
    def mul(x, y):
        a1, b1 = x % 4, x // 4
        a2, b2 = y % 4, y // 4
        a = (a1 + (a2 if b1 == 0 else -a2)) % 4
        return a + 4 * ((b1 + b2) % 2)

    return GroupTable.from_rows([[mul(i, j) for j in range(8)] for i in range(8)])


def quaternion_table() -> GroupTable:
    # elements (axis, sign), axis in e,i,j,k; index = 2*axis + (0 if +1 else 1)
    prod = {
        ("e", "e"): ("e", 1), ("e", "i"): ("i", 1), ("e", "j"): ("j", 1), ("e", "k"): ("k", 1),
        ("i", "e"): ("i", 1), ("j", "e"): ("j", 1), ("k", "e"): ("k", 1),
        ("i", "i"): ("e", -1), ("j", "j"): ("e", -1), ("k", "k"): ("e", -1),
        ("i", "j"): ("k", 1), ("j", "i"): ("k", -1),
        ("j", "k"): ("i", 1), ("k", "j"): ("i", -1),
        ("k", "i"): ("j", 1), ("i", "k"): ("j", -1),
    }
    axes = ("e", "i", "j", "k")

    def mul(x, y):
        ax, sx = axes[x // 2], 1 - 2 * (x % 2)
        ay, sy = axes[y // 2], 1 - 2 * (y % 2)
        az, sz = prod[(ax, ay)]
        s = sx * sy * sz
        return 2 * axes.index(az) + (0 if s == 1 else 1)

    return GroupTable.from_rows([[mul(i, j) for j in range(8)] for i in range(8)])


BUILTIN_GROUPS = {
    "C1": lambda: cyclic_table(1),
    "C2": lambda: cyclic_table(2),
    "C3": lambda: cyclic_table(3),
    "C4": lambda: cyclic_table(4),
    "C2xC2": lambda: direct_product(cyclic_table(2), cyclic_table(2)),
    "C5": lambda: cyclic_table(5),
    "C6": lambda: cyclic_table(6),
    "S3": symmetric3_table,
    "C7": lambda: cyclic_table(7),
    "C8": lambda: cyclic_table(8),
    "C2xC4": lambda: direct_product(cyclic_table(2), cyclic_table(4)),
    "C2xC2xC2": lambda: direct_product(
        cyclic_table(2), direct_product(cyclic_table(2), cyclic_table(2))
    ),
    "D4": dihedral4_table,
    "Q8": quaternion_table,
}


# ---------------------------------------------------------------------------
# brute-force enumeration


def _assoc_ok_upto(rows, n, upto):
    """Associativity on all triples whose four products stay inside the
    first `upto` completed rows."""
    T = np.asarray(rows[:upto], dtype=np.int64)
    # triples (a, b, c): need a < upto, b < upto and (a.b) < upto
    prod_ab = T[:, :upto]  # a.b for b < upto
    mask = prod_ab < upto
    if not mask.any():
        return True
    a_idx, b_idx = np.nonzero(mask)
    lhs = T[prod_ab[a_idx, b_idx]]  # (a.b).c for all c
    rhs_inner = T[b_idx]  # b.c
    rhs = T[a_idx[:, None], rhs_inner]  # a.(b.c)
    return bool((lhs == rhs).all())


@lru_cache(maxsize=None)
def enumerate_group_tables(n: int):
    """All group tables on labels 0..n-1 with identity 0, in deterministic
    lexicographic order (not deduplicated up to relabeling)."""
    if n > ENUMERATION_CAP:
        raise CapExceeded(f"order {n} exceeds the enumeration cap {ENUMERATION_CAP}")
    if n == 0:
        return ()
    rows = [list(range(n))]
    out = []

    def fill_row(i):
        if i == n:
            out.append(GroupTable.from_rows([tuple(r) for r in rows]))
            return
        row = [-1] * n
        row[0] = i
        col_used = [set(rows[r][j] for r in range(i)) for j in range(n)]

        def fill_cell(j, used):
            if j == n:
                rows.append(row[:])
                if _assoc_ok_upto(rows, n, i + 1):
                    fill_row(i + 1)
                rows.pop()
                return
            for v in range(n):
                if v in used or v in col_used[j]:
                    continue
                row[j] = v
                used.add(v)
                fill_cell(j + 1, used)
                used.remove(v)
            row[j] = -1

        fill_cell(1, {i})

    fill_row(1)
    return tuple(out)


def _canonical_pair(dot, circ, n):
    """Lexicographically minimal simultaneous relabeling fixing the identity."""
    best = None
    dot_a = np.asarray(dot, dtype=np.int64)
    circ_a = np.asarray(circ, dtype=np.int64)
    for perm in itertools.permutations(range(1, n)):
        sigma = np.array((0,) + perm, dtype=np.int64)
        inv = np.empty(n, dtype=np.int64)
        inv[sigma] = np.arange(n)
        d = sigma[dot_a[inv][:, inv]]
        c = sigma[circ_a[inv][:, inv]]
        key = tuple(d.ravel()) + tuple(c.ravel())
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def enumerate_skew_braces(n: int):
    """All skew braces of order n (identity 0) up to simultaneous relabeling
    fixing the identity, in deterministic order."""
    if n > ENUMERATION_CAP:
        raise CapExceeded(f"order {n} exceeds the enumeration cap {ENUMERATION_CAP}")
    tables = enumerate_group_tables(n)
    arrays = [np.asarray(t.table, dtype=np.int64) for t in tables]
    invs = []
    for D in arrays:
        inv = np.empty(n, dtype=np.int64)
        for g in range(n):
            inv[g] = int(np.nonzero(D[g] == 0)[0][0])
        invs.append(inv)
    seen = {}
    for di, D in enumerate(arrays):
        inv = invs[di]
        for C in arrays:
            # circ[g, dot[h,t]] == dot[dot[circ[g,h], inv[g]], circ[g,t]]
            lhs = C[:, D]
            goh = C
            step = D[goh, inv[:, None]]
            rhs = D[step[:, :, None], C[:, None, :]]
            if not (lhs == rhs).all():
                continue
            key = _canonical_pair(tuple(map(tuple, D)), tuple(map(tuple, C)), n)
            if key not in seen:
                half = n * n
                dot_c = [key[r * n:(r + 1) * n] for r in range(n)]
                circ_c = [key[half + r * n:half + (r + 1) * n] for r in range(n)]
                seen[key] = SkewBrace.from_arrays(dot_c, circ_c)
    return tuple(seen[k] for k in sorted(seen))


# ---------------------------------------------------------------------------
# bundled example builders


def z4_radical_skew_brace() -> SkewBrace:
    dot = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    circ = [[(a + b + 2 * a * b) % 4 for b in range(4)] for a in range(4)]
    return SkewBrace.from_arrays(dot, circ)


def s3_conjugation_data(field):
    """F[S3] trivial brace, F[C3] Hopf algebra, the conjugation action of S3
    on its normal C3 and the trivial right action."""
    s3 = symmetric3_table().table
    n = 6
    inv = [next(j for j in range(n) if s3[i][j] == 0) for i in range(n)]
    c3set = [g for g in range(n) if s3[g][g] != 0 or g == 0]  # rotations: e, (012), (021)
    c3set = sorted(c3set)[:3]
    pos = {g: k for k, g in enumerate(c3set)}
    c3 = [[pos[s3[a][b]] for b in c3set] for a in c3set]
    HA_s3 = group_algebra(n, s3, field)
    HA_c3 = group_algebra(3, c3, field)
    H = trivial_brace(HA_s3)
    phi = np.zeros((3, n * 3), dtype=np.int64)
    for g in range(n):
        for a in range(3):
            phi[pos[s3[s3[g][c3set[a]]][inv[g]]], g * 3 + a] = 1
    phi = LinMap(field, phi)
    psi = np.zeros((n, n * 3), dtype=np.int64)
    for g in range(n):
        for a in range(3):
            psi[g, g * 3 + a] = 1
    psi = LinMap(field, psi)
    return HA_c3, H, phi, psi


def yd_conjugation_brace(field) -> YDHopfBrace:
    """The trivial brace on F[C3] as a YD Hopf brace over F[S3] via
    conjugation, with trivial coaction."""
    HA_c3, H, phi, _ = s3_conjugation_data(field)
    A = trivial_brace(HA_c3)
    carrier = WeakYDModule(
        HBraceModule(H, 3, phi, phi), tensor(H.unit1, identity(3, field))
    )
    return YDHopfBrace(carrier, A.unit1, A.mult1, A.mult2, A.counit, A.comult,
                       A.antipode1, A.antipode2)


def matched_pair_input(field) -> MatchedPairInput:
    HA_c3, H, phi, psi = s3_conjugation_data(field)
    return MatchedPairInput(HA_c3, H, phi, psi, phi)


# ---------------------------------------------------------------------------
# the catalog proper


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    payload: dict
    note: str
    obj: object


def _verify_yd_entry(A: YDHopfBrace) -> Report:
    rep = verify_yd_hopf_brace(A)
    rep.extend(crossing_identity_report(A))
    rep.extend(is_bosonizable(A))
    return rep


def _entry_builders():
    builders = {}
    for gname, build in BUILTIN_GROUPS.items():
        builders[f"group_{gname}"] = (
            "group",
            lambda build=build: build(),
            lambda g: verify_group_table(g),
            lambda g: io.group_to_json(g.order, g.table, g.identity),
            "multiplication table with identity 0",
        )
    builders["sb_Z4_radical"] = (
        "skew_brace",
        z4_radical_skew_brace,
        verify_skew_brace,
        io.skew_brace_to_json,
        "order-4 skew brace from the ring 2Z/8Z; dot and circ differ",
    )
    for name, group, field_ in (
        ("triv_C2_Q", "C2", QQ),
        ("triv_C4_Q", "C4", QQ),
        ("triv_S3_F5", "S3", GF(5)),
    ):
        builders[name] = (
            "brace",
            lambda group=group, field_=field_: trivial_brace(
                group_algebra(BUILTIN_GROUPS[group]().order,
                              BUILTIN_GROUPS[group]().table, field_)
            ),
            verify_hopf_brace,
            io.brace_to_json,
            f"trivial brace on the group algebra of {group}",
        )
    builders["mp_S3_C3_F5"] = (
        "matched_pair",
        lambda: matched_pair_input(GF(5)),
        verify_matched_pair,
        io.matched_pair_to_json,
        "conjugation matched pair of S3 acting on its normal C3, trivial right action",
    )
    builders["brace_mp_S3_C3_F5"] = (
        "brace",
        lambda: matched_pair_hopf_brace(matched_pair_input(GF(5))),
        verify_hopf_brace,
        io.brace_to_json,
        "dim-18 Hopf brace built from the conjugation matched pair",
    )

    def yd_unit():
        F = GF(7)
        H = trivial_brace(group_algebra(2, cyclic_table(2).table, F))
        one = trivial_brace(group_algebra(1, [[0]], F))
        return trivial_structure_yd_brace(H, one)

    def yd_tensor():
        H = trivial_brace(group_algebra(2, cyclic_table(2).table, QQ))
        A = hopf_brace_from_skew_brace(z4_radical_skew_brace(), QQ)
        return trivial_structure_yd_brace(H, A)

    yd_names = {
        "yd_unit_C2_F7": (yd_unit, "one-dimensional carrier over F7[C2]"),
        "yd_tensor_Z4_C2_Q": (yd_tensor, "trivial crossings: Z4 radical brace over Q[C2]"),
        "yd_conj_S3_C3_F5": (lambda: yd_conjugation_brace(GF(5)),
                             "F5[C3] trivial brace with S3 conjugation action"),
    }
    for name, (build, note) in yd_names.items():
        builders[name] = ("yd_brace", build, _verify_yd_entry, io.yd_brace_to_json, note)
    builders["proj_identity_C2"] = (
        "projection",
        lambda: identity_projection(
            trivial_brace(group_algebra(2, cyclic_table(2).table, QQ))
        ),
        verify_projection,
        io.projection_to_json,
        "identity projection on the trivial brace over Q[C2]",
    )
    for ydname in yd_names:
        builders[f"proj_boson_{ydname}"] = (
            "projection",
            lambda ydname=ydname: bosonization_projection(builtin(ydname).obj),
            verify_projection,
            io.projection_to_json,
            f"canonical projection carried by the bosonization of {ydname}",
        )
    return builders


_BUILDERS = _entry_builders()


def list_names():
    return sorted(_BUILDERS)


@lru_cache(maxsize=None)
def builtin(name: str) -> CatalogEntry:
    if name not in _BUILDERS:
        raise UnknownName(name)
    kind, build, verify, to_json, note = _BUILDERS[name]
    obj = build()
    rep = verify(obj)
    if not rep.ok:
        raise ValueError(f"catalog entry {name!r} fails verification: "
                         f"{rep.first_failure()}")
    return CatalogEntry(name, kind, to_json(obj), note, obj)
