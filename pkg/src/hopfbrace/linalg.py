"""Exact dense linear maps between tensor powers of finite-dimensional spaces.

Every morphism of the toolkit is a LinMap: a cod_dim x dom_dim matrix of
exact scalars (Fractions over Q, int64 residues over F_p) under the global
row-major convention e_i (x) e_j  ->  flat index i*dim_second + j.

Besides compose/tensor/flip, the module provides `chain`, which evaluates a
composite written as stages of tensor factors.  Stages are applied one
tensor factor at a time (and permutation factors by index shuffles), which
keeps intermediates near the size of the final result instead of
materialising Kronecker products of whole stages.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .fields import FieldSpec


class DimensionMismatch(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class NotIdempotent(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not idempotent, first difference at {witness}")


def _normalize(field: FieldSpec, entries) -> np.ndarray:
    if field.is_prime_field:
        arr = np.asarray(entries)
        if arr.dtype == object:
            arr = np.vectorize(field.coerce, otypes=[np.int64])(arr)
        return np.asarray(arr, dtype=np.int64) % field.p
    arr = np.empty(np.shape(entries), dtype=object)
    src = np.asarray(entries, dtype=object)
    flat_src = src.ravel()
    flat = arr.ravel()
    for k in range(flat.size):
        flat[k] = Fraction(flat_src[k])
    return arr


class LinMap:
    """An exact matrix cod_dim x dom_dim over a fixed field."""

    __slots__ = ("field", "entries", "cod_dim", "dom_dim", "perm")

    def __init__(self, field: FieldSpec, entries, perm=None):
        arr = _normalize(field, entries)
        if arr.ndim != 2:
            raise DimensionMismatch(f"entries must be a matrix, got shape {arr.shape}")
        self.field = field
        self.entries = arr
        self.cod_dim, self.dom_dim = arr.shape
        self.perm = None if perm is None else np.asarray(perm, dtype=np.intp)
        arr.setflags(write=False)

    @classmethod
    def _wrap(cls, field, arr, perm=None):
        self = object.__new__(cls)
        self.field = field
        self.entries = arr
        self.cod_dim, self.dom_dim = arr.shape
        self.perm = perm
        arr.setflags(write=False)
        return self

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, rows)

    def __repr__(self):
        return f"LinMap({self.field.kind}, {self.cod_dim}x{self.dom_dim})"

    def is_square(self) -> bool:
        return self.cod_dim == self.dom_dim


def _zeros(field, shape):
    if field.is_prime_field:
        return np.zeros(shape, dtype=np.int64)
    arr = np.empty(shape, dtype=object)
    arr[...] = Fraction(0)
    return arr


def _eye(field, n):
    if field.is_prime_field:
        return np.eye(n, dtype=np.int64)
    arr = _zeros(field, (n, n))
    one = Fraction(1)
    for k in range(n):
        arr[k, k] = one
    return arr


def identity(n: int, field: FieldSpec) -> LinMap:
    return LinMap._wrap(field, _eye(field, n), perm=np.arange(n, dtype=np.intp))


def zero(cod_dim: int, dom_dim: int, field: FieldSpec) -> LinMap:
    return LinMap._wrap(field, _zeros(field, (cod_dim, dom_dim)))


def flip(m: int, n: int, field: FieldSpec) -> LinMap:
    """The symmetry c_{M,N}: e_i (x) e_j  ->  e_j (x) e_i (dims m, n)."""
    perm = np.arange(m * n, dtype=np.intp).reshape(m, n).T.ravel()
    mat = _zeros(field, (m * n, m * n))
    one = 1 if field.is_prime_field else Fraction(1)
    mat[np.arange(m * n), perm] = one
    return LinMap._wrap(field, mat, perm=perm)


def _check_same_field(f: LinMap, g: LinMap):
    if f.field != g.field:
        raise FieldMismatch(f"{f.field} vs {g.field}")


_I64_CAP = 1 << 62


def _int_view(arr: np.ndarray):
    """int64 copy of an object matrix if every entry is a bounded integer."""
    flat = arr.ravel()
    out = np.empty(flat.size, dtype=np.int64)
    for k in range(flat.size):
        v = flat[k]
        if isinstance(v, Fraction):
            if v.denominator != 1:
                return None
            v = v.numerator
        if not -_I64_CAP < v < _I64_CAP:
            return None
        out[k] = v
    return out.reshape(arr.shape)


def _mm(a: np.ndarray, b: np.ndarray, field: FieldSpec) -> np.ndarray:
    if field.is_prime_field:
        return kernels.matmul_mod(a, b, field.p)
    # rational maps are integer-valued in almost every structure-constant
    # computation; route those through an int64 matmul when sums cannot
    # overflow, falling back to exact object arithmetic otherwise
    ai = _int_view(a)
    if ai is not None:
        bi = _int_view(b)
        if bi is not None:
            ka = int(np.abs(ai).max(initial=0))
            kb = int(np.abs(bi).max(initial=0))
            if ka * kb * max(a.shape[1], 1) < _I64_CAP:
                return (ai @ bi).astype(object)
            return np.dot(ai.astype(object), bi.astype(object))
    return np.dot(a, b)


def compose(f: LinMap, g: LinMap) -> LinMap:
    """Matrix product f . g (g applied first)."""
    _check_same_field(f, g)
    if f.dom_dim != g.cod_dim:
        raise DimensionMismatch(f"cannot compose {f} with {g}")
    if f.perm is not None:
        out = g.entries[f.perm].copy()
        perm = g.perm[f.perm].copy() if g.perm is not None else None
        return LinMap._wrap(f.field, out, perm=perm)
    if g.perm is not None:
        inv = np.argsort(g.perm)
        return LinMap._wrap(f.field, f.entries[:, inv].copy())
    return LinMap._wrap(f.field, _mm(f.entries, g.entries, f.field))


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product under the row-major basis ordering."""
    _check_same_field(f, g)
    perm = None
    if f.perm is not None and g.perm is not None:
        perm = (f.perm[:, None] * g.dom_dim + g.perm[None, :]).ravel()
    out = np.kron(f.entries, g.entries)
    if f.field.is_prime_field:
        out = out % f.field.p
    return LinMap._wrap(f.field, out, perm=perm)


def maps_equal(f: LinMap, g: LinMap):
    """Exact entrywise equality; on failure, the first differing entry."""
    _check_same_field(f, g)
    if (f.cod_dim, f.dom_dim) != (g.cod_dim, g.dom_dim):
        raise DimensionMismatch(f"{f} vs {g}")
    if f.field.is_prime_field:
        diff = f.entries != g.entries
    else:
        diff = np.not_equal(f.entries, g.entries).astype(bool)
    if not diff.any():
        return True, None
    row, col = np.unravel_index(int(np.argmax(diff)), diff.shape)
    witness = (
        int(row),
        int(col),
        f.field.scalar_str(f.entries[row, col]),
        f.field.scalar_str(g.entries[row, col]),
    )
    return False, witness


# ---------------------------------------------------------------------------
# rref / idempotent splitting


def frac_rref(mat: np.ndarray):
    """Reduced row echelon form over Q with leftmost pivots."""
    r = mat.astype(object).copy()
    rows, cols = r.shape
    pivots = []
    lead = 0
    for col in range(cols):
        if lead >= rows:
            break
        piv = None
        for i in range(lead, rows):
            if r[i, col] != 0:
                piv = i
                break
        if piv is None:
            continue
        r[[lead, piv]] = r[[piv, lead]]
        r[lead] = r[lead] * (Fraction(1) / r[lead, col])
        for i in range(rows):
            if i != lead and r[i, col] != 0:
                r[i] = r[i] - r[i, col] * r[lead]
        pivots.append(col)
        lead += 1
    return r, pivots


def rref(f: LinMap):
    if f.field.is_prime_field:
        return kernels.rref_mod(f.entries, f.field.p)
    return frac_rref(f.entries)


@dataclass(frozen=True)
class SplitIdempotent:
    q: LinMap
    p_map: LinMap
    i_map: LinMap
    rank: int


def split_idempotent(q: LinMap) -> SplitIdempotent:
    """Deterministic rank factorization q = i . p with p . i = id.

    i's columns are the leftmost pivot columns of q; p is the pivot-row
    block of the reduced row echelon form, so q = q[:, pivots] . rref-rows.
    """
    if not q.is_square():
        raise DimensionMismatch("idempotent must be square")
    qq = compose(q, q)
    equal, witness = maps_equal(qq, q)
    if not equal:
        raise NotIdempotent(witness)
    r, pivots = rref(q)
    rank = len(pivots)
    if rank == 0:
        # zero idempotent: empty factorization is legal but useless downstream;
        # keep 0-dim maps for completeness.
        i_map = LinMap._wrap(q.field, _zeros(q.field, (q.dom_dim, 0)))
        p_map = LinMap._wrap(q.field, _zeros(q.field, (0, q.dom_dim)))
        return SplitIdempotent(q, p_map, i_map, 0)
    i_map = LinMap._wrap(q.field, q.entries[:, pivots].copy())
    p_map = LinMap._wrap(q.field, r[:rank, :].copy())
    # defensive: the factorization identities are cheap to confirm
    ok_ip, w = maps_equal(compose(i_map, p_map), q)
    ok_pi, w2 = maps_equal(compose(p_map, i_map), identity(rank, q.field))
    if not (ok_ip and ok_pi):
        raise NotIdempotent(w or w2)
    return SplitIdempotent(q, p_map, i_map, rank)


# ---------------------------------------------------------------------------
# staged composition


def _as_stage(stage):
    if isinstance(stage, LinMap):
        return [stage]
    return list(stage)


def _elementary(stages):
    """Split each tensor stage into single-factor stages (pre, f, post).

    (f1 (x) f2) = (f1 (x) id) . (id (x) f2); the identity blocks on the left
    of the factor use the factor's domain dim (already rewritten), the ones
    on the right the codomain dim (not yet rewritten).
    """
    elems = []
    for stage in stages:
        factors = _as_stage(stage)
        doms = [f.dom_dim for f in factors]
        cods = [f.cod_dim for f in factors]
        for j, f in enumerate(factors):
            pre = int(np.prod(doms[:j], dtype=np.int64)) if j else 1
            post = int(np.prod(cods[j + 1 :], dtype=np.int64)) if j + 1 < len(factors) else 1
            if f.perm is not None and np.array_equal(f.perm, np.arange(f.dom_dim)):
                continue  # identity factor: no-op stage
            elems.append((pre, f, post))
    return elems


def _materialize(field, pre, f, post):
    arr = f.entries
    if pre > 1:
        arr = np.kron(_eye(field, pre), arr)
    if post > 1:
        arr = np.kron(arr, _eye(field, post))
    return np.ascontiguousarray(arr)


def _apply_elem_left(field, elem, cur):
    """(id_pre (x) f (x) id_post) . cur, applied to the rows of cur."""
    pre, f, post = elem
    rows, cols = cur.shape
    x = cur.reshape(pre, f.dom_dim, post * cols)
    if f.perm is not None:
        out = x[:, f.perm, :]
    else:
        xm = np.moveaxis(x, 1, 0).reshape(f.dom_dim, pre * post * cols)
        ym = _mm(f.entries, xm, field)
        out = np.moveaxis(ym.reshape(f.cod_dim, pre, post * cols), 0, 1)
    return np.ascontiguousarray(out).reshape(pre * f.cod_dim * post, cols)


def _apply_elem_right(field, cur, elem):
    """cur . (id_pre (x) f (x) id_post), applied to the columns of cur."""
    pre, f, post = elem
    rows, cols = cur.shape
    x = cur.reshape(rows * pre, f.cod_dim, post)
    if f.perm is not None:
        inv = np.argsort(f.perm)
        out = x[:, inv, :]
    else:
        xm = np.moveaxis(x, 1, 2).reshape(rows * pre * post, f.cod_dim)
        ym = _mm(xm, f.entries, field)
        out = np.moveaxis(ym.reshape(rows * pre, post, f.dom_dim), 2, 1)
    return np.ascontiguousarray(out).reshape(rows, pre * f.dom_dim * post)


def chain(*stages, field: FieldSpec | None = None) -> LinMap:
    """Evaluate stages[0] . stages[1] . ... (rightmost stage applied first).

    Each stage is a LinMap or a sequence of LinMaps meaning their tensor
    product.  Evaluation starts at the cheapest stage and grows outward,
    choosing at each step the side that keeps the running matrix smallest.
    """
    norm = [_as_stage(s) for s in stages]
    if not norm:
        raise DimensionMismatch("chain needs at least one stage")
    if field is None:
        field = norm[0][0].field
    for stage in norm:
        for f in stage:
            if f.field != field:
                raise FieldMismatch("mixed fields in chain")
    # interface checks
    for k in range(len(norm) - 1):
        upper = int(np.prod([f.dom_dim for f in norm[k]], dtype=np.int64))
        lower = int(np.prod([f.cod_dim for f in norm[k + 1]], dtype=np.int64))
        if upper != lower:
            raise DimensionMismatch(
                f"stage {k} domain {upper} != stage {k + 1} codomain {lower}"
            )
    total_cod = int(np.prod([f.cod_dim for f in norm[0]], dtype=np.int64))
    total_dom = int(np.prod([f.dom_dim for f in norm[-1]], dtype=np.int64))
    elems = _elementary(norm)
    if not elems:
        return identity(total_dom, field)

    def start_cost(elem):
        pre, f, post = elem
        size = pre * f.cod_dim * post * pre * f.dom_dim * post
        return size * (64 if f.perm is not None else 1)

    s = min(range(len(elems)), key=lambda k: start_cost(elems[k]))
    pre, f, post = elems[s]
    cur = _materialize(field, pre, f, post)
    a = b = s
    while a > 0 or b < len(elems) - 1:
        left_size = None
        right_size = None
        if a > 0:
            lp, lf, lpost = elems[a - 1]
            left_size = lp * lf.cod_dim * lpost * cur.shape[1]
        if b < len(elems) - 1:
            rp, rf, rpost = elems[b + 1]
            right_size = cur.shape[0] * rp * rf.dom_dim * rpost
        if right_size is None or (left_size is not None and left_size <= right_size):
            cur = _apply_elem_left(field, elems[a - 1], cur)
            a -= 1
        else:
            cur = _apply_elem_right(field, cur, elems[b + 1])
            b += 1
    assert cur.shape == (total_cod, total_dom)
    return LinMap._wrap(field, cur)
