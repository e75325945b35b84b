"""Modular-arithmetic matrix kernels with a compiled core and a numpy fallback.

The compiled extension (``hopfbrace._fpcore``) is used when it was built and
the environment variable HOPFBRACE_PURE is unset; otherwise pure numpy
implementations take over.  Both backends are exact.
"""

from __future__ import annotations

import os

import numpy as np

_fpcore = None
if os.environ.get("HOPFBRACE_PURE") != "1":
    try:
        from . import _fpcore  # type: ignore[attr-defined]
    except ImportError:
        _fpcore = None


def backend() -> str:
    return "compiled" if _fpcore is not None else "python"


def _py_matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64 product entries are < p**2; accumulate in chunks small enough
    # that sums never overflow, reducing mod p between chunks.
    bound = (p - 1) * (p - 1)
    step = max(1, (1 << 62) // max(bound, 1))
    k = a.shape[1]
    if k <= step:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, k, step):
        out = (out + a[:, s : s + step] @ b[s : s + step, :]) % p
    return out


def _py_rref_mod(m: np.ndarray, p: int):
    r = m.copy() % p
    rows, cols = r.shape
    pivots = []
    lead = 0
    for col in range(cols):
        if lead >= rows:
            break
        piv = None
        for i in range(lead, rows):
            if r[i, col] % p:
                piv = i
                break
        if piv is None:
            continue
        r[[lead, piv]] = r[[piv, lead]]
        inv = pow(int(r[lead, col]), p - 2, p)
        r[lead] = (r[lead] * inv) % p
        for i in range(rows):
            if i != lead and r[i, col]:
                r[i] = (r[i] - r[i, col] * r[lead]) % p
        pivots.append(col)
        lead += 1
    return r, pivots


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product of int64 matrices with entries reduced mod p."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    if _fpcore is not None:
        return np.asarray(_fpcore.matmul_mod(a, b, p))
    return _py_matmul_mod(a, b, p)


def rref_mod(m: np.ndarray, p: int):
    """Reduced row echelon form mod p with leftmost pivots.

    Returns (rref matrix, list of pivot columns).
    """
    m = np.ascontiguousarray(m, dtype=np.int64)
    if _fpcore is not None:
        r, pivots = _fpcore.rref_mod(m, p)
        return np.asarray(r), list(pivots)
    return _py_rref_mod(m, p)
