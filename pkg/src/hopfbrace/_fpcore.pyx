# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact kernels for matrices over prime fields (int64 residues)."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef long long _powmod(long long base, long long exp, long long p):
    cdef long long result = 1
    base %= p
    while exp > 0:
        if exp & 1:
            result = (result * base) % p
        base = (base * base) % p
        exp >>= 1
    return result


def matmul_mod(const long long[:, ::1] a, const long long[:, ::1] b, long long p):
    cdef Py_ssize_t n = a.shape[0], k = a.shape[1], m = b.shape[1]
    cdef Py_ssize_t i, j, t, pending
    cdef long long aval, bound, step
    out_arr = np.zeros((n, m), dtype=np.int64)
    row_arr = np.zeros(m, dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef long long[::1] row = row_arr
    bound = (p - 1) * (p - 1)
    step = (<long long>1 << 62) // bound if bound > 0 else k + 1
    if step < 1:
        step = 1
    # i-k-j order: contiguous over the rows of b, and rows of a are often
    # structurally sparse, so zero entries skip whole inner loops.
    for i in range(n):
        for j in range(m):
            row[j] = 0
        pending = 0
        for t in range(k):
            aval = a[i, t]
            if aval == 0:
                continue
            for j in range(m):
                row[j] += aval * b[t, j]
            pending += 1
            if pending >= step:
                for j in range(m):
                    row[j] %= p
                pending = 0
        for j in range(m):
            out[i, j] = row[j] % p
    return out_arr


def rref_mod(const long long[:, ::1] m, long long p):
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t lead = 0, col, i, j, piv
    cdef long long inv, factor, tmp
    r_arr = np.asarray(m).astype(np.int64) % p
    cdef long long[:, ::1] r = r_arr
    pivots = []
    for col in range(cols):
        if lead >= rows:
            break
        piv = -1
        for i in range(lead, rows):
            if r[i, col] % p != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != lead:
            for j in range(cols):
                tmp = r[lead, j]
                r[lead, j] = r[piv, j]
                r[piv, j] = tmp
        inv = _powmod(r[lead, col], p - 2, p)
        for j in range(cols):
            r[lead, j] = (r[lead, j] * inv) % p
        for i in range(rows):
            if i != lead and r[i, col] != 0:
                factor = r[i, col]
                for j in range(cols):
                    r[i, j] = (r[i, j] - factor * r[lead, j]) % p
                    if r[i, j] < 0:
                        r[i, j] += p
        pivots.append(col)
        lead += 1
    return r_arr, pivots
