import os
import subprocess
import sys

import numpy as np

from hopfbrace import kernels

P = 10007


def test_matmul_mod_matches_reference():
    rng = np.random.default_rng(3)
    a = rng.integers(0, P, size=(17, 9), dtype=np.int64)
    b = rng.integers(0, P, size=(9, 13), dtype=np.int64)
    got = kernels.matmul_mod(a, b, P)
    want = (a.astype(object) @ b.astype(object)) % P
    assert np.array_equal(got, want.astype(np.int64))


def test_matmul_mod_large_modulus_no_overflow():
    p = 2147483629
    rng = np.random.default_rng(4)
    a = rng.integers(0, p, size=(40, 40), dtype=np.int64)
    b = rng.integers(0, p, size=(40, 40), dtype=np.int64)
    got = kernels.matmul_mod(a, b, p)
    want = (a.astype(object) @ b.astype(object)) % p
    assert np.array_equal(got, want.astype(np.int64))


def test_rref_mod_properties():
    rng = np.random.default_rng(5)
    for _ in range(10):
        n, m = rng.integers(1, 8, size=2)
        mat = rng.integers(0, 7, size=(n, m), dtype=np.int64)
        reduced, pivots = kernels.rref_mod(mat.copy(), 7)
        # pivots are strictly increasing, pivot columns are unit vectors
        assert list(pivots) == sorted(set(pivots))
        for k, col in enumerate(pivots):
            e = np.zeros(n, dtype=np.int64)
            e[k] = 1
            assert np.array_equal(reduced[:, col], e)
        # rref is idempotent
        again, pivots2 = kernels.rref_mod(reduced.copy(), 7)
        assert np.array_equal(again, reduced)
        assert tuple(pivots2) == tuple(pivots)


def test_backends_agree():
    rng = np.random.default_rng(6)
    a = rng.integers(0, 101, size=(12, 12), dtype=np.int64)
    b = rng.integers(0, 101, size=(12, 12), dtype=np.int64)
    assert np.array_equal(kernels.matmul_mod(a, b, 101), kernels._py_matmul_mod(a, b, 101))
    r1, p1 = kernels.rref_mod(a.copy(), 101)
    r2, p2 = kernels._py_rref_mod(a.copy(), 101)
    assert np.array_equal(r1, r2)
    assert tuple(p1) == tuple(p2)


def test_pure_fallback_selectable():
    env = dict(os.environ, HOPFBRACE_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from hopfbrace.kernels import backend; print(backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    assert kernels.backend() in ("compiled", "python")
