import numpy as np
import pytest

from hopfbrace import catalog
from hopfbrace.hopf import AlgebraData, CoalgebraData, HopfAlgebraData
from hopfbrace.linalg import LinMap
from hopfbrace.projection import classify, split_projection


def sweedler_hopf_algebra(field) -> HopfAlgebraData:
    """The four-dimensional non-commutative non-cocommutative Hopf algebra
    with basis 1, g, x, gx where g*g = 1, x*x = 0, x*g = -g*x."""
    mult = np.zeros((4, 16), dtype=np.int64)

    def put(a, b, basis, coeff=1):
        mult[basis, a * 4 + b] = coeff

    for b in range(4):
        put(0, b, b)
    for a in range(1, 4):
        put(a, 0, a)
    put(1, 1, 0)
    put(1, 2, 3)
    put(1, 3, 2)
    put(2, 1, 3, -1)
    put(3, 1, 2, -1)
    comult = np.zeros((16, 4), dtype=np.int64)
    comult[0, 0] = 1          # 1 -> 1 (x) 1
    comult[5, 1] = 1          # g -> g (x) g
    comult[8, 2] = 1          # x -> x (x) 1 ...
    comult[6, 2] = 1          # ... + g (x) x
    comult[13, 3] = 1         # gx -> gx (x) g ...
    comult[3, 3] = 1          # ... + 1 (x) gx
    counit = np.array([[1, 1, 0, 0]], dtype=np.int64)
    antipode = np.zeros((4, 4), dtype=np.int64)
    antipode[0, 0] = 1
    antipode[1, 1] = 1
    antipode[3, 2] = -1       # x -> -gx
    antipode[2, 3] = 1        # gx -> x
    unit = np.array([[1], [0], [0], [0]], dtype=np.int64)
    return HopfAlgebraData(
        AlgebraData(4, LinMap(field, unit), LinMap(field, mult)),
        CoalgebraData(4, LinMap(field, counit), LinMap(field, comult)),
        LinMap(field, antipode),
    )

BOSONIZABLE_NAMES = ("yd_unit_C2_F7", "yd_tensor_Z4_C2_Q", "yd_conj_S3_C3_F5")


@pytest.fixture(scope="session")
def boson_splits():
    """For each bundled bosonizable YD brace: the brace, its bosonization
    projection, the computed splitting and its classification."""
    out = {}
    for name in BOSONIZABLE_NAMES:
        A = catalog.builtin(name).obj
        P = catalog.builtin(f"proj_boson_{name}").obj
        S = split_projection(P)
        out[name] = (A, P, S, classify(S))
    return out
