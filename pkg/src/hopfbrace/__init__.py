"""Exact structure-constant toolkit for Hopf braces and their projections."""

from .fields import FieldSpec, GF, QQ
from .linalg import (
    LinMap,
    SplitIdempotent,
    chain,
    compose,
    flip,
    identity,
    maps_equal,
    split_idempotent,
    tensor,
)
from .report import Report, merge

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "GF",
    "QQ",
    "LinMap",
    "SplitIdempotent",
    "chain",
    "compose",
    "flip",
    "identity",
    "maps_equal",
    "split_idempotent",
    "tensor",
    "Report",
    "merge",
    "__version__",
]
