"""Exact computations with cubic vertex-transitive graphs, their automorphism groups and base sizes."""

from .errors import CapExceeded, DegenerateMerge, HypothesisError
from .perm import Permutation, compose, identity, inverse
from .permgroup import BlockSystem, PermGroup, from_generators

__version__ = "0.1.0"

__all__ = [
    "BlockSystem",
    "CapExceeded",
    "DegenerateMerge",
    "HypothesisError",
    "PermGroup",
    "Permutation",
    "compose",
    "from_generators",
    "identity",
    "inverse",
]
