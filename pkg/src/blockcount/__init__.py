"""Exact representation theory of affine Lie algebras at desk scale."""

from .config import CapExceeded, CrossCheckError, DomainError, Limits, limits
from .rootdata import LeveledWeight, SimpleLieAlgebra, alcove, dual_coxeter, lie_algebra

__all__ = [
    "CapExceeded",
    "CrossCheckError",
    "DomainError",
    "LeveledWeight",
    "Limits",
    "SimpleLieAlgebra",
    "alcove",
    "dual_coxeter",
    "lie_algebra",
    "limits",
]

__version__ = "0.1.0"
