"""Dynkin indices, Sugawara central charges, conformal weights and the conformal-embedding test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import DomainError
from .rootdata import (
    SimpleLieAlgebra,
    Weight,
    _labels,
    dim_algebra,
    dual_coxeter,
    highest_root,
    leveled,
    lie_algebra,
    normalized_form,
    orthogonal_algebra,
    weyl_dim,
)

# Defining representation of each classical target family: its dimension and
# its Dynkin index in the normalization (theta, theta) = 2.  sl_N and sp_2N
# fundamentals have index 1/2, so_N vectors index 1 (N >= 5).  The test suite
# re-derives these from dynkin_index_irrep.
DEFINING_REP_INDEX = {"A": Fraction(1, 2), "B": Fraction(1), "C": Fraction(1, 2), "D": Fraction(1)}


def defining_rep_dim(g: SimpleLieAlgebra) -> int:
    n = g.rank
    try:
        return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[g.family]
    except KeyError:
        raise DomainError(f"{g} has no defining representation in the classical table") from None


def defining_rep_weight(g: SimpleLieAlgebra) -> Weight:
    if g.family not in DEFINING_REP_INDEX:
        raise DomainError(f"{g} has no defining representation in the classical table")
    return (1,) + (0,) * (g.rank - 1)


def dynkin_index_irrep(g: SimpleLieAlgebra, lam: Sequence[int]) -> Fraction:
    """dim V_lam * (lam, lam + 2 rho) / (2 dim g)."""
    lam = _labels(lam)
    if any(x < 0 for x in lam):
        raise DomainError(f"weight {lam} is not dominant")
    shifted = tuple(x + 2 for x in lam)
    casimir = normalized_form(g, lam, shifted)
    return weyl_dim(g, lam) * casimir / (2 * dim_algebra(g))


@dataclass(frozen=True)
class EmbeddingSpec:
    """source -> target, described by how the target's defining representation restricts."""

    source: SimpleLieAlgebra
    target: SimpleLieAlgebra
    branching_of_defining_rep: tuple[tuple[Weight, int], ...]

    def __post_init__(self):
        total = sum(m * weyl_dim(self.source, w) for w, m in self.branching_of_defining_rep)
        if any(m < 0 for _, m in self.branching_of_defining_rep):
            raise DomainError("branching multiplicities must be non-negative")
        want = defining_rep_dim(self.target)
        if total != want:
            raise DomainError(
                f"branching of the defining rep of {self.target} has total dimension {total}, expected {want}"
            )


def adjoint_embedding(g: SimpleLieAlgebra | str) -> EmbeddingSpec:
    """ad: g -> so(dim g); the vector representation restricts to the adjoint."""
    g = lie_algebra(g)
    return EmbeddingSpec(g, orthogonal_algebra(dim_algebra(g)), ((highest_root(g), 1),))


def adjoint_into_sl(g: SimpleLieAlgebra | str) -> EmbeddingSpec:
    """g -> sl(dim g) through the adjoint representation."""
    g = lie_algebra(g)
    return EmbeddingSpec(g, lie_algebra("A", dim_algebra(g) - 1), ((highest_root(g), 1),))


def orthogonal_into_sl(n: int) -> EmbeddingSpec:
    """so(n) -> sl(n) by the vector representation."""
    so = orthogonal_algebra(n)
    return EmbeddingSpec(so, lie_algebra("A", n - 1), ((defining_rep_weight(so), 1),))


def dynkin_index_embedding(e: EmbeddingSpec) -> Fraction:
    total = sum((m * dynkin_index_irrep(e.source, w) for w, m in e.branching_of_defining_rep), Fraction(0))
    return total / DEFINING_REP_INDEX[e.target.family]


def central_charge(g: SimpleLieAlgebra, level: int | Fraction) -> Fraction:
    """Sugawara central charge l dim g / (l + h^vee)."""
    if level <= 0:
        raise DomainError(f"level must be positive, got {level}")
    level = Fraction(level)
    return level * dim_algebra(g) / (level + dual_coxeter(g))


@dataclass(frozen=True)
class ConformalCheck:
    conformal: bool
    lhs: Fraction
    rhs: Fraction
    index: Fraction

    def __bool__(self):
        return self.conformal


def is_conformal(e: EmbeddingSpec) -> ConformalCheck:
    """Compare the source central charge at level d_phi with the target's at level 1."""
    d = dynkin_index_embedding(e)
    lhs = d * dim_algebra(e.source) / (d + dual_coxeter(e.source))
    rhs = Fraction(dim_algebra(e.target), 1 + dual_coxeter(e.target))
    return ConformalCheck(lhs == rhs, lhs, rhs, d)


def conformal_weight(g: SimpleLieAlgebra, level: int, lam: Sequence[int]) -> Fraction:
    """L_0 eigenvalue (lam, lam + 2 rho) / (2 (l + h^vee)) on the top of H_{lam, l}."""
    lam = leveled(g, level, lam).weight
    shifted = tuple(x + 2 for x in lam)
    return normalized_form(g, lam, shifted) / (2 * (level + dual_coxeter(g)))
