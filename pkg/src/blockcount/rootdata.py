"""Root systems and weight lattices of the simple Lie algebras, in exact arithmetic.

Conventions
-----------
* Bourbaki numbering of simple roots for every family.
* Cartan matrix ``A[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``,
  so ``B2 = [[2, -1], [-2, 2]]`` (alpha_2 short) and ``G2 = [[2, -3], [-1, 2]]`` (alpha_1 short).
* Weights are integer tuples of Dynkin labels (fundamental-weight coordinates).
  The simple root ``alpha_j`` has labels ``A[:, j]``.
* The invariant form is normalized so that long roots, and in particular the
  highest root, have squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Sequence

from .config import CapExceeded, DomainError, limits

Weight = tuple[int, ...]

_FAMILIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class SimpleLieAlgebra:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in _FAMILIES or not isinstance(n, int):
            raise DomainError(f"unknown simple Lie algebra {f}{n}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            raise DomainError(f"invalid rank {n} for family {f} (use lie_algebra() for aliases)")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name


def lie_algebra(family: str | SimpleLieAlgebra, rank: int | None = None) -> SimpleLieAlgebra:
    """Parse ``"B3"``, ``("B", 3)``, ``"so7"``, ``"sl3"`` or ``"sp4"`` into a canonical algebra.

    B1 and C1 become A1, D3 becomes A3, D2 is rejected since so4 is not simple.
    """
    if isinstance(family, SimpleLieAlgebra):
        return family
    if rank is None:
        token = family.strip()
        m = re.fullmatch(r"([A-Ga-g])(\d+)", token)
        if m:
            family, rank = m.group(1).upper(), int(m.group(2))
        else:
            m = re.fullmatch(r"(so|sl|sp|su)\((\d+)\)|(so|sl|sp|su)(\d+)", token.lower())
            if not m:
                raise DomainError(f"cannot parse algebra descriptor {token!r}")
            kind = m.group(1) or m.group(3)
            n = int(m.group(2) or m.group(4))
            if kind in ("sl", "su"):
                if n < 2:
                    raise DomainError(f"{token!r}: sl_n needs n >= 2")
                family, rank = "A", n - 1
            elif kind == "sp":
                if n < 2 or n % 2:
                    raise DomainError(f"{token!r}: sp_n needs even n >= 2")
                family, rank = "C", n // 2
            else:
                if n < 3:
                    raise DomainError(f"{token!r}: so_n needs n >= 3")
                family, rank = ("B", (n - 1) // 2) if n % 2 else ("D", n // 2)
    family = family.upper()
    if family in ("B", "C") and rank == 1:
        family = "A"
    elif family == "D" and rank == 3:
        family = "A"
    elif family == "D" and rank == 2:
        raise DomainError("D2 = so4 is not simple")
    elif family == "D" and rank == 1:
        raise DomainError("D1 = so2 is not simple")
    return SimpleLieAlgebra(family, rank)


def orthogonal_algebra(n: int) -> SimpleLieAlgebra:
    """so(n) as a canonical simple algebra."""
    return lie_algebra(f"so{n}")


# ---------------------------------------------------------------------------
# Dynkin diagram data


def _diagram(g: SimpleLieAlgebra) -> tuple[list[tuple[int, int]], list[Fraction]]:
    """Edges (0-based) and half squared lengths d_i = (alpha_i, alpha_i)/2."""
    f, n = g.family, g.rank
    one, half, third = Fraction(1), Fraction(1, 2), Fraction(1, 3)
    chain = [(i, i + 1) for i in range(n - 1)]
    if f == "A":
        return chain, [one] * n
    if f == "B":
        return chain, [one] * (n - 1) + [half]
    if f == "C":
        return chain, [half] * (n - 1) + [one]
    if f == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)], [one] * n
    if f == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        return edges, [one] * n
    if f == "F":
        return chain, [one, one, half, half]
    if f == "G":
        return chain, [third, one]
    raise AssertionError(f)


@lru_cache(maxsize=None)
def root_halfnorms(g: SimpleLieAlgebra) -> tuple[Fraction, ...]:
    return tuple(_diagram(g)[1])


@lru_cache(maxsize=None)
def symmetrized_cartan(g: SimpleLieAlgebra) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots in the normalized form."""
    edges, d = _diagram(g)
    n = g.rank
    B = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        B[i][i] = 2 * d[i]
    for i, j in edges:
        B[i][j] = B[j][i] = -max(d[i], d[j])
    return tuple(tuple(r) for r in B)


@lru_cache(maxsize=None)
def cartan_matrix(g: SimpleLieAlgebra) -> tuple[tuple[int, ...], ...]:
    """Finite-type Cartan matrix, Bourbaki numbering."""
    g = lie_algebra(g)
    B = symmetrized_cartan(g)
    d = root_halfnorms(g)
    A = []
    for i in range(g.rank):
        row = []
        for j in range(g.rank):
            a = B[i][j] / d[i]
            assert a.denominator == 1
            row.append(int(a))
        A.append(tuple(row))
    return tuple(A)


def simple_root(g: SimpleLieAlgebra, j: int) -> Weight:
    A = cartan_matrix(g)
    return tuple(A[i][j] for i in range(g.rank))


def _inverse(M: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def fundamental_gram(g: SimpleLieAlgebra) -> tuple[tuple[Fraction, ...], ...]:
    """(omega_i, omega_j) in the normalized form: D A^{-1} with D = diag(d_i)."""
    A = cartan_matrix(g)
    d = root_halfnorms(g)
    Ainv = _inverse([[Fraction(x) for x in r] for r in A])
    G = tuple(tuple(d[i] * Ainv[i][j] for j in range(g.rank)) for i in range(g.rank))
    return G


def normalized_form(g: SimpleLieAlgebra, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """Normalized invariant form (theta, theta) = 2 evaluated on Dynkin labels."""
    lam, mu = _labels(lam), _labels(mu)
    if len(lam) != g.rank or len(mu) != g.rank:
        raise DomainError(f"weights of {g} need {g.rank} labels, got {len(lam)} and {len(mu)}")
    G = fundamental_gram(g)
    total = Fraction(0)
    for i, a in enumerate(lam):
        if a:
            row = G[i]
            total += a * sum((row[j] * b for j, b in enumerate(mu) if b), Fraction(0))
    return total


# ---------------------------------------------------------------------------
# Roots


@lru_cache(maxsize=None)
def positive_roots_simple_coords(g: SimpleLieAlgebra) -> tuple[tuple[int, ...], ...]:
    """Positive roots as coefficient vectors over the simple roots, ordered by height then lexicographically.

    Built by root strings: beta + alpha_i is a root iff q - <beta, alpha_i^vee> > 0, where q is
    the length of the alpha_i-string below beta.
    """
    A = cartan_matrix(g)
    n = g.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * A[i][j] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
    return tuple(sorted(roots, key=lambda c: (sum(c), c)))


def root_to_labels(g: SimpleLieAlgebra, coeffs: Sequence[int]) -> Weight:
    A = cartan_matrix(g)
    return tuple(sum(A[i][j] * coeffs[j] for j in range(g.rank)) for i in range(g.rank))


@lru_cache(maxsize=None)
def positive_roots(g: SimpleLieAlgebra) -> tuple[Weight, ...]:
    """Positive roots in Dynkin labels, same order as ``positive_roots_simple_coords``."""
    return tuple(root_to_labels(g, c) for c in positive_roots_simple_coords(g))


@lru_cache(maxsize=None)
def highest_root(g: SimpleLieAlgebra) -> Weight:
    coords = positive_roots_simple_coords(g)
    top = max(coords, key=sum)
    # uniqueness of the highest root: it dominates every other positive root
    assert all(all(t >= c for t, c in zip(top, other)) for other in coords)
    return root_to_labels(g, top)


def rho(g: SimpleLieAlgebra) -> Weight:
    return (1,) * g.rank


@lru_cache(maxsize=None)
def comarks(g: SimpleLieAlgebra) -> tuple[int, ...]:
    """Dual Kac labels a_i^vee = (omega_i, theta); theta^vee = sum a_i^vee alpha_i^vee."""
    theta = highest_root(g)
    out = []
    for i in range(g.rank):
        e = tuple(int(i == j) for j in range(g.rank))
        c = normalized_form(g, e, theta)
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def _classical_dual_coxeter(g: SimpleLieAlgebra) -> int:
    n = g.rank
    return {"A": n + 1, "B": 2 * n - 1, "C": n + 1, "D": 2 * n - 2}[g.family]


def _classical_dim(g: SimpleLieAlgebra) -> int:
    n = g.rank
    return {"A": n * (n + 2), "B": n * (2 * n + 1), "C": n * (2 * n + 1), "D": n * (2 * n - 1)}[g.family]


# Beyond this rank the classical families use closed forms; the enumerated
# values are checked against them for every rank up to the threshold.
ENUMERATION_RANK = 8


def dual_coxeter_from_roots(g: SimpleLieAlgebra) -> int:
    h = 1 + normalized_form(g, rho(g), highest_root(g))
    assert h.denominator == 1
    return int(h)


def dual_coxeter(g: SimpleLieAlgebra) -> int:
    """h^vee = 1 + (rho, theta)."""
    g = lie_algebra(g)
    if g.family in "ABCD" and g.rank > ENUMERATION_RANK:
        return _classical_dual_coxeter(g)
    return dual_coxeter_from_roots(g)


def dim_algebra(g: SimpleLieAlgebra) -> int:
    g = lie_algebra(g)
    if g.family in "ABCD" and g.rank > ENUMERATION_RANK:
        return _classical_dim(g)
    return g.rank + 2 * len(positive_roots_simple_coords(g))


@lru_cache(maxsize=None)
def _rho_pairings(g: SimpleLieAlgebra) -> tuple[tuple[Fraction, ...], ...]:
    # (omega_i, alpha) for each positive root alpha, plus (rho, alpha) last
    G = fundamental_gram(g)
    rows = []
    for alpha in positive_roots(g):
        per = tuple(sum((G[i][j] * alpha[j] for j in range(g.rank)), Fraction(0)) for i in range(g.rank))
        rows.append(per + (sum(per, Fraction(0)),))
    return tuple(rows)


def weyl_dim(g: SimpleLieAlgebra, lam: Sequence[int]) -> int:
    """Weyl dimension formula prod_{alpha>0} (lam + rho, alpha) / (rho, alpha)."""
    lam = _labels(lam)
    if len(lam) != g.rank:
        raise DomainError(f"{g} weights need {g.rank} labels")
    if any(x < 0 for x in lam):
        raise DomainError(f"weight {lam} is not dominant")
    num = Fraction(1)
    for row in _rho_pairings(g):
        rho_a = row[-1]
        num *= (rho_a + sum((row[i] * lam[i] for i in range(g.rank) if lam[i]), Fraction(0))) / rho_a
    assert num.denominator == 1
    return int(num)


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


# ---------------------------------------------------------------------------
# Level-l alcove


@dataclass(frozen=True, order=True)
class LeveledWeight:
    """A dominant weight together with a level at which it is integrable."""

    weight: Weight
    level: int

    def __iter__(self):
        return iter(self.weight)

    def __len__(self):
        return len(self.weight)

    def __getitem__(self, i):
        return self.weight[i]


def _labels(x) -> Weight:
    if isinstance(x, LeveledWeight):
        return x.weight
    return tuple(int(v) for v in x)


def theta_pairing(g: SimpleLieAlgebra, lam: Sequence[int]) -> int:
    """(lam, theta) = sum a_i^vee lam_i."""
    return sum(a * x for a, x in zip(comarks(g), _labels(lam)))


def in_alcove(g: SimpleLieAlgebra, level: int, lam: Sequence[int]) -> bool:
    lam = _labels(lam)
    return len(lam) == g.rank and is_dominant(lam) and theta_pairing(g, lam) <= level


def leveled(g: SimpleLieAlgebra, level: int, lam: Sequence[int]) -> LeveledWeight:
    """Validate ``lam`` against the level-``level`` alcove bound."""
    lam = _labels(lam)
    if level < 0:
        raise DomainError(f"level must be non-negative, got {level}")
    if len(lam) != g.rank:
        raise DomainError(f"{g} weights need {g.rank} labels, got {lam}")
    if not in_alcove(g, level, lam):
        raise DomainError(f"weight {lam} is not in the level-{level} alcove of {g}")
    return LeveledWeight(lam, level)


@lru_cache(maxsize=None)
def _alcove(g: SimpleLieAlgebra, level: int) -> tuple[LeveledWeight, ...]:
    a = comarks(g)
    out = []

    def rec(i, remaining, prefix):
        if i == g.rank:
            out.append(LeveledWeight(tuple(prefix), level))
            return
        for x in range(remaining // a[i] + 1):
            prefix.append(x)
            rec(i + 1, remaining - a[i] * x, prefix)
            prefix.pop()

    rec(0, level, [])
    out.sort()
    return tuple(out)


def alcove(g: SimpleLieAlgebra, level: int) -> list[LeveledWeight]:
    """All dominant lam with (lam, theta) <= level, in lexicographic order of labels."""
    if level < 0:
        raise DomainError(f"level must be non-negative, got {level}")
    g = lie_algebra(g)
    n, cap = alcove_size(g, level), limits().max_alcove
    if n > cap:
        raise CapExceeded(f"alcove of {g} at level {level} has {n} weights, cap is {cap} (BLOCKCOUNT_MAX_ALCOVE)")
    return list(_alcove(g, level))


def alcove_size(g: SimpleLieAlgebra, level: int) -> int:
    """Counts the alcove without materializing it."""
    a = comarks(lie_algebra(g))

    @lru_cache(maxsize=None)
    def count(i, remaining):
        if i == g.rank:
            return 1
        return sum(count(i + 1, remaining - a[i] * x) for x in range(remaining // a[i] + 1))

    return count(0, level)


def zero_weight(g: SimpleLieAlgebra) -> Weight:
    return (0,) * g.rank


def lacing_number(g: SimpleLieAlgebra) -> int:
    d = root_halfnorms(g)
    return int(max(d) / min(d))


def num_positive_roots(g: SimpleLieAlgebra) -> int:
    return (dim_algebra(g) - g.rank) // 2


def weyl_group_order(g: SimpleLieAlgebra) -> int:
    """|W| as the product of (exponent + 1) over the degrees of basic invariants."""
    n = g.rank
    f = g.family
    from math import factorial

    if f == "A":
        return factorial(n + 1)
    if f in "BC":
        return 2**n * factorial(n)
    if f == "D":
        return 2 ** (n - 1) * factorial(n)
    degrees = {"E6": (2, 5, 6, 8, 9, 12), "E7": (2, 6, 8, 10, 12, 14, 18),
               "E8": (2, 8, 12, 14, 18, 20, 24, 30), "F4": (2, 6, 8, 12), "G2": (2, 6)}[g.name]
    return prod(degrees)
