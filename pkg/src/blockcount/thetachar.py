"""Quadratic refinements of a symplectic pairing over F_2.

Vectors of F_2^{2g} are tuples of 0/1 in the hyperbolic basis
(a_1, b_1, ..., a_g, b_g).  A quadratic refinement q is stored by its values on
the basis; everywhere else it follows from q(x + y) = q(x) + q(y) + <x, y>.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .config import CapExceeded, DomainError, limits

Vector = tuple[int, ...]


@dataclass(frozen=True)
class SymplecticSpaceF2:
    genus: int
    pairing: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = 2 * self.genus
        if self.genus < 1:
            raise DomainError(f"genus must be positive, got {self.genus}")
        if len(self.pairing) != n or any(len(r) != n for r in self.pairing):
            raise DomainError(f"pairing must be {n}x{n}")
        for i in range(n):
            if self.pairing[i][i] % 2:
                raise DomainError("pairing must be alternating")
            for j in range(n):
                if (self.pairing[i][j] - self.pairing[j][i]) % 2:
                    raise DomainError("pairing must be symmetric mod 2")
        if _rank_f2([list(r) for r in self.pairing]) != n:
            raise DomainError("pairing is degenerate")

    @classmethod
    def standard(cls, genus: int) -> "SymplecticSpaceF2":
        n = 2 * genus
        rows = [[0] * n for _ in range(n)]
        for i in range(genus):
            rows[2 * i][2 * i + 1] = rows[2 * i + 1][2 * i] = 1
        return cls(genus, tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return 2 * self.genus

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        P = self.pairing
        return sum(x[i] * P[i][j] * y[j] for i in range(self.dim) if x[i] for j in range(self.dim)) % 2

    def vectors(self) -> Iterator[Vector]:
        return product((0, 1), repeat=self.dim)

    def basis(self) -> list[Vector]:
        return [tuple(int(i == k) for i in range(self.dim)) for k in range(self.dim)]


def _rank_f2(rows: list[list[int]]) -> int:
    rows = [[v % 2 for v in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                rows[r] = [(a + b) % 2 for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def add(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple((a + b) % 2 for a, b in zip(x, y))


@dataclass(frozen=True)
class QuadraticFormF2:
    space: SymplecticSpaceF2
    values: Vector  # q on the standard basis vectors

    def __post_init__(self):
        if len(self.values) != self.space.dim or any(v not in (0, 1) for v in self.values):
            raise DomainError("values must be a 0/1 vector of length 2g")

    def __call__(self, x: Sequence[int]) -> int:
        P = self.space.pairing
        n = self.space.dim
        support = [i for i in range(n) if x[i] % 2]
        total = sum(self.values[i] for i in support)
        total += sum(P[i][j] for k, i in enumerate(support) for j in support[k + 1 :])
        return total % 2

    @cached_property
    def table(self) -> tuple[int, ...]:
        return tuple(self(x) for x in self.space.vectors())

    def is_refinement(self) -> bool:
        """Exhaustive check of q(x+y) = q(x) + q(y) + <x,y>."""
        vecs = list(self.space.vectors())
        return all(
            self(add(x, y)) == (self(x) + self(y) + self.space.pair(x, y)) % 2 for x in vecs for y in vecs
        )


def _check_genus(space: SymplecticSpaceF2) -> None:
    cap = limits().max_theta_genus
    if space.genus > cap:
        raise CapExceeded(f"genus {space.genus} exceeds the enumeration cap {cap}")


def enumerate_theta(space: SymplecticSpaceF2 | int) -> list[QuadraticFormF2]:
    """All 2^{2g} quadratic refinements, ordered by their basis values."""
    if isinstance(space, int):
        space = SymplecticSpaceF2.standard(space)
    _check_genus(space)
    return [QuadraticFormF2(space, v) for v in product((0, 1), repeat=space.dim)]


def symplectic_basis(space: SymplecticSpaceF2) -> list[tuple[Vector, Vector]]:
    """A symplectic basis (a_i, b_i) by Gram-Schmidt over F_2."""
    remaining = space.basis()
    pairs = []
    while remaining:
        a = remaining.pop(0)
        k = next(i for i, v in enumerate(remaining) if space.pair(a, v))
        b = remaining.pop(k)
        fixed = []
        for v in remaining:
            # project away from span(a, b)
            if space.pair(v, b):
                v = add(v, a)
            if space.pair(v, a):
                v = add(v, b)
            fixed.append(v)
        remaining = [v for v in fixed if any(v)]
        pairs.append((a, b))
    return pairs


def arf(q: QuadraticFormF2, basis: Sequence[tuple[Sequence[int], Sequence[int]]] | None = None) -> int:
    """Arf invariant sum q(a_i) q(b_i) over a symplectic basis (the standard one by default)."""
    if basis is None:
        basis = symplectic_basis(q.space)
    return sum(q(a) * q(b) for a, b in basis) % 2


def arf_by_majority(q: QuadraticFormF2) -> int:
    """Arf as the value q takes most often: 2^{g-1}(2^g + 1) zeros for even forms."""
    zeros = q.table.count(0)
    return 0 if 2 * zeros > len(q.table) else 1


def act_character(chi: Sequence[int], q: QuadraticFormF2) -> QuadraticFormF2:
    """(chi . q)(x) = q(x) + <chi, x>."""
    chi = tuple(v % 2 for v in chi)
    if len(chi) != q.space.dim:
        raise DomainError("character has the wrong length")
    shift = tuple(q.space.pair(chi, e) for e in q.space.basis())
    return QuadraticFormF2(q.space, add(q.values, shift))


def parity_counts(genus: int) -> tuple[int, int]:
    """(#even, #odd) by exhaustive enumeration."""
    forms = enumerate_theta(genus)
    odd = sum(arf(q) for q in forms)
    return len(forms) - odd, odd


def even_count_formula(genus: int) -> int:
    return 2 ** (genus - 1) * (2**genus + 1)


def odd_count_formula(genus: int) -> int:
    return 2 ** (genus - 1) * (2**genus - 1)


def transvection(space: SymplecticSpaceF2, v: Sequence[int]):
    """T_v(x) = x + <v, x> v, a symplectic automorphism."""
    v = tuple(v)

    def T(x: Sequence[int]) -> Vector:
        return add(x, v) if space.pair(v, x) else tuple(x)

    return T


def is_free_and_transitive(space: SymplecticSpaceF2 | int) -> bool:
    """The character group acts simply transitively on refinements."""
    forms = enumerate_theta(space)
    space = forms[0].space
    base = forms[0]
    images = [act_character(chi, base).values for chi in space.vectors()]
    if sorted(images) != sorted(q.values for q in forms):
        return False
    # free: only chi = 0 fixes any form
    return all(
        act_character(chi, q) != q for q in forms for chi in space.vectors() if any(chi)
    )
