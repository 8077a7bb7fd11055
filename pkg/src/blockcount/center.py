"""The center of the simply connected group as automorphisms of the affine Dynkin diagram.

An automorphism pi of the affine diagram acts on level-l weights by permuting
affine Dynkin labels.  It comes from the center exactly when the induced map
lam -> pi(lam) - l * omega_{pi(0)} on finite weights is an element of the Weyl
group; the remaining automorphisms are finite-diagram symmetries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import DomainError
from .rootdata import (
    SimpleLieAlgebra,
    Weight,
    _labels,
    cartan_matrix,
    comarks,
    highest_root,
    leveled,
    root_halfnorms,
)
from .weyl import reflect


@lru_cache(maxsize=None)
def affine_cartan_matrix(g: SimpleLieAlgebra) -> tuple[tuple[int, ...], ...]:
    """Untwisted affine Cartan matrix with node 0 first."""
    A = cartan_matrix(g)
    theta = highest_root(g)
    d = root_halfnorms(g)
    n = g.rank
    # <alpha_0^vee, alpha_j> = -(theta, alpha_j) = -d_j theta_j;  <alpha_i^vee, alpha_0> = -theta_i
    rows = [(2,) + tuple(-int(d[j] * theta[j]) for j in range(n))]
    for i in range(n):
        rows.append((-theta[i],) + tuple(A[i]))
    return tuple(rows)


@dataclass(frozen=True)
class CenterElement:
    algebra: SimpleLieAlgebra
    automorphism: tuple[int, ...]  # node i -> automorphism[i], nodes 0..rank

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.automorphism))

    def __matmul__(self, other: "CenterElement") -> "CenterElement":
        # (self @ other)(i) = self(other(i))
        return CenterElement(self.algebra, tuple(self.automorphism[j] for j in other.automorphism))

    def inverse(self) -> "CenterElement":
        inv = [0] * len(self.automorphism)
        for i, p in enumerate(self.automorphism):
            inv[p] = i
        return CenterElement(self.algebra, tuple(inv))

    def order(self) -> int:
        k, x = 1, self
        while not x.is_identity:
            x = x @ self
            k += 1
        return k


def _diagram_automorphisms(g: SimpleLieAlgebra) -> list[tuple[int, ...]]:
    M = affine_cartan_matrix(g)
    n = g.rank + 1
    out = []

    # backtracking search over node permutations preserving M
    def extend(partial):
        k = len(partial)
        if k == n:
            out.append(tuple(partial))
            return
        used = set(partial)
        for p in range(n):
            if p in used or M[p][p] != M[k][k]:
                continue
            if all(M[partial[j]][p] == M[j][k] and M[p][partial[j]] == M[k][j] for j in range(k)):
                partial.append(p)
                extend(partial)
                partial.pop()

    extend([])
    return out


def _classical_image(g: SimpleLieAlgebra, perm: tuple[int, ...], level: int, lam: Weight) -> Weight:
    affine = (level - sum(a * x for a, x in zip(comarks(g), lam)),) + tuple(lam)
    new = [0] * len(affine)
    for i, p in enumerate(perm):
        new[p] = affine[i]
    return tuple(new[1:])


def _is_weyl_element(g: SimpleLieAlgebra, matrix: list[list[int]]) -> bool:
    # fold the image of the regular weight rho back to the chamber, replaying the same
    # reflections on the matrix columns; the map lies in W iff it becomes the identity
    n = g.rank
    image = [sum(matrix[i][j] for j in range(n)) for i in range(n)]
    cols = [list(col) for col in zip(*matrix)]
    while True:
        neg = next((i for i, v in enumerate(image) if v < 0), None)
        if neg is None:
            break
        image = list(reflect(g, image, neg))
        cols = [list(reflect(g, c, neg)) for c in cols]
    return all(cols[j][i] == int(i == j) for i in range(n) for j in range(n))


@lru_cache(maxsize=None)
def _center(g: SimpleLieAlgebra) -> tuple[CenterElement, ...]:
    n = g.rank
    out = []
    for perm in _diagram_automorphisms(g):
        if perm[0] == 0:
            if all(perm[i] == i for i in range(n + 1)):
                out.append(CenterElement(g, perm))
            continue
        j = perm[0]
        if comarks(g)[j - 1] != 1:
            continue
        # linear part: lam -> image(lam, level) - level * omega_j is independent of level
        cols = []
        for k in range(n):
            e = tuple(int(i == k) for i in range(n))
            img = _classical_image(g, perm, 0, e)
            cols.append(img)
        matrix = [[cols[k][i] for k in range(n)] for i in range(n)]
        if _is_weyl_element(g, matrix):
            out.append(CenterElement(g, perm))
    out.sort(key=lambda s: (s.automorphism[0], s.automorphism))
    return tuple(out)


def center_group(g: SimpleLieAlgebra) -> list[CenterElement]:
    """Center elements as affine-diagram automorphisms; the identity comes first."""
    return list(_center(g))


def group_table(g: SimpleLieAlgebra) -> list[list[int]]:
    """table[i][j] = index of elems[i] @ elems[j]."""
    elems = center_group(g)
    idx = {e.automorphism: k for k, e in enumerate(elems)}
    return [[idx[(a @ b).automorphism] for b in elems] for a in elems]


def group_structure(g: SimpleLieAlgebra) -> str:
    """'Z_n' if cyclic, otherwise 'Z_2 x Z_2' (only non-cyclic case among simple algebras)."""
    elems = center_group(g)
    orders = sorted(e.order() for e in elems)
    if orders[-1] == len(elems):
        return f"Z_{len(elems)}"
    if len(elems) == 4 and orders == [1, 2, 2, 2]:
        return "Z_2 x Z_2"
    raise AssertionError(orders)


def act(sigma: CenterElement, lam, level: int | None = None) -> Weight:
    """Permute the affine Dynkin labels of a level-l weight."""
    g = sigma.algebra
    if level is None:
        if hasattr(lam, "level"):
            level = lam.level
        else:
            raise DomainError("act() needs the level of the weight")
    lam = leveled(g, level, lam).weight
    return _classical_image(g, sigma.automorphism, level, lam)


def element_moving_vacuum_to(g: SimpleLieAlgebra, node: int) -> CenterElement:
    """The center element with sigma(0) = node."""
    for s in center_group(g):
        if s.automorphism[0] == node:
            return s
    raise DomainError(f"no center element of {g} maps node 0 to node {node}")


def orbit_of(sigma: CenterElement, lam, level: int) -> list[Weight]:
    out = [_labels(lam)]
    while True:
        nxt = act(sigma, out[-1], level)
        if nxt == out[0]:
            return out
        out.append(nxt)
