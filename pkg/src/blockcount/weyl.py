"""Weyl-group bookkeeping and finite-dimensional characters (Freudenthal)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterator, Sequence

from .config import CapExceeded, DomainError, limits
from .rootdata import (
    SimpleLieAlgebra,
    Weight,
    cartan_matrix,
    fundamental_gram,
    positive_roots,
    weyl_group_order,
)


@lru_cache(maxsize=None)
def integer_gram(g: SimpleLieAlgebra) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Gram matrix of fundamental weights scaled to integers, and the scale."""
    G = fundamental_gram(g)
    den = lcm(*(x.denominator for row in G for x in row))
    return tuple(tuple(int(x * den) for x in row) for row in G), den


def scaled_form(g: SimpleLieAlgebra, x: Sequence[int], y: Sequence[int]) -> int:
    """den * (x, y) as an integer, den from ``integer_gram``."""
    G, _ = integer_gram(g)
    n = len(x)
    return sum(x[i] * sum(G[i][j] * y[j] for j in range(n)) for i in range(n) if x[i])


def form(g: SimpleLieAlgebra, x: Sequence[int], y: Sequence[int]) -> Fraction:
    return Fraction(scaled_form(g, x, y), integer_gram(g)[1])


@lru_cache(maxsize=None)
def _simple_roots(g: SimpleLieAlgebra) -> tuple[Weight, ...]:
    A = cartan_matrix(g)
    return tuple(tuple(A[i][j] for i in range(g.rank)) for j in range(g.rank))


def reflect(g: SimpleLieAlgebra, x: Sequence[int], i: int) -> Weight:
    """s_i(x) = x - x_i alpha_i."""
    a = _simple_roots(g)[i]
    c = x[i]
    return tuple(xj - c * aj for xj, aj in zip(x, a))


def to_dominant(g: SimpleLieAlgebra, x: Sequence[int]) -> tuple[Weight, int]:
    """Dominant representative of the W-orbit of x and the parity of the reflections used."""
    roots = _simple_roots(g)
    x = list(x)
    parity = 0
    while True:
        for i, xi in enumerate(x):
            if xi < 0:
                a = roots[i]
                for j in range(len(x)):
                    x[j] -= xi * a[j]
                parity ^= 1
                break
        else:
            return tuple(x), parity


def dominant_rep(g: SimpleLieAlgebra, x: Sequence[int]) -> Weight:
    return to_dominant(g, x)[0]


def dot_fold(g: SimpleLieAlgebra, x: Sequence[int]) -> tuple[int, Weight] | None:
    """Fold x under the dot action: returns (sign, nu) with w(x + rho) - rho = nu dominant.

    Returns None when x + rho lies on a wall.
    """
    shifted = [v + 1 for v in x]
    dom, parity = to_dominant(g, shifted)
    if any(v == 0 for v in dom):
        return None
    return (-1 if parity else 1), tuple(v - 1 for v in dom)


def orbit(g: SimpleLieAlgebra, lam: Sequence[int]) -> list[Weight]:
    """W-orbit of a dominant weight, by reflecting only along positive labels."""
    lam = tuple(lam)
    if any(v < 0 for v in lam):
        raise DomainError(f"orbit() expects a dominant weight, got {lam}")
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for x in frontier:
            for i, xi in enumerate(x):
                if xi > 0:
                    y = reflect(g, x, i)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return sorted(seen)


def signed_orbit(g: SimpleLieAlgebra, x: Sequence[int]) -> list[tuple[Weight, int]]:
    """Orbit of a strictly dominant weight with the sign of the unique w reaching each point."""
    x = tuple(x)
    if any(v <= 0 for v in x):
        raise DomainError(f"signed_orbit() expects a strictly dominant weight, got {x}")
    order = weyl_group_order(g)
    if order > limits().max_weyl_order:
        raise CapExceeded(f"|W({g})| = {order} exceeds the Weyl-group cap")
    sign = {x: 1}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for i, yi in enumerate(y):
                if yi > 0:
                    z = reflect(g, y, i)
                    if z not in sign:
                        sign[z] = -sign[y]
                        nxt.append(z)
        frontier = nxt
    assert len(sign) == order
    return sorted(sign.items())


# ---------------------------------------------------------------------------
# Freudenthal multiplicities


@lru_cache(maxsize=4096)
def dominant_weights(g: SimpleLieAlgebra, lam: Weight) -> tuple[Weight, ...]:
    """Dominant weights mu <= lam (lam - mu a non-negative root combination)."""
    pos = positive_roots(g)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in pos:
                nu = tuple(m - x for m, x in zip(mu, a))
                if all(v >= 0 for v in nu) and nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return tuple(sorted(seen, key=lambda mu: (-scaled_form(g, lam, lam) + scaled_form(g, mu, mu), mu)))


@lru_cache(maxsize=4096)
def _dominant_character(g: SimpleLieAlgebra, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    pos = positive_roots(g)
    dom = dominant_weights(g, lam)
    domset = set(dom)
    rho = (1,) * g.rank
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = scaled_form(g, lr, lr)
    mult: dict[Weight, int] = {lam: 1}
    # process in order of increasing depth below lam: height of lam - mu
    order = sorted(dom, key=lambda mu: _depth(g, lam, mu))
    for mu in order[1:]:
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = top - scaled_form(g, mr, mr)
        total = 0
        for a in pos:
            j = 1
            while True:
                nu = tuple(m + j * x for m, x in zip(mu, a))
                rep = dominant_rep(g, nu)
                if rep not in domset:
                    break
                total += scaled_form(g, nu, a) * mult[rep]
                j += 1
        m, r = divmod(2 * total, denom)
        assert r == 0, (lam, mu)
        mult[mu] = m
    return tuple(sorted(mult.items()))


@lru_cache(maxsize=None)
def _simple_coords_matrix(g: SimpleLieAlgebra) -> tuple[tuple[Fraction, ...], ...]:
    from .rootdata import _inverse

    A = cartan_matrix(g)
    return tuple(tuple(r) for r in _inverse([[Fraction(x) for x in row] for row in A]))


def _depth(g: SimpleLieAlgebra, lam: Weight, mu: Weight) -> Fraction:
    # height of lam - mu over simple roots; alpha_j = A[:, j] so coords = A^{-1} (lam - mu)
    Ainv = _simple_coords_matrix(g)
    diff = [a - b for a, b in zip(lam, mu)]
    return sum((Ainv[i][j] * diff[j] for i in range(g.rank) for j in range(g.rank)), Fraction(0))


def dominant_character(g: SimpleLieAlgebra, lam: Sequence[int]) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V_lam."""
    lam = tuple(lam)
    if any(v < 0 for v in lam):
        raise DomainError(f"weight {lam} is not dominant")
    return dict(_dominant_character(g, lam))


def character(g: SimpleLieAlgebra, lam: Sequence[int]) -> dict[Weight, int]:
    """Full weight multiplicities of V_lam."""
    out = {}
    for mu, m in dominant_character(g, lam).items():
        for nu in orbit(g, mu):
            out[nu] = m
    return out


def expand_dominant(g: SimpleLieAlgebra, dom: dict[Weight, int]) -> dict[Weight, int]:
    """Expand a W-invariant multiset given on dominant weights to all weights."""
    out = {}
    for mu, m in dom.items():
        if m:
            for nu in orbit(g, mu):
                out[nu] = m
    return out


def _shifted_norm(g: SimpleLieAlgebra, mu: Sequence[int]) -> int:
    x = tuple(a + 1 for a in mu)
    return scaled_form(g, x, x)


def restrict_dominant(full: dict[Weight, int]) -> dict[Weight, int]:
    return {mu: m for mu, m in full.items() if m and all(v >= 0 for v in mu)}


def decompose_character(g: SimpleLieAlgebra, chi: dict[Weight, int]) -> dict[Weight, int]:
    """Write a W-invariant virtual character as a combination of irreducible characters."""
    rest = {mu: m for mu, m in restrict_dominant(chi).items() if m}
    out: dict[Weight, int] = {}
    while rest:
        # the dominant weight with the largest |mu + rho|^2 is a highest weight
        top = max(rest, key=lambda mu: (_shifted_norm(g, mu), mu))
        m = rest[top]
        out[top] = out.get(top, 0) + m
        for nu, k in dominant_character(g, top).items():
            v = rest.get(nu, 0) - m * k
            if v:
                rest[nu] = v
            else:
                rest.pop(nu, None)
    return dict(sorted(out.items()))


def iter_weights(chi: dict[Weight, int]) -> Iterator[tuple[Weight, int]]:
    for mu in sorted(chi):
        if chi[mu]:
            yield mu, chi[mu]
