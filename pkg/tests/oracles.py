"""Independent reference implementations used as test oracles.

Nothing here imports the package: every value is obtained by a different
method (closed formulas, Gelfand-Tsetlin patterns, free fermions, truth tables).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product

# ---------------------------------------------------------------------------
# sl2 at level l: truncated Clebsch-Gordan and the closed Verlinde formula


def su2_fusion(level: int, a: int, b: int, c: int) -> int:
    if (a + b + c) % 2:
        return 0
    return int(abs(a - b) <= c <= min(a + b, 2 * level - a - b))


def su2_verlinde(level: int, genus: int, insertions=()) -> float:
    K = level + 2
    total = 0.0
    for j in range(1, K):
        s = math.sin(math.pi * j / K)
        term = (K / 2) ** (genus - 1) * s ** (2 - 2 * genus)
        for lam in insertions:
            term *= math.sin(math.pi * j * (lam + 1) / K) / s
        total += term
    return total


# ---------------------------------------------------------------------------
# sl_n weight multiplicities from Gelfand-Tsetlin patterns


def _partition(labels):
    """Dynkin labels of sl_n -> partition with n parts (last part 0)."""
    n = len(labels) + 1
    parts = [0] * n
    for i in range(n - 2, -1, -1):
        parts[i] = parts[i + 1] + labels[i]
    return parts


def gt_character(labels) -> dict[tuple[int, ...], int]:
    """Weight multiplicities of the sl_n irrep, as Dynkin labels, by counting GT patterns."""
    top = _partition(labels)
    n = len(top)
    out: dict[tuple[int, ...], int] = {}

    def rows_below(row):
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        return product(*ranges)

    def rec(rows):
        row = rows[-1]
        if len(row) == 1:
            sums = [sum(r) for r in rows][::-1]  # |row_1|, |row_2|, ..., |row_n|
            content = [sums[0]] + [sums[k] - sums[k - 1] for k in range(1, n)]
            # weight in epsilon coordinates is `content`; labels are successive differences
            w = tuple(content[i] - content[i + 1] for i in range(n - 1))
            out[w] = out.get(w, 0) + 1
            return
        for nxt in rows_below(row):
            rec(rows + [list(nxt)])

    rec([top])
    return out


# ---------------------------------------------------------------------------
# affine A1 at level 1: lattice theta function over eta


@lru_cache(maxsize=None)
def partitions(n: int) -> int:
    if n < 0:
        return 0
    p = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            p[m] += p[m - k]
    return p[n]


def a1_level1(lam: int, depth: int) -> list[dict[tuple[int], int]]:
    """Layers of the level-1 A1 module with highest weight lam in {0, 1}."""
    layers = [dict() for _ in range(depth + 1)]
    for m in range(-depth - 2, depth + 3):
        top_deg = m * m + m * lam
        label = 2 * m + lam
        for d in range(top_deg, depth + 1):
            k = partitions(d - top_deg)
            if k:
                layers[d][(label,)] = k
    return layers


# ---------------------------------------------------------------------------
# so(N) at level 1 from N free fermions


def so_fermion_layers(n: int, depth: int, sector: str, neutral: bool = False) -> list[dict[tuple[int, ...], int]]:
    """Vacuum ('even') or vector ('odd') module of so(2n) level 1 (so(2n+1) with ``neutral``).

    Fermion modes psi^{+-i}_{-r}, r = 1/2, 3/2, ..., carry weight +-eps_i and
    energy r; the vacuum module is the even-parity Fock space, the vector module
    the odd part with its energy lowered by 1/2.
    """
    # state space: polynomial in energy (half-units) with epsilon-weight keys
    max_half = 2 * depth + 1
    states: dict[tuple[int, tuple[int, ...], int], int] = {(0, (0,) * n, 0): 1}
    for r2 in range(1, max_half + 1, 2):  # 2r odd
        modes = [(i, sign) for i in range(n) for sign in (1, -1)] + ([(None, 0)] if neutral else [])
        for i, sign in modes:
            new = dict(states)
            for (e, w, par), m in states.items():
                if e + r2 <= max_half:
                    w2 = list(w)
                    if i is not None:
                        w2[i] += sign
                    key = (e + r2, tuple(w2), par ^ 1)
                    new[key] = new.get(key, 0) + m
            states = new
    layers = [dict() for _ in range(depth + 1)]
    want = 0 if sector == "even" else 1
    for (e, w, par), m in states.items():
        if par != want:
            continue
        # energy in half-units: even sector integral, odd sector shifted by 1/2
        d2 = e if want == 0 else e - 1
        if d2 % 2 or d2 // 2 > depth:
            continue
        labels = _bn_labels(w) if neutral else _dn_labels(w)
        layers[d2 // 2][labels] = layers[d2 // 2].get(labels, 0) + m
    return layers


def _bn_labels(eps) -> tuple[int, ...]:
    n = len(eps)
    return tuple([eps[i] - eps[i + 1] for i in range(n - 1)] + [2 * eps[n - 1]])


def _dn_labels(eps) -> tuple[int, ...]:
    n = len(eps)
    lab = [eps[i] - eps[i + 1] for i in range(n - 1)] + [eps[n - 2] + eps[n - 1]]
    return tuple(lab)


# ---------------------------------------------------------------------------
# theta characteristics from full truth tables


def refinements_by_truth_table(genus: int) -> list[tuple[int, ...]]:
    """All functions q: F_2^{2g} -> F_2 with q(x+y) = q(x)+q(y)+<x,y>, standard pairing."""
    n = 2 * genus
    vecs = list(product((0, 1), repeat=n))
    index = {v: k for k, v in enumerate(vecs)}

    def pair(x, y):
        return sum(x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i] for i in range(genus)) % 2

    out = []
    for table in product((0, 1), repeat=len(vecs)):
        if table[0]:
            continue
        ok = all(
            table[index[tuple((a + b) % 2 for a, b in zip(x, y))]] == (table[index[x]] + table[index[y]] + pair(x, y)) % 2
            for x in vecs
            for y in vecs
        )
        if ok:
            out.append(table)
    return out


# ---------------------------------------------------------------------------
# classical data tables


DUAL_COXETER = {
    "A1": 2, "A2": 3, "A3": 4, "A4": 5, "A5": 6, "B2": 3, "B3": 5, "B4": 7, "C2": 3, "C3": 4, "C4": 5,
    "D4": 6, "D5": 8, "D6": 10, "E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4,
}
DIMENSION = {
    "A1": 3, "A2": 8, "A3": 15, "A4": 24, "A5": 35, "B2": 10, "B3": 21, "B4": 36, "C2": 10, "C3": 21, "C4": 36,
    "D4": 28, "D5": 45, "D6": 66, "E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14,
}
CENTER_ORDER = {
    "A1": 2, "A2": 3, "A3": 4, "A4": 5, "B2": 2, "B3": 2, "C3": 2, "D4": 4, "D5": 4, "D6": 4,
    "E6": 3, "E7": 2, "E8": 1, "F4": 1, "G2": 1,
}


def sugawara(level, dim, hv) -> Fraction:
    return Fraction(level * dim, level + hv)
