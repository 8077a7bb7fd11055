"""Exact structure constants, Killing form, the projection gl(g) -> g and the Casimir tensor.

The Chevalley basis is produced inside a faithful matrix representation:
sl_{n+1}, so_{2n+1}, sp_{2n} and so_{2n} act on their defining spaces (with the
form antidiagonal), and G2 is the fixed algebra of triality inside so_8.  The
basis is ordered as positive root vectors by height, then h_1..h_r, then the
negative root vectors in the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .config import CapExceeded, CrossCheckError, DomainError, limits
from .rootdata import (
    SimpleLieAlgebra,
    _inverse,
    cartan_matrix,
    dim_algebra,
    lie_algebra,
    positive_roots_simple_coords,
    root_halfnorms,
)

Matrix = list[list[Fraction]]


# ---------------------------------------------------------------------------
# exact linear algebra on lists of Fractions


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of {x : rows . x = 0}."""
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in Bt] for row in A]


def transpose(A: Sequence[Sequence]) -> Matrix:
    return [list(r) for r in zip(*A)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def trace_product(A: Sequence[Sequence], B: Sequence[Sequence]) -> Fraction:
    """trace(A B)."""
    n = len(A)
    return sum((A[i][k] * B[k][i] for i in range(n) for k in range(n) if A[i][k] and B[k][i]), Fraction(0))


# ---------------------------------------------------------------------------
# Chevalley generators in a faithful representation


def _E(N: int, i: int, j: int) -> np.ndarray:
    m = np.full((N, N), Fraction(0), dtype=object)
    m[i, j] = Fraction(1)
    return m


def _br(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def _classical_raising(g: SimpleLieAlgebra) -> tuple[int, list[np.ndarray]]:
    n = g.rank
    fam = g.family
    if fam == "A":
        N = n + 1
        return N, [_E(N, i, i + 1) for i in range(n)]
    N = {"B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[fam]

    def bar(i):
        return N - 1 - i

    es = [_E(N, i, i + 1) - _E(N, bar(i + 1), bar(i)) for i in range(n - 1)]
    last = n - 1
    if fam == "B":
        es.append(_E(N, last, last + 1) - _E(N, last + 1, last + 2))
    elif fam == "C":
        es.append(_E(N, last, last + 1))
    else:
        es.append(_E(N, last - 1, last + 1) - _E(N, last, last + 2))
    return N, es


@lru_cache(maxsize=None)
def _generators(g: SimpleLieAlgebra) -> tuple[tuple[np.ndarray, ...], tuple[np.ndarray, ...], tuple[np.ndarray, ...]]:
    if g.family in "ABCD":
        _, es = _classical_raising(g)
        fs = []
        for e in es:
            ft = e.T.copy()
            h = _br(e, ft)
            c = _ratio(_br(h, e), e)
            if c not in (1, 2):
                raise CrossCheckError(f"unexpected Chevalley normalization for {g}")
            fs.append(ft * (2 // c))
    elif g.family == "G" and g.rank == 2:
        d4 = lie_algebra("D4")
        e4, _, f4 = _generators(d4)
        es = [e4[0] + e4[2] + e4[3], e4[1]]
        fs = [f4[0] + f4[2] + f4[3], f4[1]]
    else:
        raise DomainError(f"no matrix realization for {g}; supported families are A, B, C, D and G2")
    hs = [_br(e, f) for e, f in zip(es, fs)]
    A = cartan_matrix(g)
    r = g.rank
    for i in range(r):
        for j in range(r):
            if not np.array_equal(_br(hs[i], es[j]), A[i][j] * es[j]):
                raise CrossCheckError(f"[h_{i}, e_{j}] != A_ij e_j for {g}")
            want = hs[i] if i == j else 0 * hs[i]
            if not np.array_equal(_br(es[i], fs[j]), want):
                raise CrossCheckError(f"[e_{i}, f_{j}] != delta_ij h_i for {g}")
    return tuple(es), tuple(hs), tuple(fs)


def _ratio(x: np.ndarray, y: np.ndarray) -> int:
    """The integer c with x = c y (y nonzero)."""
    k = next(k for k, v in enumerate(y.flat) if v)
    c = Fraction(x.flat[k]) / y.flat[k]
    if c.denominator != 1 or not np.array_equal(x, c * y):
        raise CrossCheckError("matrices are not integer proportional")
    return int(c)


@dataclass(frozen=True)
class ChevalleyBasis:
    algebra: SimpleLieAlgebra
    roots: tuple[tuple[int, ...], ...]  # positive roots in simple-root coordinates, by height
    matrices: tuple[np.ndarray, ...]  # e_alpha..., h_1..h_r, f_alpha...
    labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return len(self.matrices)


def chevalley_basis(g: SimpleLieAlgebra | str) -> ChevalleyBasis:
    g = lie_algebra(g)
    cap = limits().max_matrix_rank
    if g.rank > cap:
        raise CapExceeded(f"rank {g.rank} exceeds the matrix construction cap {cap}")
    return _chevalley_basis(g)


@lru_cache(maxsize=None)
def _chevalley_basis(g: SimpleLieAlgebra) -> ChevalleyBasis:
    es, hs, fs = _generators(g)
    r = g.rank
    roots = sorted(positive_roots_simple_coords(g), key=lambda a: (sum(a), tuple(-x for x in a)))
    rootset = set(roots)
    d = root_halfnorms(g)
    e_of: dict[tuple[int, ...], np.ndarray] = {}
    f_of: dict[tuple[int, ...], np.ndarray] = {}
    for a in roots:
        if sum(a) == 1:
            i = a.index(1)
            e_of[a], f_of[a] = es[i], fs[i]
            continue
        for i in range(r):
            b = tuple(x - int(k == i) for k, x in enumerate(a))
            if b in rootset:
                break
        else:
            raise CrossCheckError(f"root {a} is not reachable by simple steps")
        # p = length of the alpha_i string below b
        p = 0
        while tuple(x - (p + 1) * int(k == i) for k, x in enumerate(b)) in rootset:
            p += 1
        e = _br(es[i], e_of[b]) * Fraction(1, p + 1)
        f = _br(f_of[b], fs[i]) * Fraction(1, p + 1)
        # [e_a, f_a] must be the coroot h_a = sum_k (d_k / d_a) a_k h_k
        norm_a = _halfnorm(g, a)
        coroot = sum((int(Fraction(a[k]) * d[k] / norm_a) * hs[k] for k in range(r)), 0 * hs[0])
        c = _ratio(_br(e, f), coroot)
        if c not in (1, -1):
            raise CrossCheckError(f"[e_a, f_a] is {c} h_a for root {a}")
        e_of[a], f_of[a] = e, c * f
    mats = [e_of[a] for a in roots] + list(hs) + [f_of[a] for a in roots]
    labels = (
        [f"e{''.join(map(str, a))}" for a in roots]
        + [f"h{k + 1}" for k in range(r)]
        + [f"f{''.join(map(str, a))}" for a in roots]
    )
    if len(mats) != dim_algebra(g):
        raise CrossCheckError(f"built {len(mats)} basis vectors, expected dim {dim_algebra(g)}")
    return ChevalleyBasis(g, tuple(roots), tuple(mats), tuple(labels))


def _halfnorm(g: SimpleLieAlgebra, a: Sequence[int]) -> Fraction:
    """(a, a)/2 for a root in simple coordinates, long roots having 1."""
    A = cartan_matrix(g)
    d = root_halfnorms(g)
    r = g.rank
    # (alpha_i, alpha_j) = d_i A_ij
    return sum((a[i] * a[j] * d[i] * A[i][j] for i in range(r) for j in range(r)), Fraction(0)) / 2


# ---------------------------------------------------------------------------
# structure constants and derived tensors


@dataclass(frozen=True)
class StructureConstants:
    algebra: SimpleLieAlgebra
    labels: tuple[str, ...]
    tensor: tuple[tuple[tuple[Fraction, ...], ...], ...]  # tensor[i][j][k]: [x_i, x_j] = sum_k c x_k

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket(self, x: Sequence, y: Sequence) -> list[Fraction]:
        d = self.dim
        out = [Fraction(0)] * d
        for i in range(d):
            if not x[i]:
                continue
            for j in range(d):
                if y[j]:
                    c = x[i] * y[j]
                    for k, v in enumerate(self.tensor[i][j]):
                        if v:
                            out[k] += c * v
        return out

    @cached_property
    def ad(self) -> tuple[Matrix, ...]:
        """ad(x_i) as d x d matrices: column j holds the coordinates of [x_i, x_j]."""
        d = self.dim
        return tuple([[self.tensor[i][j][k] for j in range(d)] for k in range(d)] for i in range(d))

    def is_antisymmetric(self) -> bool:
        d = self.dim
        return all(self.tensor[i][j][k] == -self.tensor[j][i][k] for i in range(d) for j in range(d) for k in range(d))

    def satisfies_jacobi(self) -> bool:
        # ad is a representation: ad([x_i, x_j]) = [ad x_i, ad x_j]
        d = self.dim
        ad = self.ad
        for i in range(d):
            for j in range(i + 1, d):
                lhs = [[Fraction(0)] * d for _ in range(d)]
                for k, c in enumerate(self.tensor[i][j]):
                    if c:
                        for r in range(d):
                            for s in range(d):
                                if ad[k][r][s]:
                                    lhs[r][s] += c * ad[k][r][s]
                ab = matmul(ad[i], ad[j])
                ba = matmul(ad[j], ad[i])
                if any(lhs[r][s] != ab[r][s] - ba[r][s] for r in range(d) for s in range(d)):
                    return False
        return True


def structure_constants(g: SimpleLieAlgebra | str) -> StructureConstants:
    basis = chevalley_basis(g)
    return _structure_constants(basis.algebra)


@lru_cache(maxsize=None)
def _structure_constants(g: SimpleLieAlgebra) -> StructureConstants:
    basis = _chevalley_basis(g)
    d = basis.dim
    flat = np.array([m.ravel() for m in basis.matrices])  # d x N^2
    # matrix entries on which the basis is independent give an invertible d x d block
    _, rows = rref(flat.tolist())
    sub_inv = _inverse([[flat[a, p] for a in range(d)] for p in rows])
    tensor = []
    for i in range(d):
        row = []
        for j in range(d):
            br = _br(basis.matrices[i], basis.matrices[j]).ravel()
            rhs = [br[p] for p in rows]
            coords = [sum((sub_inv[a][b] * rhs[b] for b in range(d) if rhs[b]), Fraction(0)) for a in range(d)]
            recon = sum((c * flat[a] for a, c in enumerate(coords) if c), 0 * br)
            if any(c.denominator != 1 for c in coords) or not np.array_equal(recon, br):
                raise CrossCheckError(f"bracket of basis elements {i}, {j} left the span")
            row.append(tuple(coords))
        tensor.append(tuple(row))
    return StructureConstants(g, basis.labels, tuple(tensor))


def killing_form(sc: StructureConstants) -> Matrix:
    """K_ab = trace(ad x_a ad x_b)."""
    d = sc.dim
    ad = sc.ad
    K = [[trace_product(ad[a], ad[b]) for b in range(d)] for a in range(d)]
    if rank(K) != d:
        raise DomainError("Killing form is degenerate")
    return K


@dataclass(frozen=True)
class ProjectionOperator:
    """Trace-form orthogonal projection gl(d) -> g, as coordinates in the Chevalley basis."""

    sc: StructureConstants
    matrix: tuple[tuple[Fraction, ...], ...]  # d x d^2, acting on row-major flattened matrices

    def __call__(self, A: Sequence[Sequence]) -> list[Fraction]:
        flat = [Fraction(v) for row in A for v in row]
        return [sum((m * v for m, v in zip(row, flat) if m and v), Fraction(0)) for row in self.matrix]

    def rank(self) -> int:
        return rank(self.matrix)


def adjoint_projection(sc: StructureConstants) -> ProjectionOperator:
    """P(A) = sum_ab x_a (K^{-1})_ab trace(ad x_b A)."""
    d = sc.dim
    Kinv = _inverse(killing_form(sc))
    # trace(ad_b A) = sum_{ij} (ad_b)_{ji} A_{ij}
    tr_rows = [[sc.ad[b][j][i] for i in range(d) for j in range(d)] for b in range(d)]
    mat = tuple(
        tuple(sum((Kinv[a][b] * tr_rows[b][k] for b in range(d) if Kinv[a][b]), Fraction(0)) for k in range(d * d))
        for a in range(d)
    )
    return ProjectionOperator(sc, mat)


def _unflatten(v: Sequence[Fraction], d: int) -> Matrix:
    return [list(v[i * d : (i + 1) * d]) for i in range(d)]


def orthogonal_complement(sc: StructureConstants) -> list[Matrix]:
    """Basis of g-perp inside sl(d): traceless A with trace(ad x A) = 0 for all x."""
    d = sc.dim
    constraints = [[sc.ad[b][j][i] for i in range(d) for j in range(d)] for b in range(d)]
    constraints.append([Fraction(int(i == j)) for i in range(d) for j in range(d)])
    return [_unflatten(v, d) for v in nullspace(constraints, d * d)]


def orthogonal_complement_dim(sc: StructureConstants) -> int:
    return len(orthogonal_complement(sc))


@dataclass(frozen=True)
class CasimirTensor:
    sc: StructureConstants
    matrix: tuple[tuple[Fraction, ...], ...]  # gamma = sum_ab matrix[a][b] x_a (x) x_b

    def contraction(self) -> Matrix:
        """Lower with K, raise with gamma: the composite g -> g* -> g."""
        return matmul(self.matrix, killing_form(self.sc))

    def is_symmetric(self) -> bool:
        d = self.sc.dim
        return all(self.matrix[a][b] == self.matrix[b][a] for a in range(d) for b in range(d))

    def is_invariant(self) -> bool:
        """(ad x (x) 1 + 1 (x) ad x) gamma = 0 for every basis x."""
        for adx in self.sc.ad:
            left = matmul(adx, self.matrix)
            right = matmul(self.matrix, transpose(adx))
            if any(a + b for ra, rb in zip(left, right) for a, b in zip(ra, rb)):
                return False
        return True


def casimir_tensor(sc: StructureConstants) -> CasimirTensor:
    Kinv = _inverse(killing_form(sc))
    return CasimirTensor(sc, tuple(tuple(r) for r in Kinv))
