"""Truncated graded characters of integrable highest-weight modules and conformal branching.

A weight of H_{lam, l} is recorded as (finite weight, degree) where degree d
means the affine weight Lambda - d delta.  Two independent algorithms build the
character up to a finite depth:

``weyl_kac``
    numerator sum over the translation part of the affine Weyl group, divided
    by the finite Weyl denominator (giving signed irreducible characters) and
    multiplied by the bosonic factor prod_{n>=1} 1/((1-q^n)^rank prod_alpha (1 - e^alpha q^n)),
    which is the character of the negative loop algebra's symmetric algebra;
``freudenthal``
    the affine Freudenthal recursion over positive affine roots (real roots
    alpha + n delta with multiplicity 1, imaginary roots n delta with multiplicity rank).
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .config import CapExceeded, CrossCheckError, DomainError, limits
from .embeddings import EmbeddingSpec, adjoint_embedding, conformal_weight, dynkin_index_embedding
from .rootdata import (
    SimpleLieAlgebra,
    Weight,
    _inverse,
    _labels,
    alcove,
    cartan_matrix,
    dim_algebra,
    dual_coxeter,
    leveled,
    lie_algebra,
    orthogonal_algebra,
    positive_roots,
    root_halfnorms,
)
from .weyl import (
    character,
    decompose_character,
    dominant_character,
    dominant_rep,
    dot_fold,
    expand_dominant,
    integer_gram,
    restrict_dominant,
    scaled_form,
)

METHODS = ("weyl_kac", "freudenthal")


@dataclass(frozen=True)
class GradedCharacter:
    algebra: SimpleLieAlgebra
    level: int
    highest_weight: Weight | None
    depth: int
    layers: tuple[dict, ...] = field(repr=False)  # layers[d][finite weight] = multiplicity
    method: str = "weyl_kac"

    def dimensions(self) -> list[int]:
        return [sum(layer.values()) for layer in self.layers]

    def dominant_layer(self, d: int) -> dict[Weight, int]:
        return dict(sorted(restrict_dominant(self.layers[d]).items()))

    def decomposition(self, d: int) -> dict[Weight, int]:
        """Layer d as a sum of finite irreducible modules."""
        return decompose_character(self.algebra, self.layers[d])


def _check_request(g: SimpleLieAlgebra, level: int, lam, depth: int) -> Weight:
    lam = leveled(g, level, lam).weight
    if level < 1:
        raise DomainError("integrable modules need positive level")
    if depth < 0:
        raise DomainError(f"depth must be non-negative, got {depth}")
    cap = limits().max_depth
    if depth > cap:
        raise CapExceeded(f"depth {depth} exceeds the cap {cap}")
    return lam


def graded_character(g: SimpleLieAlgebra, level: int, lam, depth: int, method: str = "weyl_kac") -> GradedCharacter:
    g = lie_algebra(g)
    lam = _check_request(g, level, lam, depth)
    if method == "weyl_kac":
        dom = _weyl_kac_dominant(g, level, lam, depth)
    elif method == "freudenthal":
        dom = _freudenthal_dominant(g, level, lam, depth)
    else:
        raise DomainError(f"unknown character method {method!r}; choose from {METHODS}")
    layers = tuple(expand_dominant(g, dict(layer)) for layer in dom)
    return GradedCharacter(g, level, lam, depth, layers, method)


def graded_dominant(g: SimpleLieAlgebra, level: int, lam, depth: int, method: str = "weyl_kac") -> list[dict]:
    """Dominant multiplicities per degree, without expanding Weyl orbits."""
    g = lie_algebra(g)
    lam = _check_request(g, level, lam, depth)
    fn = _weyl_kac_dominant if method == "weyl_kac" else _freudenthal_dominant
    return [dict(layer) for layer in fn(g, level, lam, depth)]


# ---------------------------------------------------------------------------
# Weyl-Kac numerator / bosonic denominator


@lru_cache(maxsize=None)
def _adjoint_weights(g: SimpleLieAlgebra) -> tuple[tuple[Weight, int], ...]:
    out: dict[Weight, int] = {(0,) * g.rank: g.rank}
    for a in positive_roots(g):
        out[a] = 1
        out[tuple(-x for x in a)] = 1
    return tuple(sorted(out.items()))


@lru_cache(maxsize=32)
def _boson_layers(g: SimpleLieAlgebra, depth: int) -> tuple[tuple[tuple[Weight, int], ...], ...]:
    """Character of Sym(g (x) t^{-1} C[t^{-1}]) truncated at degree ``depth``."""
    series: list[dict[Weight, int]] = [dict() for _ in range(depth + 1)]
    series[0][(0,) * g.rank] = 1
    for n in range(1, depth + 1):
        for w, mult in _adjoint_weights(g):
            for _ in range(mult):
                # multiply by 1/(1 - e^w q^n) = sum_k e^{k w} q^{k n}
                new = [dict(layer) for layer in series]
                for d in range(depth + 1):
                    for k in range(1, d // n + 1):
                        src = series[d - k * n]
                        shift = tuple(k * x for x in w)
                        tgt = new[d]
                        for mu, m in src.items():
                            key = tuple(a + b for a, b in zip(mu, shift))
                            tgt[key] = tgt.get(key, 0) + m
                series = new
    return tuple(tuple(sorted(layer.items())) for layer in series)


def _coroot_labels(g: SimpleLieAlgebra) -> list[Weight]:
    """alpha_i^vee identified with 2 alpha_i / (alpha_i, alpha_i), in Dynkin labels."""
    A = cartan_matrix(g)
    d = root_halfnorms(g)
    out = []
    for i in range(g.rank):
        col = [Fraction(A[k][i]) / d[i] for k in range(g.rank)]
        assert all(c.denominator == 1 for c in col)
        out.append(tuple(int(c) for c in col))
    return out


def _translations(g: SimpleLieAlgebra, level: int, lam: Weight, depth: int) -> list[tuple[int, Weight]]:
    """(d_beta, beta) for beta in the coroot lattice with d_beta = (lam+rho, beta) + K|beta|^2/2 <= depth."""
    K = level + dual_coxeter(g)
    cor = _coroot_labels(g)
    n = g.rank
    # Gram of coroots (alpha_i^vee, alpha_j^vee) = A_ij / d_j
    A = cartan_matrix(g)
    d = root_halfnorms(g)
    Gc = [[Fraction(A[i][j]) / d[j] for j in range(n)] for i in range(n)]
    b = [Fraction(x + 1) for x in lam]  # (lam + rho, alpha_i^vee) = lam_i + 1
    Gc_inv = _inverse(Gc)
    c0 = [sum(Gc_inv[i][j] * b[j] for j in range(n)) / K for i in range(n)]
    const = sum(c0[i] * Gc[i][j] * c0[j] for i in range(n) for j in range(n))
    radius2 = 2 * (Fraction(depth) + K * const / 2) / K
    ranges = []
    for i in range(n):
        half = math.sqrt(float(radius2 * Gc_inv[i][i])) + 1e-9
        centre = -float(c0[i])
        ranges.append(range(math.floor(centre - half), math.ceil(centre + half) + 1))
    box = math.prod(len(r) for r in ranges)
    if box > 5_000_000:
        raise CapExceeded(f"translation search box of size {box} is too large")
    out = []
    for c in product(*ranges):
        val = sum(c[i] * b[i] for i in range(n)) + Fraction(K, 2) * sum(
            c[i] * Gc[i][j] * c[j] for i in range(n) for j in range(n) if c[i] and c[j]
        )
        if val <= depth:
            assert val.denominator == 1 and val >= 0
            beta = tuple(sum(c[i] * cor[i][k] for i in range(n)) for k in range(n))
            out.append((int(val), beta))
    out.sort()
    return out


def _weyl_kac_dominant(g: SimpleLieAlgebra, level: int, lam: Weight, depth: int) -> list[tuple]:
    K = level + dual_coxeter(g)
    bosons = _boson_layers(g, depth)
    irreps: list[dict[Weight, int]] = [dict() for _ in range(depth + 1)]
    for d_beta, beta in _translations(g, level, lam, depth):
        folded = dot_fold(g, tuple(x + K * y for x, y in zip(lam, beta)))
        if folded is None:
            continue
        sign, nu = folded
        for d in range(d_beta, depth + 1):
            acc = irreps[d]
            # V_nu (x) boson layer, decomposed by Brauer-Klimyk
            for w, m in bosons[d - d_beta]:
                f = dot_fold(g, tuple(a + b for a, b in zip(nu, w)))
                if f is None:
                    continue
                s, kappa = f
                acc[kappa] = acc.get(kappa, 0) + sign * s * m
    out = []
    for d, layer in enumerate(irreps):
        dom: dict[Weight, int] = {}
        for kappa, c in layer.items():
            if c == 0:
                continue
            if c < 0:
                raise CrossCheckError(f"negative irreducible multiplicity {c} for {kappa} at degree {d}")
            for mu, m in dominant_character(g, kappa).items():
                dom[mu] = dom.get(mu, 0) + c * m
        out.append(tuple(sorted(dom.items())))
    return out


# ---------------------------------------------------------------------------
# Affine Freudenthal recursion


@lru_cache(maxsize=None)
def _root_lattice_test(g: SimpleLieAlgebra):
    A = cartan_matrix(g)
    Ainv = _inverse([[Fraction(x) for x in r] for r in A])

    def in_root_lattice(v: Sequence[int]) -> bool:
        return all(sum(Ainv[i][j] * v[j] for j in range(g.rank)).denominator == 1 for i in range(g.rank))

    return in_root_lattice


def _freudenthal_dominant(g: SimpleLieAlgebra, level: int, lam: Weight, depth: int) -> list[tuple]:
    K = level + dual_coxeter(g)
    den = integer_gram(g)[1]
    n = g.rank
    lr = tuple(x + 1 for x in lam)
    top = scaled_form(g, lr, lr)
    pos = positive_roots(g)
    roots = pos + tuple(tuple(-x for x in a) for a in pos)
    in_Q = _root_lattice_test(g)
    # (Lambda0, delta) = 1, so n delta pairs with a level-l weight to n*l; scaled by den
    lvl = level * den

    def bound(e: int) -> int:
        return top + 2 * K * e * den

    memo: dict[tuple[Weight, int], int] = {}

    def shifted_norm(x):
        y = tuple(a + 1 for a in x)
        return scaled_form(g, y, y)

    def mult(mu: Weight, e: int) -> int:
        if e < 0:
            return 0
        mu = dominant_rep(g, mu)
        key = (mu, e)
        if key in memo:
            return memo[key]
        if e == 0 and mu == lam:
            memo[key] = 1
            return 1
        denom = bound(e) - shifted_norm(mu)
        if denom <= 0 or not in_Q(tuple(a - b for a, b in zip(lam, mu))):
            memo[key] = 0
            return 0
        total = 0
        for alpha in roots:
            is_pos = alpha in pos_set
            for nn in range(0 if is_pos else 1, e + 1):
                j = 1
                while True:
                    if nn * j > e:
                        break
                    x = tuple(m + j * a for m, a in zip(mu, alpha))
                    ee = e - nn * j
                    if shifted_norm(x) >= bound(ee) and not (ee == 0 and dominant_rep(g, x) == lam):
                        # |x + rho|^2 is convex in j: past the vertex nothing further is a weight
                        vertex_passed = scaled_form(g, tuple(m + 1 + j * a for m, a in zip(mu, alpha)), alpha) >= 0
                        if vertex_passed:
                            break
                        j += 1
                        continue
                    m_x = mult(x, ee)
                    if m_x:
                        total += (scaled_form(g, x, alpha) + nn * lvl) * m_x
                    j += 1
        for nn in range(1, e + 1):
            for j in range(1, e // nn + 1):
                m_x = mult(mu, e - nn * j)
                if m_x:
                    total += n * nn * lvl * m_x
        q, r = divmod(2 * total, denom)
        if r:
            raise CrossCheckError(f"non-integral affine Freudenthal multiplicity at {mu}, degree {e}")
        memo[key] = q
        return q

    pos_set = set(pos)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 100_000))
    try:
        out = []
        for e in range(depth + 1):
            layer = {}
            for mu in _dominant_candidates(g, lam, bound(e), den):
                m = mult(mu, e)
                if m:
                    layer[mu] = m
            out.append(tuple(sorted(layer.items())))
    finally:
        sys.setrecursionlimit(old)
    return out


def _dominant_candidates(g: SimpleLieAlgebra, lam: Weight, scaled_bound: int, den: int) -> list[Weight]:
    """Dominant mu in lam + Q with |mu + rho|^2 <= bound (bound given scaled by den).

    The fundamental-weight Gram matrix has positive entries, so the norm of
    x = mu + rho grows in every coordinate; labels are raised one at a time
    with the unset ones held at 1 until the bound is crossed.
    """
    n = g.rank
    in_Q = _root_lattice_test(g)
    out = []
    x = [1] * n

    def rec(i: int) -> None:
        if i == n:
            mu = tuple(v - 1 for v in x)
            if in_Q(tuple(a - b for a, b in zip(lam, mu))):
                out.append(mu)
            return
        while scaled_form(g, x, x) <= scaled_bound:
            rec(i + 1)
            x[i] += 1
        x[i] = 1

    rec(0)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Restriction along ad: g -> so(dim g) and conformal branching


def epsilon_coordinates(so: SimpleLieAlgebra, labels: Sequence[int]) -> tuple[Fraction, ...]:
    """Orthonormal coordinates of a B_m or D_m weight given in Dynkin labels."""
    m = so.rank
    half = Fraction(1, 2)
    eps = [Fraction(0)] * m
    if so.family == "B":
        for i, a in enumerate(labels):
            if i < m - 1:
                for k in range(i + 1):
                    eps[k] += a
            else:
                for k in range(m):
                    eps[k] += a * half
    elif so.family == "D":
        for i, a in enumerate(labels):
            if i < m - 2:
                for k in range(i + 1):
                    eps[k] += a
            elif i == m - 2:
                for k in range(m):
                    eps[k] += a * half * (-1 if k == m - 1 else 1)
            else:
                for k in range(m):
                    eps[k] += a * half
    else:
        raise DomainError(f"{so} is not an orthogonal algebra of type B or D")
    return tuple(eps)


@dataclass(frozen=True)
class AdjointRestriction:
    """Weight restriction along ad: g -> so(dim g).

    The vector weights +-eps_i of so(dim g) go to +-(i-th positive root) for
    i <= #positive roots and to 0 otherwise; this is the restriction for an
    embedding conjugate to ad, and characters do not see the conjugation.
    """

    source: SimpleLieAlgebra
    target: SimpleLieAlgebra

    def __call__(self, so_weight: Sequence[int]) -> Weight:
        eps = epsilon_coordinates(self.target, so_weight)
        roots = positive_roots(self.source)
        out = [Fraction(0)] * self.source.rank
        for c, alpha in zip(eps, roots):
            if c:
                for k in range(self.source.rank):
                    out[k] += c * alpha[k]
        if any(v.denominator != 1 for v in out):
            raise CrossCheckError(f"restriction of {tuple(so_weight)} is not integral")
        return tuple(int(v) for v in out)


def adjoint_restriction(g: SimpleLieAlgebra) -> AdjointRestriction:
    g = lie_algebra(g)
    d = dim_algebra(g)
    if d < 5:
        raise DomainError(f"so({d}) is not of type B or D; the adjoint branching needs dim g >= 5")
    return AdjointRestriction(g, orthogonal_algebra(d))


def restrict_weights(chi: dict[Weight, int], res: AdjointRestriction) -> dict[Weight, int]:
    out: dict[Weight, int] = {}
    for w, m in chi.items():
        r = res(w)
        out[r] = out.get(r, 0) + m
    return out


def restrict_character(c: GradedCharacter, e: EmbeddingSpec | SimpleLieAlgebra | str) -> GradedCharacter:
    """Restrict a graded character of so(dim g) to g along the adjoint embedding."""
    g = e.source if isinstance(e, EmbeddingSpec) else lie_algebra(e)
    if isinstance(e, EmbeddingSpec) and e != adjoint_embedding(g):
        raise DomainError("only the adjoint embedding g -> so(dim g) has a built-in weight restriction")
    res = adjoint_restriction(g)
    if c.algebra != res.target:
        raise DomainError(f"character is over {c.algebra}, expected {res.target} for {g}")
    layers = tuple(restrict_weights(layer, res) for layer in c.layers)
    return GradedCharacter(g, c.level * dual_coxeter(g), None, c.depth, layers, c.method)


@dataclass(frozen=True)
class BranchComponent:
    weight: Weight  # source highest weight at level h^vee(g)
    degree: int  # target degree where its top layer sits
    conformal_weight: Fraction
    multiplicity: int


@dataclass(frozen=True)
class BranchingResult:
    source: SimpleLieAlgebra
    source_level: int
    target: SimpleLieAlgebra
    target_weight: Weight
    depth: int
    components: tuple[BranchComponent, ...]
    residual: tuple[int, ...]  # unmatched dimension per degree

    @property
    def exact(self) -> bool:
        return not any(self.residual)

    def multiplicity(self, weight: Sequence[int]) -> int:
        weight = tuple(weight)
        return sum(c.multiplicity for c in self.components if c.weight == weight)


def _shifted_layers(c: GradedCharacter, offset: int, depth: int) -> list[dict]:
    return [dict() for _ in range(offset)] + [c.layers[d] for d in range(depth + 1 - offset)]


def branch_decompose(
    g: SimpleLieAlgebra,
    depth: int,
    target_weight: Sequence[int] | None = None,
    method: str = "weyl_kac",
) -> BranchingResult:
    """Decompose H_{Lambda, 1}(so(dim g)) into level-h^vee(g) modules of g, up to ``depth``.

    Greedy peel by ascending degree: the residual layer is split into finite
    irreducibles; each one that is integrable at level h^vee with conformal weight
    aligned to the degree is the top of a g-module, whose truncated character is
    subtracted from all higher layers.
    """
    g = lie_algebra(g)
    res = adjoint_restriction(g)
    so = res.target
    if dim_algebra(g) > limits().max_branch_dim:
        raise CapExceeded(f"dim {g} = {dim_algebra(g)} exceeds the branching cap {limits().max_branch_dim}")
    if target_weight is None:
        target_weight = (0,) * so.rank
    target_weight = leveled(so, 1, target_weight).weight
    index = dynkin_index_embedding(adjoint_embedding(g))
    assert index.denominator == 1
    source_level = int(index)
    h_target = conformal_weight(so, 1, target_weight)

    big = graded_character(so, 1, target_weight, depth, method)
    residual = [restrict_weights(layer, res) for layer in big.layers]
    alcove_set = {w.weight for w in alcove(g, source_level)}
    components = []
    for D in range(depth + 1):
        pieces = decompose_character(g, residual[D])
        for mu, m in pieces.items():
            if m < 0:
                raise CrossCheckError(f"negative multiplicity {m} for {mu} at degree {D}")
            if mu not in alcove_set:
                continue
            h_mu = conformal_weight(g, source_level, mu)
            gap = h_target + D - h_mu
            if gap < 0 or gap.denominator != 1:
                continue
            components.append(BranchComponent(mu, D, h_mu, m))
            sub = graded_character(g, source_level, mu, depth - D, method)
            for e in range(D, depth + 1):
                layer = residual[e]
                for w, k in sub.layers[e - D].items():
                    v = layer.get(w, 0) - m * k
                    if v:
                        layer[w] = v
                    else:
                        layer.pop(w, None)
        if any(v < 0 for v in residual[D].values()):
            raise CrossCheckError(f"negative residual multiplicity at degree {D}")
    residual_dims = tuple(sum(layer.values()) for layer in residual)
    return BranchingResult(g, source_level, so, target_weight, depth, tuple(components), residual_dims)


def finite_character(g: SimpleLieAlgebra, lam) -> dict[Weight, int]:
    return character(g, _labels(lam))
