"""The ten acceptance checks, shared by the test suite and ``blockcount selftest``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .affinechar import branch_decompose, graded_character
from .center import act, center_group, element_moving_vacuum_to
from .embeddings import adjoint_embedding, adjoint_into_sl, dynkin_index_embedding, is_conformal
from .fusion import (
    VerlindeProblem,
    factorization_terms,
    fuse,
    fusion_coefficient_from_s,
    propagate_vacuum,
    s_matrix,
    verlinde_dim,
    verlinde_dim_exact,
)
from .liematrix import adjoint_projection, casimir_tensor, identity, structure_constants
from .rootdata import alcove, dual_coxeter, lie_algebra
from .thetachar import even_count_formula, is_free_and_transitive, parity_counts

CONFORMAL_SWEEP = ("A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8")
ORACLE_GRID = {"algebras": ("A1", "A2", "B3", "D4"), "levels": (1, 2), "genera": (0, 1, 2, 3), "max_insertions": 3}
CENTER_FAMILIES = tuple(
    [f"A{n}" for n in range(1, 6)] + [f"B{n}" for n in range(2, 6)] + [f"C{n}" for n in range(2, 6)] + ["D4", "D5", "G2", "F4"]
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} criterion {self.number:2d}: {self.title} ({self.detail}) [{self.seconds:.2f}s]"


def _timed(fn: Callable[[], tuple[bool, str]]) -> tuple[bool, str, float]:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return ok, detail, time.perf_counter() - t0


def _cold(*caches) -> None:
    for c in caches:
        c.cache_clear()


def spin_verlinde_counts() -> tuple[bool, str]:
    D4, B3 = lie_algebra("D4"), lie_algebra("B3")
    worst = 0.0
    bad = []
    for genus in range(1, 5):
        for g, want in ((D4, 2 ** (2 * genus)), (B3, even_count_formula(genus))):
            _cold(s_matrix)
            t0 = time.perf_counter()
            got = verlinde_dim(VerlindeProblem(g, 1, genus))
            dt = time.perf_counter() - t0
            worst = max(worst, dt)
            if got != want or dt >= 1.0:
                bad.append(f"{g} genus {genus}: {got} vs {want} in {dt:.3f}s")
    return not bad, "; ".join(bad) or f"8 queries exact, slowest {worst * 1000:.1f} ms"


def adjoint_conformality() -> tuple[bool, str]:
    t0 = time.perf_counter()
    bad = []
    for name in CONFORMAL_SWEEP:
        e = adjoint_embedding(name)
        check = is_conformal(e)
        if not (check.conformal and check.lhs == check.rhs):
            bad.append(f"{name}: {check.lhs} != {check.rhs}")
        if dynkin_index_embedding(e) != dual_coxeter(e.source):
            bad.append(f"{name}: index {dynkin_index_embedding(e)} != h^vee {dual_coxeter(e.source)}")
    dt = time.perf_counter() - t0
    if dt >= 1.0:
        bad.append(f"sweep took {dt:.2f}s")
    return not bad, "; ".join(bad) or f"{len(CONFORMAL_SWEEP)} algebras conformal with index h^vee"


def sl_composites_not_conformal() -> tuple[bool, str]:
    parts = []
    ok = True
    for name in ("A2", "G2"):
        check = is_conformal(adjoint_into_sl(name))
        ok &= not check.conformal
        parts.append(f"{name}: {check.lhs} vs {check.rhs}")
    return ok, "; ".join(parts)


def grid_problems() -> Iterator[VerlindeProblem]:
    for name in ORACLE_GRID["algebras"]:
        g = lie_algebra(name)
        for level in ORACLE_GRID["levels"]:
            weights = [w.weight for w in alcove(g, level)]
            for k in range(ORACLE_GRID["max_insertions"] + 1):
                for ins in combinations_with_replacement(weights, k):
                    for genus in ORACLE_GRID["genera"]:
                        yield VerlindeProblem(g, level, genus, ins)


def oracle_equivalence() -> tuple[bool, str]:
    tol = 1e-6
    n_fusion = 0
    for name, top in (("A1", 4), ("A2", 3)):
        g = lie_algebra(name)
        for level in range(1, top + 1):
            S = s_matrix(g, level)
            ws = [w.weight for w in alcove(g, level)]
            for a in ws:
                for b in ws:
                    kw = fuse(g, level, a, b)
                    for c in ws:
                        z = fusion_coefficient_from_s(S, a, b, c)
                        n_fusion += 1
                        if abs(z - kw.get(c, 0)) > tol:
                            return False, f"{g} level {level}: N({a},{b};{c}) = {kw.get(c, 0)} vs S-route {z}"
    n_grid = 0
    for p in grid_problems():
        n_grid += 1
        a, b = verlinde_dim(p), verlinde_dim_exact(p)
        if a != b:
            return False, f"{p}: S-route {a} vs exact {b}"
    return True, f"{n_fusion} fusion coefficients and {n_grid} Verlinde grid points agree"


def factorization_and_propagation() -> tuple[bool, str]:
    n = 0
    for p in grid_problems():
        for dim in (verlinde_dim, verlinde_dim_exact):
            base = dim(p)
            if dim(propagate_vacuum(p)) != base:
                return False, f"propagation fails for {p} via {dim.__name__}"
            if p.genus >= 1 and sum(dim(q) for q in factorization_terms(p)) != base:
                return False, f"factorization fails for {p} via {dim.__name__}"
        n += 1
    return True, f"both identities hold on {n} grid points, on both routes"


def branching_multiplicity_one() -> tuple[bool, str]:
    t0 = time.perf_counter()
    r = branch_decompose(lie_algebra("A2"), 2)
    dt = time.perf_counter() - t0
    m = r.multiplicity((0, 0))
    ok = m == 1 and not any(r.residual) and dt < 60
    found = ", ".join(f"{c.weight}@{c.degree} x{c.multiplicity}" for c in r.components)
    return ok, f"vacuum multiplicity {m}, residual {list(r.residual)}, components {found}"


def character_cross_check() -> tuple[bool, str]:
    cases = [("A1", 1), ("A1", 2), ("D4", 1)]
    depth = 4
    n = 0
    for name, level in cases:
        g = lie_algebra(name)
        for w in alcove(g, level):
            a = graded_character(g, level, w.weight, depth, "weyl_kac")
            b = graded_character(g, level, w.weight, depth, "freudenthal")
            for d in range(depth + 1):
                if a.layers[d] != b.layers[d]:
                    return False, f"{g} level {level} {w.weight}: degree {d} differs"
            n += 1
    return True, f"{n} modules agree through depth {depth}"


def theta_counts() -> tuple[bool, str]:
    for genus in range(1, 6):
        even, odd = parity_counts(genus)
        if even != even_count_formula(genus) or even + odd != 4**genus:
            return False, f"genus {genus}: {even} even, {odd} odd"
    B3 = lie_algebra("B3")
    for genus in range(1, 5):
        even, _ = parity_counts(genus)
        v = verlinde_dim(VerlindeProblem(B3, 1, genus))
        if even != v:
            return False, f"genus {genus}: {even} even vs B3 Verlinde {v}"
    for genus in range(1, 4):
        if not is_free_and_transitive(genus):
            return False, f"torsor action fails at genus {genus}"
    return True, "even counts match closed form (genus 1..5) and B3 level 1 (genus 1..4); torsor ok for genus <= 3"


def projection_and_casimir() -> tuple[bool, str]:
    for name in ("A1", "A2", "B2"):
        sc = structure_constants(name)
        d = sc.dim
        P = adjoint_projection(sc)
        for c in range(d):
            if P(sc.ad[c]) != [Fraction(int(a == c)) for a in range(d)]:
                return False, f"{name}: P(ad x_{c}) != x_{c}"
        if casimir_tensor(sc).contraction() != identity(d):
            return False, f"{name}: Casimir contraction is not the identity"
    return True, "P o ad = id and gamma K = id for A1, A2, B2"


def center_action() -> tuple[bool, str]:
    for name in ("D4", "B3"):
        g = lie_algebra(name)
        s = element_moving_vacuum_to(g, 1)
        vac = (0,) * g.rank
        vec = (1,) + (0,) * (g.rank - 1)
        if act(s, vac, 1) != vec or act(s, vec, 1) != vac:
            return False, f"{name}: the mu_2 element does not swap vacuum and vector"
    checked = 0
    for name in CENTER_FAMILIES:
        g = lie_algebra(name)
        elems = center_group(g)
        for level in range(1, 4):
            ws = [w.weight for w in alcove(g, level)]
            for s in elems:
                images = [act(s, w, level) for w in ws]
                if sorted(images) != sorted(ws):
                    return False, f"{name} level {level}: {s.automorphism} is not a bijection"
                if s.is_identity and images != ws:
                    return False, f"{name}: identity acts nontrivially"
                for t in elems:
                    for w in ws:
                        if act(s @ t, w, level) != act(s, act(t, w, level), level):
                            return False, f"{name} level {level}: composition law fails"
            checked += 1
    return True, f"mu_2 swap for D4 and B3; action laws on {checked} (algebra, level) pairs"


CRITERIA: tuple[tuple[int, str, Callable[[], tuple[bool, str]]], ...] = (
    (1, "D4/B3 level-1 Verlinde counts", spin_verlinde_counts),
    (2, "adjoint embeddings are conformal", adjoint_conformality),
    (3, "g -> sl(g) is not conformal", sl_composites_not_conformal),
    (4, "fusion and Verlinde oracles agree", oracle_equivalence),
    (5, "factorization and propagation of vacua", factorization_and_propagation),
    (6, "A2 in so8 branching has multiplicity one", branching_multiplicity_one),
    (7, "Weyl-Kac equals affine Freudenthal", character_cross_check),
    (8, "theta characteristic counts", theta_counts),
    (9, "projection and Casimir identities", projection_and_casimir),
    (10, "center action", center_action),
)


def run_criterion(number: int) -> CriterionResult:
    for n, title, fn in CRITERIA:
        if n == number:
            ok, detail, dt = _timed(fn)
            return CriterionResult(n, title, ok, detail, dt)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]


def main() -> int:
    results = run_all()
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
