import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from blockcount import CapExceeded, DomainError
from blockcount.affinechar import (
    adjoint_restriction,
    branch_decompose,
    epsilon_coordinates,
    graded_character,
    graded_dominant,
    restrict_character,
    restrict_weights,
)
from blockcount.embeddings import adjoint_embedding
from blockcount.rootdata import alcove, dim_algebra, lie_algebra, weyl_dim
from blockcount.weyl import character, dominant_rep, orbit
from oracles import a1_level1, so_fermion_layers

GOLDEN = Path(__file__).parent / "golden"
METHODS = ("weyl_kac", "freudenthal")


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("lam", [0, 1])
def test_a1_level_one_is_lattice_theta_over_eta(method, lam):
    c = graded_character(lie_algebra("A1"), 1, (lam,), 6, method)
    assert list(c.layers) == a1_level1(lam, 6)


def test_a1_vacuum_dimensions():
    assert graded_character(lie_algebra("A1"), 1, (0,), 4).dimensions() == [1, 3, 4, 7, 13]


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("name,rank,neutral", [("D4", 4, False), ("B3", 3, True)])
@pytest.mark.parametrize("sector", ["even", "odd"])
def test_level_one_orthogonal_modules_are_free_fermions(method, name, rank, neutral, sector):
    lam = (0,) * rank if sector == "even" else (1,) + (0,) * (rank - 1)
    c = graded_character(lie_algebra(name), 1, lam, 3, method)
    assert list(c.layers) == so_fermion_layers(rank, 3, sector, neutral)


@pytest.mark.parametrize(
    "name,level", [("A1", 1), ("A1", 2), ("A1", 3), ("A2", 1), ("A2", 2), ("B3", 1), ("D4", 1), ("G2", 1), ("C2", 2)]
)
def test_algorithms_agree(name, level):
    g = lie_algebra(name)
    depth = 4 if g.rank <= 2 else 3
    for w in alcove(g, level):
        assert graded_dominant(g, level, w.weight, depth, "weyl_kac") == graded_dominant(g, level, w.weight, depth, "freudenthal")


@settings(max_examples=15)
@given(st.sampled_from([("A2", 2), ("B2", 1), ("G2", 2), ("C3", 1)]), st.data())
def test_character_invariants(gl, data):
    name, level = gl
    g = lie_algebra(name)
    lam = data.draw(st.sampled_from([w.weight for w in alcove(g, level)]))
    c = graded_character(g, level, lam, 2)
    assert c.layers[0] == character(g, lam)
    assert c.dimensions()[0] == weyl_dim(g, lam)
    for d, layer in enumerate(c.layers):
        for mu, m in layer.items():
            assert all(layer[nu] == m for nu in orbit(g, dominant_rep(g, mu)))
        assert all(k > 0 for k in c.decomposition(d).values())


def test_depth_cap_and_validation():
    A1 = lie_algebra("A1")
    with pytest.raises(CapExceeded):
        graded_character(A1, 1, (0,), 7)
    with pytest.raises(DomainError):
        graded_character(A1, 1, (2,), 2)
    with pytest.raises(DomainError):
        graded_character(A1, 1, (0,), 2, method="magic")


def test_epsilon_coordinates():
    D4 = lie_algebra("D4")
    half = Fraction(1, 2)
    assert epsilon_coordinates(D4, (1, 0, 0, 0)) == (1, 0, 0, 0)
    assert epsilon_coordinates(D4, (0, 0, 0, 1)) == (half, half, half, half)
    assert epsilon_coordinates(D4, (0, 0, 1, 0)) == (half, half, half, -half)
    assert epsilon_coordinates(lie_algebra("B3"), (0, 0, 1)) == (half, half, half)


def test_restriction_of_vector_is_adjoint():
    A2 = lie_algebra("A2")
    so8 = graded_character(lie_algebra("D4"), 1, (1, 0, 0, 0), 1)
    restricted = restrict_character(so8, adjoint_embedding(A2))
    assert restricted.layers[0] == character(A2, (1, 1))
    assert sum(restricted.layers[0].values()) == 8


def test_restriction_of_vacuum_top_is_trivial_and_linear():
    A2 = lie_algebra("A2")
    res = adjoint_restriction(A2)
    vac = graded_character(res.target, 1, (0, 0, 0, 0), 1)
    vec = graded_character(res.target, 1, (1, 0, 0, 0), 1)
    r_vac, r_vec = restrict_character(vac, A2), restrict_character(vec, A2)
    assert r_vac.layers[0] == {(0, 0): 1}
    # restriction commutes with direct sums on degree 1
    both = dict(vac.layers[1])
    for w, m in vec.layers[1].items():
        both[w] = both.get(w, 0) + m
    summed = dict(r_vac.layers[1])
    for w, m in r_vec.layers[1].items():
        summed[w] = summed.get(w, 0) + m
    assert restrict_weights(both, res) == summed


def test_restriction_rejects_wrong_algebra():
    c = graded_character(lie_algebra("B3"), 1, (0, 0, 0), 1)
    with pytest.raises(DomainError):
        restrict_character(c, lie_algebra("A2"))


def _as_json(r):
    return [
        {"weight": list(c.weight), "degree": c.degree, "conformal_weight": str(c.conformal_weight), "multiplicity": c.multiplicity}
        for c in r.components
    ]


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_branching_matches_golden(name):
    doc = json.loads((GOLDEN / f"branching_{name.lower()}.json").read_text())
    r = branch_decompose(lie_algebra(name), doc["depth"])
    assert _as_json(r) == doc["components"]
    assert list(r.residual) == doc["residual"] == [0] * (doc["depth"] + 1)
    assert r.source_level == doc["source_level"]


def test_branching_multiplicity_one_and_finiteness():
    A2 = lie_algebra("A2")
    seen = []
    for depth in range(0, 4):
        r = branch_decompose(A2, depth)
        assert r.multiplicity((0, 0)) == 1
        assert r.exact
        seen.append({c.weight for c in r.components})
    # the set of source modules stabilises once every top has appeared
    assert seen[1] == seen[2] == seen[3]


def test_branching_conserves_dimension():
    A2 = lie_algebra("A2")
    depth = 3
    r = branch_decompose(A2, depth)
    target = graded_character(r.target, 1, r.target_weight, depth).dimensions()
    total = [0] * (depth + 1)
    for c in r.components:
        dims = graded_character(A2, r.source_level, c.weight, depth - c.degree).dimensions()
        for d, x in enumerate(dims):
            total[c.degree + d] += c.multiplicity * x
    assert total == target


@pytest.mark.parametrize("target", [(1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)])
def test_other_level_one_sectors_branch_to_adjoint(target):
    r = branch_decompose(lie_algebra("A2"), 2, target)
    assert r.exact
    assert [(c.weight, c.degree, c.multiplicity) for c in r.components] == [((1, 1), 0, 1)]
    assert r.components[0].conformal_weight == Fraction(1, 2)


def test_branching_caps():
    with pytest.raises(CapExceeded):
        branch_decompose(lie_algebra("A5"), 1)  # dim 35 > 28
    assert dim_algebra(lie_algebra("B3")) <= 28
