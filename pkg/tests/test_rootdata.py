from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from blockcount import CapExceeded, DomainError
from blockcount.rootdata import (
    alcove,
    alcove_size,
    cartan_matrix,
    comarks,
    dim_algebra,
    dual_coxeter,
    dual_coxeter_from_roots,
    highest_root,
    leveled,
    lie_algebra,
    normalized_form,
    positive_roots,
    rho,
    weyl_dim,
    weyl_group_order,
)
from blockcount.weyl import orbit
from oracles import DIMENSION, DUAL_COXETER

ALL = sorted(DUAL_COXETER)


@pytest.mark.parametrize("name", ALL)
def test_dual_coxeter_and_dimension(name):
    g = lie_algebra(name)
    assert dual_coxeter(g) == DUAL_COXETER[name]
    assert dim_algebra(g) == DIMENSION[name]
    assert dual_coxeter_from_roots(g) == DUAL_COXETER[name]


@pytest.mark.parametrize("name", ALL)
def test_highest_root_has_norm_two(name):
    g = lie_algebra(name)
    theta = highest_root(g)
    assert normalized_form(g, theta, theta) == 2
    # h^vee = 1 + (rho, theta)
    assert 1 + normalized_form(g, rho(g), theta) == dual_coxeter(g)


@pytest.mark.parametrize("name", ALL)
def test_adjoint_dimension_by_weyl_formula(name):
    g = lie_algebra(name)
    assert weyl_dim(g, highest_root(g)) == dim_algebra(g)
    assert len(positive_roots(g)) * 2 + g.rank == dim_algebra(g)


@pytest.mark.parametrize("name,order", [("A2", 6), ("B2", 8), ("G2", 12), ("D4", 192), ("F4", 1152)])
def test_weyl_group_order_matches_regular_orbit(name, order):
    g = lie_algebra(name)
    assert weyl_group_order(g) == order
    assert len(orbit(g, rho(g))) == order


def test_conventions():
    assert cartan_matrix(lie_algebra("B2")) == ((2, -1), (-2, 2))
    assert cartan_matrix(lie_algebra("G2")) == ((2, -3), (-1, 2))
    assert comarks(lie_algebra("B3")) == (1, 2, 1)
    assert comarks(lie_algebra("E8")) == (2, 3, 4, 6, 5, 4, 3, 2)


@pytest.mark.parametrize(
    "text,canonical",
    [("so7", "B3"), ("sl3", "A2"), ("sp4", "C2"), ("so8", "D4"), ("so(6)", "A3"), ("B1", "A1"), ("C1", "A1"), ("D3", "A3"), ("su2", "A1")],
)
def test_aliases(text, canonical):
    assert lie_algebra(text).name == canonical


@pytest.mark.parametrize("text", ["D2", "so4", "E9", "G3", "X1", "sl1", "sp3", "A0"])
def test_rejects_bad_descriptors(text):
    with pytest.raises(DomainError):
        lie_algebra(text)


def test_alcove_examples():
    assert [w.weight for w in alcove(lie_algebra("A1"), 2)] == [(0,), (1,), (2,)]
    assert [w.weight for w in alcove(lie_algebra("D4"), 1)] == [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (1, 0, 0, 0)]
    assert [w.weight for w in alcove(lie_algebra("B3"), 1)] == [(0, 0, 0), (0, 0, 1), (1, 0, 0)]
    assert alcove(lie_algebra("E8"), 1)[0].weight == (0,) * 8
    assert len(alcove(lie_algebra("E8"), 1)) == 1


def test_alcove_cap_from_environment(monkeypatch):
    monkeypatch.setenv("BLOCKCOUNT_MAX_ALCOVE", "3")
    with pytest.raises(CapExceeded):
        alcove(lie_algebra("A1"), 3)
    monkeypatch.setenv("BLOCKCOUNT_MAX_ALCOVE", "4")
    assert len(alcove(lie_algebra("A1"), 3)) == 4


def test_leveled_rejects_outside_alcove():
    with pytest.raises(DomainError):
        leveled(lie_algebra("A2"), 1, (1, 1))
    with pytest.raises(DomainError):
        leveled(lie_algebra("A2"), 1, (1,))
    assert tuple(leveled(lie_algebra("A2"), 2, (1, 1))) == (1, 1)


@given(st.sampled_from(["A2", "B3", "C3", "D4", "G2", "F4"]), st.integers(0, 4))
def test_alcove_size_counts_enumeration(name, level):
    g = lie_algebra(name)
    ws = alcove(g, level)
    assert alcove_size(g, level) == len(ws)
    assert ws == sorted(ws)
    theta = highest_root(g)
    for w in ws:
        assert normalized_form(g, w.weight, theta) <= level


def test_large_rank_closed_forms():
    g = lie_algebra("D124")
    assert dual_coxeter(g) == 246
    assert dim_algebra(g) == 124 * 247
    assert dual_coxeter(lie_algebra("A20")) == 21
    assert normalized_form(lie_algebra("A1"), (1,), (1,)) == Fraction(1, 2)
