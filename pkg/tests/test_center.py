import pytest
from hypothesis import given, strategies as st

from blockcount import DomainError
from blockcount.center import (
    act,
    affine_cartan_matrix,
    center_group,
    element_moving_vacuum_to,
    group_structure,
    group_table,
    orbit_of,
)
from blockcount.fusion import VerlindeProblem, dual_weight, fuse, verlinde_dim
from blockcount.rootdata import alcove, comarks, lie_algebra
from oracles import CENTER_ORDER


@pytest.mark.parametrize("name", sorted(CENTER_ORDER))
def test_center_orders(name):
    g = lie_algebra(name)
    elems = center_group(g)
    assert len(elems) == CENTER_ORDER[name]
    assert elems[0].is_identity
    # every center element moves node 0 to a node with comark 1
    marks = (1,) + comarks(g)
    assert all(marks[s.automorphism[0]] == 1 for s in elems)


@pytest.mark.parametrize("name,structure", [("D4", "Z_2 x Z_2"), ("D6", "Z_2 x Z_2"), ("D5", "Z_4"), ("D7", "Z_4"), ("A3", "Z_4"), ("E6", "Z_3"), ("E8", "Z_1")])
def test_group_structure(name, structure):
    assert group_structure(lie_algebra(name)) == structure


@pytest.mark.parametrize("name", ["A1", "A3", "B3", "D4", "E6", "E7"])
def test_automorphisms_preserve_affine_cartan_matrix(name):
    g = lie_algebra(name)
    M = affine_cartan_matrix(g)
    for s in center_group(g):
        p = s.automorphism
        assert all(M[p[i]][p[j]] == M[i][j] for i in range(len(p)) for j in range(len(p)))


def test_group_table_is_a_group():
    for name in ("A4", "D4", "D5"):
        g = lie_algebra(name)
        T = group_table(g)
        n = len(T)
        assert T[0] == list(range(n))
        assert all(sorted(row) == list(range(n)) for row in T)


@pytest.mark.parametrize("name", ["D4", "D5", "B3", "B4"])
def test_mu2_swaps_vacuum_and_vector(name):
    g = lie_algebra(name)
    s = element_moving_vacuum_to(g, 1)
    vac, vec = (0,) * g.rank, (1,) + (0,) * (g.rank - 1)
    assert act(s, vac, 1) == vec
    assert act(s, vec, 1) == vac


def test_b3_spinor_is_fixed():
    B3 = lie_algebra("B3")
    assert act(element_moving_vacuum_to(B3, 1), (0, 0, 1), 1) == (0, 0, 1)


@given(st.integers(1, 6), st.data())
def test_a1_node_swap(level, data):
    m = data.draw(st.integers(0, level))
    s = center_group(lie_algebra("A1"))[1]
    assert act(s, (m,), level) == (level - m,)
    assert len(orbit_of(s, (m,), level)) == (1 if 2 * m == level else 2)


@given(st.sampled_from(["A2", "A4", "B3", "C3", "D4", "D5", "E6"]), st.integers(1, 3))
def test_action_laws(name, level):
    g = lie_algebra(name)
    ws = [w.weight for w in alcove(g, level)]
    elems = center_group(g)
    for s in elems:
        assert sorted(act(s, w, level) for w in ws) == ws
        for t in elems:
            for w in ws:
                assert act(s @ t, w, level) == act(s, act(t, w, level), level)
        assert all(act(s.inverse(), act(s, w, level), level) == w for w in ws)


@pytest.mark.parametrize("name,level", [("A2", 2), ("D4", 1), ("B3", 2), ("A3", 2)])
def test_simple_currents_fuse_as_center_action(name, level):
    # the image of the vacuum under sigma fuses by sigma itself
    g = lie_algebra(name)
    for s in center_group(g):
        j = act(s, (0,) * g.rank, level)
        for w in alcove(g, level):
            assert fuse(g, level, j, w.weight) == {act(s, w.weight, level): 1}


@pytest.mark.parametrize("name,level", [("A2", 2), ("D4", 1), ("B3", 1), ("A3", 1)])
def test_verlinde_invariant_under_paired_center_action(name, level):
    g = lie_algebra(name)
    ws = [w.weight for w in alcove(g, level)]
    for s in center_group(g):
        for mu in ws:
            base = VerlindeProblem(g, level, 1, (mu, dual_weight(g, mu)))
            moved = VerlindeProblem(g, level, 1, (act(s, mu, level), act(s.inverse(), dual_weight(g, mu), level)))
            assert verlinde_dim(moved) == verlinde_dim(base)


def test_act_rejects_weights_outside_alcove():
    s = center_group(lie_algebra("A2"))[1]
    with pytest.raises(DomainError):
        act(s, (2, 0), 1)
    with pytest.raises(DomainError):
        element_moving_vacuum_to(lie_algebra("E8"), 1)
