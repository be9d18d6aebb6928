import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from nilreg.graphs import Graph, build_family, complete_graph, cycle_graph, empty_graph, path_graph, star_graph, whisker_all
from nilreg.monomials import (DomainError, Monomial, MonomialIdeal, add_ideals, add_variable, closed_neighborhood_ideal,
                              colon_by_monomial, edge_ideal, intersect_ideals, path_ideal, scale_by_monomial,
                              split_at_variable)


def I(n, *gens):
    return MonomialIdeal.of(n, [set(g) for g in gens])


def test_monomial_basics():
    m = Monomial.from_exponents([1, 0, 1])
    assert m.support == [0, 2] and m.degree == 2 and str(m) == "x1*x3"
    assert Monomial.from_indices(3, [0]).divides(m)
    with pytest.raises(DomainError):
        Monomial.from_exponents([2, 0])


def test_ni_examples():
    assert closed_neighborhood_ideal(Graph(0)).is_zero
    assert closed_neighborhood_ideal(path_graph(3)) == I(3, {0, 1}, {1, 2})
    for m in range(1, 9):
        assert closed_neighborhood_ideal(complete_graph(m)).gens == ((1 << m) - 1,)
    g = whisker_all(cycle_graph(4))
    assert closed_neighborhood_ideal(g) == I(8, *[{i, 4 + i} for i in range(4)])
    assert str(closed_neighborhood_ideal(path_graph(3))) == "<x1*x2, x2*x3>"


def test_ni_of_isolated_vertices_is_variables():
    assert closed_neighborhood_ideal(empty_graph(3)) == I(3, {0}, {1}, {2})


def test_edge_ideal_examples():
    for n in range(2, 9):
        s = star_graph(n)
        assert edge_ideal(s) == closed_neighborhood_ideal(s)
    assert edge_ideal(empty_graph(4)).is_zero
    assert edge_ideal(complete_graph(3)) == I(3, {0, 1}, {0, 2}, {1, 2})


def test_path_ideal():
    assert path_ideal(path_graph(3), 3) == I(3, {0, 1, 2})
    assert path_ideal(path_graph(3), 4).is_zero
    assert path_ideal(path_graph(4), 2) == edge_ideal(path_graph(4))
    for n in range(3, 13):
        assert path_ideal(cycle_graph(n), 3) == closed_neighborhood_ideal(cycle_graph(n))


def test_colon_and_intersection():
    p3 = I(3, {0, 1}, {1, 2})
    assert colon_by_monomial(p3, 1 << 1) == I(3, {0}, {2})
    assert colon_by_monomial(p3, 0) == p3
    assert colon_by_monomial(p3, 0b011).is_unit
    assert intersect_ideals(I(3, {0, 1}), I(3, {1, 2})) == I(3, {0, 1, 2})
    assert add_ideals(I(3, {0, 1}), I(3, {0})) == I(3, {0})
    assert add_variable(p3, 1) == I(3, {1})


def test_wheel_ni_is_hub_times_cycle():
    w = build_family("wheel:6")
    hub = 1 << 5
    expected = scale_by_monomial(closed_neighborhood_ideal(cycle_graph(5)).with_variables(6), hub)
    assert closed_neighborhood_ideal(w) == add_ideals(expected, I(6, range(6)))


def test_scale_rejects_non_squarefree():
    with pytest.raises(DomainError):
        scale_by_monomial(I(2, {0, 1}), 1)


def test_split_examples():
    j, k = split_at_variable(closed_neighborhood_ideal(path_graph(3)), 0)
    assert j == I(3, {0, 1}) and k == I(3, {1, 2})
    j, k = split_at_variable(closed_neighborhood_ideal(complete_graph(3)), 0)
    assert j.gens == (0b111,) and k.is_zero
    with pytest.raises(ValueError):
        split_at_variable(I(3, {0}), 2)


def test_ring_mismatch_rejected():
    with pytest.raises(ValueError):
        add_ideals(I(2, {0}), I(3, {0}))


masks = st.integers(1, (1 << 6) - 1)


@settings(max_examples=200, deadline=None)
@given(st.lists(masks, min_size=1, max_size=8))
def test_minimal_generators_are_incomparable_and_generate(gens):
    ideal = MonomialIdeal.of(6, gens)
    for a in ideal.gens:
        for b in ideal.gens:
            assert a == b or a & ~b
    assert all(ideal.contains(g) for g in gens)
    assert all(g in gens for g in ideal.gens)


@settings(max_examples=100, deadline=None)
@given(st.lists(masks, min_size=1, max_size=6), st.lists(masks, min_size=1, max_size=6))
def test_sum_and_intersection_membership(a, b):
    ia, ib = MonomialIdeal.of(6, a), MonomialIdeal.of(6, b)
    s, c = add_ideals(ia, ib), intersect_ideals(ia, ib)
    for m in range(1 << 6):
        assert s.contains(m) == (ia.contains(m) or ib.contains(m))
        assert c.contains(m) == (ia.contains(m) and ib.contains(m))


@settings(max_examples=100, deadline=None)
@given(st.lists(masks, min_size=1, max_size=6), masks, masks)
def test_colon_definition_and_monotonicity(gens, m, extra):
    ideal = MonomialIdeal.of(6, gens)
    colon = colon_by_monomial(ideal, m)
    for f in range(1 << 6):
        assert colon.contains(f) == ideal.contains(f | m)
    assert colon.contains_ideal(ideal)
    assert colon_by_monomial(ideal, m | extra).contains_ideal(colon)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_ni_generators_are_minimal_neighbourhoods(g):
    ni = closed_neighborhood_ideal(g)
    closed = [g.closed[v] for v in range(g.n)]
    assert all(c in closed for c in ni.gens)
    assert all(ni.contains(c) for c in closed)
