import itertools

import pytest
from hypothesis import given, settings

from conftest import brute_matching_number, graphs
from nilreg.graphs import (FamilySpec, Graph, GraphError, SizeGuardError, build_family, clique_cover_number,
                           closed_neighborhood, complete_graph, cycle_graph, disjoint_union, empty_graph,
                           is_chordal, is_dominating, matching_number, minimal_dominating_sets, parse_family,
                           path_graph, rooted_levels, simplicial_vertices, structure_predicates, whisker_all)


@pytest.mark.parametrize("spec, n, edges", [
    ("path:3", 3, {(0, 1), (1, 2)}),
    ("complete_bipartite:3,2", 5, {(i, j) for i in range(3) for j in (3, 4)}),
])
def test_build_family_edges(spec, n, edges):
    g = build_family(spec)
    assert g.n == n and set(g.edges) == edges


def test_wheel_has_spokes_and_rim():
    g = build_family("wheel:8")
    assert g.n == 8 and g.m == 14
    assert g.degree(7) == 7
    assert all(g.degree(v) == 3 for v in range(7))


@pytest.mark.parametrize("text", ["path:0", "wheel", "complete_bipartite:3", "torus:4", "cycle:x"])
def test_bad_family_specs(text):
    with pytest.raises(GraphError):
        build_family(text)


def test_family_spec_round_trip():
    for text in ["path:5", "wheel:8", "complete_bipartite:3,2", "whiskered(cycle:4)",
                 "disjoint_union(path:3,complete_bipartite:2,2)"]:
        assert str(parse_family(text)) == text
    assert build_family("whiskered(cycle:4)").n == 8
    assert build_family("disjoint_union(path:3,cycle:3)").m == 5


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    assert Graph.from_edges(3, [(0, 1), (1, 0)]).m == 1


def test_closed_neighborhood():
    assert closed_neighborhood(cycle_graph(5), 0) == {4, 0, 1}
    assert all(closed_neighborhood(complete_graph(4), v) == {0, 1, 2, 3} for v in range(4))
    assert closed_neighborhood(empty_graph(3), 2) == {2}
    with pytest.raises(GraphError):
        closed_neighborhood(empty_graph(3), 3)


@pytest.mark.parametrize("g, a", [
    (path_graph(3), 1),
    (cycle_graph(5), 2),
    (complete_graph(5), 2),
    (whisker_all(complete_graph(4)), 4),
    (whisker_all(cycle_graph(5)), 5),
])
def test_matching_number_examples(g, a):
    assert matching_number(g) == a


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_matching_number_matches_edge_subset_search(g):
    assert matching_number(g) == brute_matching_number(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_matching_additive_over_disjoint_union(g, h):
    assert matching_number(disjoint_union(g, h)) == matching_number(g) + matching_number(h)


def test_matching_cycles_and_complete():
    for n in range(3, 13):
        assert matching_number(cycle_graph(n)) == n // 2
    for m in range(1, 13):
        assert matching_number(complete_graph(m)) == m // 2


def test_simplicial_vertices():
    assert simplicial_vertices(complete_graph(3)) == {0, 1, 2}
    assert simplicial_vertices(path_graph(4)) == {0, 3}
    assert simplicial_vertices(cycle_graph(4)) == set()


def test_minimal_dominating_sets():
    assert minimal_dominating_sets(path_graph(3)) == {frozenset({1}), frozenset({0, 2})}
    assert minimal_dominating_sets(complete_graph(3)) == {frozenset({v}) for v in range(3)}
    # frozen from subset enumeration over all 32 subsets of C_5
    assert minimal_dominating_sets(cycle_graph(5)) == {frozenset(s) for s in
                                                       [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]}
    with pytest.raises(SizeGuardError):
        minimal_dominating_sets(empty_graph(25))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_minimal_dominating_sets_by_definition(g):
    found = minimal_dominating_sets(g)
    vs = range(g.n)
    dom = [set(s) for k in range(g.n + 1) for s in itertools.combinations(vs, k)
           if all(v in s or any(u in s for u in g.neighbors(v)) for v in vs)]
    brute = {frozenset(s) for s in dom if not any(t < s for t in dom)}
    assert found == brute


def test_clique_cover_number():
    for m in range(1, 7):
        assert clique_cover_number(complete_graph(m)) == 1
        assert clique_cover_number(empty_graph(m)) == m
    assert clique_cover_number(cycle_graph(5)) == 3
    with pytest.raises(SizeGuardError):
        clique_cover_number(empty_graph(17))


def _brute_chromatic(g):
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    return 0


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_clique_cover_against_brute_colouring(g):
    assert clique_cover_number(g) == _brute_chromatic(g.complement())
    assert clique_cover_number(g) + matching_number(g) <= g.n


def test_structure_predicates():
    s = structure_predicates(path_graph(5))
    assert s.is_forest and s.is_tree and len(s.components) == 1
    s = structure_predicates(cycle_graph(6))
    assert s.is_unicyclic and not s.is_chordal
    s = structure_predicates(complete_graph(4))
    assert s.is_chordal and not s.is_forest
    s = structure_predicates(disjoint_union(path_graph(2), cycle_graph(3), empty_graph(1)))
    assert sorted(c.n for c in s.components) == [1, 2, 3]
    assert sorted(v for comp in s.component_vertices for v in comp) == list(range(6))


def _has_long_induced_cycle(g):
    for k in range(4, g.n + 1):
        for sub in itertools.combinations(range(g.n), k):
            h, _ = g.induced(sub)
            if h.m == k and all(h.degree(v) == 2 for v in range(k)) and structure_predicates(h).is_unicyclic:
                return True
    return False


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_chordality_matches_induced_cycle_search(g):
    assert is_chordal(g) == (not _has_long_induced_cycle(g))
    if is_chordal(g) and g.n >= 2:
        assert simplicial_vertices(g)


def test_forests_are_chordal():
    assert is_chordal(disjoint_union(path_graph(4), build_family("star:5")))


def test_whisker_all():
    assert whisker_all(Graph(1)).m == 1
    g = whisker_all(path_graph(2))
    assert (g.n, g.m) == (4, 3)
    g = whisker_all(cycle_graph(3))
    assert (g.n, g.m) == (6, 6)
    assert g.label(3) == "y1"


LEVELS_TREE_LABELS = ["z", "y1", "y2", "y3", "y4", "y5", "y6", "y7"]


def levels_tree() -> Graph:
    z, y1, y2, y3, y4, y5, y6, y7 = range(8)
    return Graph.from_edges(8, [(z, y1), (y1, y4), (y4, y6), (y1, y3), (y4, y7), (z, y2), (y2, y5)],
                            LEVELS_TREE_LABELS)


def test_rooted_levels_eight_vertex_tree():
    level, height = rooted_levels(levels_tree(), 0)
    assert level == [0, 1, 1, 2, 2, 2, 3, 3]
    assert height == 3


def test_rooted_levels_small():
    assert rooted_levels(path_graph(3), 0)[1] == 2
    assert rooted_levels(Graph(1), 0) == ([0], 0)
    with pytest.raises(GraphError):
        rooted_levels(cycle_graph(4), 0)


def test_family_spec_validation_direct():
    with pytest.raises(GraphError):
        FamilySpec("whiskered", (), ())
    assert not is_dominating(path_graph(3), 0b001)
