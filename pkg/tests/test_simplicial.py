import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from nilreg.graphs import complete_graph, cycle_graph, path_graph
from nilreg.monomials import DomainError, MonomialIdeal, closed_neighborhood_ideal
from nilreg.simplicial import (SimplicialComplex, dominance_complex, euler_characteristic_faces,
                               euler_characteristic_homology, homological_dimension, minimal_transversals,
                               reduced_homology_ranks, stanley_reisner_complex, stanley_reisner_ideal)

TRIANGLE = SimplicialComplex.from_faces(3, [{0, 1}, {0, 2}, {1, 2}])


def facet_sets(cx):
    return sorted(map(tuple, cx.facet_sets()))


def test_sr_complex_examples():
    assert facet_sets(stanley_reisner_complex(MonomialIdeal.of(2, [{0, 1}]))) == [(0,), (1,)]
    assert facet_sets(stanley_reisner_complex(MonomialIdeal.zero(3))) == [(0, 1, 2)]
    # frozen from brute force over the 8 subsets of {x1,x2,x3}
    assert facet_sets(stanley_reisner_complex(closed_neighborhood_ideal(path_graph(3)))) == [(0, 2), (1,)]
    with pytest.raises(DomainError):
        stanley_reisner_complex(MonomialIdeal.unit(3))


def test_sr_ideal_examples():
    assert stanley_reisner_ideal(SimplicialComplex.simplex(4)).is_zero
    assert stanley_reisner_ideal(TRIANGLE).gens == (0b111,)


def test_dominance_complex_examples():
    assert facet_sets(dominance_complex(complete_graph(3))) == [(0, 1), (0, 2), (1, 2)]
    assert facet_sets(dominance_complex(path_graph(3))) == [(0, 2), (1,)]


def test_minimal_transversals_small():
    assert sorted(minimal_transversals([0b011, 0b110], 3)) == sorted([0b010, 0b101])
    assert minimal_transversals([], 3) == [0]


def test_homology_examples():
    assert reduced_homology_ranks(TRIANGLE).ranks == {1: 1}
    assert reduced_homology_ranks(SimplicialComplex.simplex(1)).ranks == {}
    assert reduced_homology_ranks(SimplicialComplex.from_faces(2, [{0}, {1}])).ranks == {0: 1}
    assert reduced_homology_ranks(SimplicialComplex.empty(2)).ranks == {-1: 1}
    assert homological_dimension(TRIANGLE) == 1
    assert homological_dimension(SimplicialComplex.simplex(4)) is None


def _rational_homology(cx):
    faces = cx.faces()
    by_dim = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    rank = {}
    for d, fs in by_dim.items():
        lower = by_dim.get(d - 1, [])
        if not lower:
            rank[d] = 0
            continue
        idx = {f: i for i, f in enumerate(lower)}
        mat = np.zeros((len(lower), len(fs)))
        for c, f in enumerate(fs):
            verts = [v for v in range(cx.n_vertices) if f >> v & 1]
            for k, v in enumerate(verts):
                mat[idx[f & ~(1 << v)], c] = (-1) ** k
        rank[d] = np.linalg.matrix_rank(mat)
    return {d: len(fs) - rank.get(d, 0) - rank.get(d + 1, 0) for d, fs in by_dim.items()
            if len(fs) - rank.get(d, 0) - rank.get(d + 1, 0)}


def test_dominance_complex_of_c5():
    d = dominance_complex(cycle_graph(5))
    # independent float rank over Q, frozen: H~_1 = 1 only
    assert _rational_homology(d) == {1: 1}
    assert reduced_homology_ranks(d).ranks == {1: 1}
    assert homological_dimension(d) == 1


@st.composite
def complexes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=5))
    return SimplicialComplex.from_faces(n, [{v for v in range(n) if g >> v & 1} for g in gens])


@settings(max_examples=100, deadline=None)
@given(complexes())
def test_homology_matches_rationals_and_euler(cx):
    h = reduced_homology_ranks(cx, 32003)
    assert h.ranks == _rational_homology(cx)
    assert euler_characteristic_faces(cx) == euler_characteristic_homology(h)
    assert euler_characteristic_faces(cx) == euler_characteristic_homology(reduced_homology_ranks(cx, 2))


@settings(max_examples=100, deadline=None)
@given(complexes())
def test_sr_round_trip_complex(cx):
    assert stanley_reisner_complex(stanley_reisner_ideal(cx)) == cx


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, (1 << n) - 1), max_size=5))))
def test_sr_round_trip_ideal(data):
    n, gens = data
    ideal = MonomialIdeal.of(n, gens)
    assert stanley_reisner_ideal(stanley_reisner_complex(ideal)) == ideal


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_dominance_complex_sr_ideal_is_ni(g):
    assert stanley_reisner_ideal(dominance_complex(g)) == closed_neighborhood_ideal(g)


@settings(max_examples=60, deadline=None)
@given(complexes(), st.randoms())
def test_homology_permutation_invariant(cx, rnd):
    perm = list(range(cx.n_vertices))
    rnd.shuffle(perm)
    assert reduced_homology_ranks(cx.permute(perm)).ranks == reduced_homology_ranks(cx).ranks


def test_homology_field_dependence_rp2():
    # 6-vertex triangulation of the real projective plane: torsion shows up over GF(2) only
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1), (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    cx = SimplicialComplex.from_faces(6, [set(t) for t in tris])
    assert reduced_homology_ranks(cx, 2).ranks == {1: 1, 2: 1}
    assert reduced_homology_ranks(cx, 3).ranks == {}
    assert _rational_homology(cx) == {}


def test_f_vector_triangle():
    assert TRIANGLE.f_vector() == {-1: 1, 0: 3, 1: 3}
    assert len(list(itertools.chain(TRIANGLE.faces()))) == 7
