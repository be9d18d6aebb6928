"""Canonical forms and exhaustive enumeration of small graphs.

The canonical form is the lexicographically smallest upper-triangle
adjacency bit string over the leaves of an individualisation/refinement
search tree. Colour refinement and the choice of target cell are both
label invariant, so the set of leaves (and hence its minimum) depends only
on the isomorphism class. Twin vertices inside a target cell produce
identical subtrees and are explored once.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .config import GUARDS
from .graphs import Graph, SizeGuardError, bits, disjoint_union, is_tree, components


def _refine(nbrs: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    n_classes = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(colors))]
        uniq = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [uniq[s] for s in sig]
        if len(uniq) == n_classes:
            return new
        colors, n_classes = new, len(uniq)


def _individualize(colors: list[int], v: int) -> list[int]:
    sig = [(c, x != v) for x, c in enumerate(colors)]
    uniq = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [uniq[s] for s in sig]


def _key(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    k = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            k = (k << 1) | (ai >> order[j] & 1)
    return k


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(key, order)``: ``order[i]`` is the vertex placed at canonical position ``i``."""
    n = g.n
    adj = g.adj
    nbrs = [bits(a) for a in adj]
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(nbrs, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            k = _key(adj, order)
            if best[0] is None or k < best[0]:
                best[0], best[1] = k, order
            return
        reps: list[int] = []
        for v in target:
            if not any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
                reps.append(v)
        for v in reps:
            search(_individualize(colors, v))

    search([0] * n)
    if best[0] is None:
        return 0, []
    return best[0], best[1]


def canonical_key(g: Graph) -> str:
    """Isomorphism-invariant text encoding ``"n:hexbits"``."""
    k, _ = canonical_labeling(g)
    return f"{g.n}:{k:x}"


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def brute_force_key(g: Graph) -> int:
    """Minimum adjacency bit string over every vertex permutation (n! work)."""
    adj = g.adj
    return min(_key(adj, p) for p in itertools.permutations(range(g.n)))


def decode_key(key: str) -> Graph:
    """Inverse of :func:`canonical_key` up to isomorphism (returns the canonical graph)."""
    n_s, _, hx = key.partition(":")
    n = int(n_s)
    k = int(hx, 16) if hx else 0
    total = n * (n - 1) // 2
    edges = []
    pos = total - 1
    for i in range(n):
        for j in range(i + 1, n):
            if k >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return Graph.from_edges(n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_labeling(g)[0] == canonical_labeling(h)[0]


# ---------------------------------------------------------------- trees

def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    import heapq
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for v in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    u, w = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def enumerate_trees(n: int, dedup: bool = True, limit: int | None = None) -> Iterator[Graph]:
    """Labelled trees on ``n`` vertices via Pruefer codes, or one per isomorphism class.

    The deduplicated stream grows every class on ``n - 1`` vertices by one
    leaf in all possible places and keeps the first graph per canonical key,
    which avoids walking all ``n^(n-2)`` labelled trees.
    """
    lim = GUARDS.tree_n if limit is None else limit
    if not 1 <= n <= lim:
        raise SizeGuardError("tree_n", lim, n)
    if dedup:
        yield from tree_classes(n)
        return
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


@lru_cache(maxsize=None)
def tree_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    found: dict[int, Graph] = {}
    for t in tree_classes(n - 1):
        for v in range(n - 1):
            g = Graph(n, t.edges | {(v, n - 1)})
            k, _ = canonical_labeling(g)
            if k not in found:
                found[k] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


@lru_cache(maxsize=None)
def forest_classes(n: int) -> tuple[Graph, ...]:
    """All forests on ``n`` vertices up to isomorphism (multisets of tree classes)."""
    out = []

    def rec(remaining: int, max_part: int, min_idx: int, parts: list[Graph]) -> None:
        if remaining == 0:
            out.append(disjoint_union(*parts))
            return
        for size in range(min(remaining, max_part), 0, -1):
            trees = tree_classes(size)
            start = min_idx if size == max_part else 0
            for i in range(start, len(trees)):
                rec(remaining - size, size, i, parts + [trees[i]])

    rec(n, n, 0, [])
    return tuple(canonical_graph(g) for g in out)


@lru_cache(maxsize=None)
def unicyclic_classes(n: int) -> tuple[Graph, ...]:
    """Connected graphs with exactly one cycle: every tree class plus one extra edge, deduplicated."""
    if n < 3:
        return ()
    found: dict[int, Graph] = {}
    for t in tree_classes(n):
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in t.edges:
                    continue
                g = Graph(n, t.edges | {(u, v)})
                k, _ = canonical_labeling(g)
                if k not in found:
                    found[k] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


# ---------------------------------------------------------------- all graphs

def enumerate_graphs(n: int, connected_only: bool = False, dedup: bool = True,
                     limit: int | None = None) -> Iterator[Graph]:
    lim = GUARDS.graph_n if limit is None else limit
    if not 1 <= n <= lim:
        raise SizeGuardError("graph_n", lim, n)
    if dedup:
        for g in graph_classes(n):
            if not connected_only or len(components(g)) == 1:
                yield g
        return
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(pairs[i] for i in bits(mask)))
        if not connected_only or len(components(g)) == 1:
            yield g


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class, built by adding a
    vertex with every possible neighbourhood to each class on ``n - 1`` vertices."""
    if n == 1:
        return (Graph(1),)
    found: dict[int, Graph] = {}
    for h in graph_classes(n - 1):
        for nb in range(1 << (n - 1)):
            g = Graph(n, h.edges | {(u, n - 1) for u in bits(nb)})
            k, _ = canonical_labeling(g)
            if k not in found:
                found[k] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


def chordal_classes(n: int) -> list[Graph]:
    from .graphs import is_chordal
    return [g for g in graph_classes(n) if is_chordal(g)]


__all__ = [
    "canonical_labeling", "canonical_key", "canonical_graph", "brute_force_key", "decode_key",
    "is_isomorphic", "prufer_decode", "enumerate_trees", "tree_classes", "forest_classes",
    "unicyclic_classes", "enumerate_graphs", "graph_classes", "chordal_classes", "is_tree",
]
