"""Finite simple graphs and the invariants used throughout the package.

Vertices are the integers ``0..n-1``; adjacency is kept as one bitmask per
vertex so most set operations reduce to integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .config import GUARDS


class GraphError(ValueError):
    """Invalid graph data or a structural precondition that does not hold."""


class SizeGuardError(ValueError):
    """An exhaustive search was asked to run past its configured size limit."""

    def __init__(self, guard: str, limit: int, value: int):
        self.guard, self.limit, self.value = guard, limit, value
        super().__init__(f"{guard} guard exceeded: {value} > {limit}")


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        clean = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u + 1}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u + 1},{v + 1}) has an endpoint outside 1..{self.n}")
            clean.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(clean))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must name every vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges), tuple(labels) if labels else None)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else f"x{v + 1}"

    def vertex_labels(self) -> list[str]:
        return [self.label(v) for v in range(self.n)]

    @cached_property
    def adj(self) -> tuple[int, ...]:
        a = [0] * self.n
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @cached_property
    def closed(self) -> tuple[int, ...]:
        return tuple(a | (1 << v) for v, a in enumerate(self.adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def complement(self) -> "Graph":
        n = self.n
        return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                                  if (u, v) not in self.edges), self.labels)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep`` (relabelled 0..k-1) and the old index of each new vertex."""
        old = sorted(set(keep))
        pos = {v: i for i, v in enumerate(old)}
        sub = Graph(len(old), frozenset((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
                    tuple(self.label(v) for v in old))
        return sub, old

    def delete(self, remove: Iterable[int]) -> tuple["Graph", list[int]]:
        rem = set(remove)
        return self.induced(v for v in range(self.n) if v not in rem)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, frozenset(_norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def adjacency_key(self) -> str:
        """Labelled encoding: upper-triangle adjacency bits, row major."""
        a = self.adj
        return "".join("1" if a[u] >> v & 1 else "0" for u in range(self.n) for v in range(u + 1, self.n))

    def __repr__(self) -> str:
        es = ",".join(f"{u + 1}-{v + 1}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}, edges=[{es}])"


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# ---------------------------------------------------------------- families

FAMILY_ARITY = {
    "path": 1, "cycle": 1, "star": 1, "complete": 1, "complete_bipartite": 2,
    "wheel": 1, "empty": 1, "whiskered": 0, "edge_list": 0, "disjoint_union": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()
    bases: tuple = ()
    source: str | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_ARITY:
            raise GraphError(f"unknown family {self.kind!r}; known: {', '.join(sorted(FAMILY_ARITY))}")
        if len(self.params) != FAMILY_ARITY[self.kind]:
            raise GraphError(f"{self.kind} takes {FAMILY_ARITY[self.kind]} parameter(s), got {len(self.params)}")
        if any((not isinstance(p, int)) or p < 1 for p in self.params):
            raise GraphError(f"{self.kind} parameters must be integers >= 1, got {self.params}")
        if self.kind == "whiskered" and len(self.bases) != 1:
            raise GraphError("whiskered takes exactly one base family")
        if self.kind == "disjoint_union" and not self.bases:
            raise GraphError("disjoint_union needs at least one base family")
        if self.kind == "edge_list" and not self.source:
            raise GraphError("edge_list needs a file path")

    def __str__(self) -> str:
        if self.kind in ("whiskered", "disjoint_union"):
            return f"{self.kind}({','.join(str(b) for b in self.bases)})"
        if self.kind == "edge_list":
            return f"edge_list:{self.source}"
        return f"{self.kind}:{','.join(map(str, self.params))}"


def parse_family(text: str) -> FamilySpec:
    """Parse ``"path:5"``, ``"complete_bipartite:3,2"``, ``"whiskered(cycle:4)"``,
    ``"disjoint_union(path:3,cycle:3)"`` or ``"edge_list:FILE"``."""
    s = text.strip()
    m = re.fullmatch(r"(\w+)\((.*)\)", s)
    if m:
        kind, inner = m.group(1), m.group(2)
        return FamilySpec(kind, (), tuple(parse_family(p) for p in _split_top(inner)))
    kind, _, rest = s.partition(":")
    if kind == "edge_list":
        return FamilySpec(kind, source=rest)
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest else ()
    except ValueError:
        raise GraphError(f"bad family parameters in {text!r}") from None
    return FamilySpec(kind, params)


def _split_top(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += (ch == "(") - (ch == ")")
        cur.append(ch)
    parts.append("".join(cur))
    # a bare integer after a comma belongs to the previous family ("complete_bipartite:3,2")
    merged: list[str] = []
    for p in parts:
        if merged and p.strip().isdigit():
            merged[-1] += "," + p
        else:
            merged.append(p)
    return [p.strip() for p in merged if p.strip()]


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """S_n: vertex 0 is the centre, 1..n-1 are leaves."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: side A is 0..m-1 (x1..xm), side B is m..m+n-1 (y1..yn)."""
    labels = [f"x{i + 1}" for i in range(m)] + [f"y{j + 1}" for j in range(n)]
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)], labels)


def wheel_graph(total: int) -> Graph:
    """W_total: the rim is the cycle on 0..total-2 (y1..), the hub is the last vertex (x)."""
    k = total - 1
    if k < 3:
        raise GraphError("a wheel needs at least 4 vertices")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return Graph.from_edges(total, edges, [f"y{i + 1}" for i in range(k)] + ["x"])


def whisker_all(g: Graph) -> Graph:
    """Attach a pendant vertex y_i to every vertex x_i; y_i gets index n + i."""
    n = g.n
    labels = [g.label(v) for v in range(n)] + [f"y{i + 1}" for i in range(n)]
    return Graph.from_edges(2 * n, list(g.edges) + [(i, n + i) for i in range(n)], labels)


def disjoint_union(*gs: Graph) -> Graph:
    edges, off = [], 0
    for g in gs:
        edges += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return Graph.from_edges(off, edges)


def build_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    k, p = spec.kind, spec.params
    if k == "path":
        return path_graph(p[0])
    if k == "cycle":
        return cycle_graph(p[0])
    if k == "star":
        return star_graph(p[0])
    if k == "complete":
        return complete_graph(p[0])
    if k == "empty":
        return empty_graph(p[0])
    if k == "complete_bipartite":
        return complete_bipartite(*p)
    if k == "wheel":
        return wheel_graph(p[0])
    if k == "whiskered":
        return whisker_all(build_family(spec.bases[0]))
    if k == "disjoint_union":
        return disjoint_union(*(build_family(b) for b in spec.bases))
    if k == "edge_list":
        from .formats import read_edge_list
        return read_edge_list(spec.source)
    raise GraphError(k)  # unreachable, FamilySpec validates kind


# ---------------------------------------------------------------- invariants

def closed_neighborhood(g: Graph, v: int) -> set[int]:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v + 1} out of range 1..{g.n}")
    return set(bits(g.closed[v]))


def matching_number(g: Graph) -> int:
    """Exact maximum matching size by branch and bound.

    Branches on the lowest unresolved vertex: either it stays unmatched or it
    is matched to one of its unresolved neighbours. A greedy matching gives
    the initial bound; a branch is cut once even a perfect matching of the
    remaining vertices with edges cannot beat the best found so far.
    """
    adj = g.adj
    best = _greedy_matching(g)

    def solve(alive: int, size: int) -> None:
        nonlocal best
        # drop vertices with no live neighbours, they can never be matched
        while True:
            dead = 0
            rest = alive
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                if not adj[v] & alive:
                    dead |= low
                rest ^= low
            if not dead:
                break
            alive &= ~dead
        if size + alive.bit_count() // 2 <= best:
            return
        if not alive:
            best = size
            return
        low = alive & -alive
        v = low.bit_length() - 1
        nbrs = adj[v] & alive
        while nbrs:
            lw = nbrs & -nbrs
            solve(alive & ~low & ~lw, size + 1)
            nbrs ^= lw
        solve(alive & ~low, size)

    solve((1 << g.n) - 1, 0)
    return best


def _greedy_matching(g: Graph) -> int:
    used = 0
    size = 0
    for u, v in sorted(g.edges, key=lambda e: g.degree(e[0]) + g.degree(e[1])):
        if not (used >> u & 1 or used >> v & 1):
            used |= (1 << u) | (1 << v)
            size += 1
    return size


def is_clique(g: Graph, mask: int) -> bool:
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if (mask & ~low) & ~g.adj[v]:
            return False
        rest ^= low
    return True


def simplicial_vertices(g: Graph) -> set[int]:
    return {v for v in range(g.n) if is_clique(g, g.closed[v])}


def _check_guard(name: str, value: int, limit: int | None = None) -> None:
    lim = GUARDS.get(name) if limit is None else limit
    if value > lim:
        raise SizeGuardError(name, lim, value)


def dominating_masks(g: Graph) -> Iterator[int]:
    full = (1 << g.n) - 1
    closed = g.closed
    for w in range(1 << g.n):
        cover = 0
        rest = w
        while rest:
            low = rest & -rest
            cover |= closed[low.bit_length() - 1]
            rest ^= low
        if cover == full:
            yield w


def is_dominating(g: Graph, mask: int) -> bool:
    cover = 0
    for v in bits(mask):
        cover |= g.closed[v]
    return cover == (1 << g.n) - 1


def minimal_dominating_masks(g: Graph, limit: int | None = None) -> list[int]:
    """All inclusion-minimal dominating sets as bitmasks, sorted by (size, mask)."""
    _check_guard("subset_n", g.n, limit)
    out = []
    for w in dominating_masks(g):
        if all(not is_dominating(g, w & ~(1 << v)) for v in bits(w)):
            out.append(w)
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def minimal_dominating_sets(g: Graph, limit: int | None = None) -> set[frozenset]:
    return {frozenset(bits(m)) for m in minimal_dominating_masks(g, limit)}


def chromatic_number(g: Graph, limit: int | None = None) -> int:
    """Exact chromatic number by backtracking over colour counts."""
    _check_guard("coloring_n", g.n, limit)
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    adj = g.adj

    def colorable(k: int) -> bool:
        colors = [-1] * g.n

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            banned = {colors[u] for u in bits(adj[v]) if colors[u] >= 0}
            # a fresh colour is only tried once (colour symmetry)
            for c in range(min(k, used + 1)):
                if c not in banned:
                    colors[v] = c
                    if place(i + 1, max(used, c + 1)):
                        return True
            colors[v] = -1
            return False

        return place(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def clique_cover_number(g: Graph, limit: int | None = None) -> int:
    return chromatic_number(g.complement(), limit)


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(bits(comp))
    return comps


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """Repeatedly remove the lowest-index simplicial vertex; None if the graph is not chordal."""
    alive = (1 << g.n) - 1
    order = []
    while alive:
        for v in bits(alive):
            if is_clique(g, g.closed[v] & alive):
                order.append(v)
                alive &= ~(1 << v)
                break
        else:
            return None
    return order


@dataclass
class Structure:
    is_forest: bool
    is_tree: bool
    is_unicyclic: bool
    is_chordal: bool
    components: list[Graph]
    component_vertices: list[list[int]]


def structure_predicates(g: Graph) -> Structure:
    comps = components(g)
    c = len(comps)
    forest = g.m == g.n - c
    connected = c == 1
    return Structure(
        is_forest=forest,
        is_tree=forest and connected,
        is_unicyclic=connected and g.m == g.n,
        is_chordal=perfect_elimination_order(g) is not None,
        components=[g.induced(cv)[0] for cv in comps],
        component_vertices=comps,
    )


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(components(g)) == 1


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def rooted_levels(g: Graph, root: int) -> tuple[list[int], int]:
    """Distance from ``root`` for every vertex of a tree, and the height."""
    if not is_tree(g):
        raise GraphError("rooted_levels needs a tree")
    if not 0 <= root < g.n:
        raise GraphError(f"root {root + 1} out of range")
    level = [-1] * g.n
    level[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if level[w] < 0:
                    level[w] = level[u] + 1
                    nxt.append(w)
        frontier = nxt
    return level, max(level)


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def is_star(g: Graph) -> bool:
    """Connected graph with a vertex adjacent to all others and no other edges."""
    if not is_tree(g):
        return False
    return g.n <= 2 or any(g.degree(v) == g.n - 1 for v in range(g.n))
