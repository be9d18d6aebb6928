"""Simplicial complexes, the Stanley-Reisner correspondence and reduced homology.

Faces are bitmasks over the vertex universe. The *void* complex has no
faces at all; the *empty* complex is ``{∅}`` and has one reduced homology
class in dimension -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import GUARDS
from .graphs import Graph, SizeGuardError, bits, mask_of, minimal_dominating_masks
from .linalg import check_prime, rank_gf2, sparse_rank
from .monomials import DomainError, MonomialIdeal


def _maximal(sets: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(sets), key=lambda m: -m.bit_count())
    keep: list[int] = []
    for s in uniq:
        if not any(s & ~k == 0 for k in keep):
            keep.append(s)
    return tuple(sorted(keep, key=lambda m: tuple(bits(m))))


def minimal_transversals(edges: Iterable[int], n: int) -> list[int]:
    """Inclusion-minimal sets meeting every set in ``edges`` (Berge's incremental method).

    An empty edge admits no transversal; an empty family has the single
    transversal ∅.
    """
    trans = [0]
    for e in sorted(set(edges), key=lambda m: m.bit_count()):
        if e == 0:
            return []
        nxt = set()
        for t in trans:
            if t & e:
                nxt.add(t)
            else:
                for v in bits(e):
                    nxt.add(t | (1 << v))
        ordered = sorted(nxt, key=lambda m: (m.bit_count(), m))
        keep: list[int] = []
        for t in ordered:
            if not any(k & ~t == 0 for k in keep):
                keep.append(t)
        trans = keep
    return trans


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "facets", _maximal(self.facets))
        for f in self.facets:
            if f >> self.n_vertices:
                raise ValueError(f"facet {bits(f)} outside 0..{self.n_vertices - 1}")

    @classmethod
    def from_faces(cls, n: int, faces: Iterable) -> "SimplicialComplex":
        return cls(n, tuple(f if isinstance(f, int) else mask_of(f) for f in faces))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, (0,))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, ((1 << n) - 1,))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def contains(self, face) -> bool:
        f = face if isinstance(face, int) else mask_of(face)
        return any(f & ~F == 0 for F in self.facets)

    def facet_sets(self) -> list[list[int]]:
        return [bits(f) for f in self.facets]

    def faces(self, budget: int | None = None) -> list[int]:
        """Every face, sorted by (size, mask)."""
        lim = GUARDS.face_budget if budget is None else budget
        est = sum(1 << f.bit_count() for f in self.facets)
        if est > lim:
            raise SizeGuardError("face_budget", lim, est)
        out: set[int] = set()
        for F in self.facets:
            sub = F
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & F
        return sorted(out, key=lambda m: (m.bit_count(), m))

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension, starting at -1."""
        fv: dict[int, int] = {}
        for f in self.faces():
            d = f.bit_count() - 1
            fv[d] = fv.get(d, 0) + 1
        return fv

    def induced(self, w: int) -> "SimplicialComplex":
        if self.is_void:
            return self
        return SimplicialComplex(self.n_vertices, tuple(F & w for F in self.facets))

    def permute(self, perm: Sequence[int]) -> "SimplicialComplex":
        return SimplicialComplex(self.n_vertices, tuple(mask_of(perm[v] for v in bits(F)) for F in self.facets))


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Δ(I): facets are complements of the minimal transversals of G(I)."""
    if ideal.is_unit:
        raise DomainError("the unit ideal has no Stanley-Reisner complex")
    full = (1 << ideal.n_vars) - 1
    return SimplicialComplex(ideal.n_vars, tuple(full & ~t for t in minimal_transversals(ideal.gens, ideal.n_vars)))


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """I_Δ: minimal non-faces, i.e. minimal transversals of the facet complements."""
    full = (1 << cx.n_vertices) - 1
    return MonomialIdeal.of(cx.n_vertices, minimal_transversals((full & ~F for F in cx.facets), cx.n_vertices))


def dominance_complex(g: Graph, limit: int | None = None) -> SimplicialComplex:
    full = (1 << g.n) - 1
    return SimplicialComplex(g.n, tuple(full & ~d for d in minimal_dominating_masks(g, limit)))


# ---------------------------------------------------------------- homology

@dataclass
class HomologyProfile:
    field_char: int
    ranks: dict = field(default_factory=dict)

    def rank(self, d: int) -> int:
        return self.ranks.get(d, 0)

    @property
    def homological_dimension(self) -> int | None:
        nz = [d for d, r in self.ranks.items() if r]
        return max(nz) if nz else None

    def to_json(self) -> dict:
        return {"p": self.field_char, "ranks": {str(d): r for d, r in sorted(self.ranks.items())}}


def homology_from_faces(by_size: Sequence[Sequence[int]], p: int) -> dict[int, int]:
    """Reduced homology ranks of the complex whose faces of size ``k`` are ``by_size[k]``.

    ``by_size[0]`` is ``[0]`` for a non-void complex, ``[]`` for the void one.
    The boundary of a face drops one vertex at a time with sign ``(-1)^position``.
    """
    top = len(by_size) - 1
    while top >= 0 and not by_size[top]:
        top -= 1
    if top < 0:
        return {}
    # rank of ∂ : C_{k-1} -> C_{k-2}, indexed by face size k
    rk = [0] * (top + 2)
    index_prev = {f: i for i, f in enumerate(by_size[0])}
    for k in range(1, top + 1):
        faces = by_size[k]
        if p == 2:
            rows = []
            for f in faces:
                r = 0
                rest = f
                while rest:
                    low = rest & -rest
                    r |= 1 << index_prev[f ^ low]
                    rest ^= low
                rows.append(r)
            rk[k] = rank_gf2(rows)
        else:
            rows = []
            for f in faces:
                row = []
                sign = 1
                rest = f
                while rest:
                    low = rest & -rest
                    row.append((index_prev[f ^ low], sign))
                    sign = -sign
                    rest ^= low
                rows.append(row)
            rk[k] = sparse_rank(rows, len(index_prev), p)
        index_prev = {f: i for i, f in enumerate(faces)}
    ranks = {}
    for k in range(0, top + 1):
        h = len(by_size[k]) - rk[k] - rk[k + 1]
        if h:
            ranks[k - 1] = h
    return ranks


def group_by_size(faces: Iterable[int], n: int) -> list[list[int]]:
    by: list[list[int]] = [[] for _ in range(n + 1)]
    for f in faces:
        by[f.bit_count()].append(f)
    return by


def reduced_homology_ranks(cx: SimplicialComplex, p: int = 2, budget: int | None = None) -> HomologyProfile:
    check_prime(p)
    if cx.is_void:
        return HomologyProfile(p, {})
    faces = cx.faces(budget)
    return HomologyProfile(p, homology_from_faces(group_by_size(faces, cx.n_vertices), p))


def homological_dimension(cx: SimplicialComplex, p: int = 2) -> int | None:
    return reduced_homology_ranks(cx, p).homological_dimension


def euler_characteristic_faces(cx: SimplicialComplex) -> int:
    """Reduced Euler characteristic from face counts (the empty face counts in dimension -1)."""
    return sum((-1) ** d * c for d, c in cx.f_vector().items())


def euler_characteristic_homology(h: HomologyProfile) -> int:
    return sum((-1) ** d * r for d, r in h.ranks.items())
