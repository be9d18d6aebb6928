"""Squarefree monomials and monomial ideals.

A squarefree monomial is stored as the bitmask of its support, so
divisibility is ``a & ~b == 0``, lcm is ``a | b`` and gcd is ``a & b``.
An ideal keeps its minimal generators sorted by support; two ideals are
equal exactly when these tuples (and the ambient variable count) agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, bits, mask_of


class DomainError(ValueError):
    """An operation would leave the squarefree world or hit a degenerate ideal."""


@dataclass(frozen=True)
class Monomial:
    n_vars: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n_vars:
            raise DomainError(f"support {bits(self.mask)} outside 0..{self.n_vars - 1}")

    @classmethod
    def from_indices(cls, n_vars: int, indices: Iterable[int]) -> "Monomial":
        return cls(n_vars, mask_of(indices))

    @classmethod
    def from_exponents(cls, exps: Sequence[int]) -> "Monomial":
        if any(e not in (0, 1) for e in exps):
            raise DomainError(f"exponent vector {list(exps)} is not squarefree")
        return cls(len(exps), mask_of(i for i, e in enumerate(exps) if e))

    @property
    def support(self) -> list[int]:
        return bits(self.mask)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def divides(self, other: "Monomial") -> bool:
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        return monomial_str(self.mask)


def _m(x) -> int:
    return x.mask if isinstance(x, Monomial) else int(x)


def monomial_str(mask: int, labels: Sequence[str] | None = None) -> str:
    if mask == 0:
        return "1"
    return "*".join(labels[i] if labels else f"x{i + 1}" for i in bits(mask))


def _support_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def minimal_masks(gens: Iterable[int]) -> tuple[int, ...]:
    """Divisibility-minimal elements of a set of supports, canonically sorted."""
    uniq = sorted(set(gens), key=lambda m: (m.bit_count(), m))
    keep: list[int] = []
    for g in uniq:
        if not any(k & ~g == 0 for k in keep):
            keep.append(g)
    return tuple(sorted(keep, key=_support_key))


@dataclass(frozen=True)
class MonomialIdeal:
    n_vars: int
    gens: tuple = ()

    def __post_init__(self):
        for g in self.gens:
            if g < 0 or g >> self.n_vars:
                raise DomainError(f"generator {bits(g)} outside 0..{self.n_vars - 1}")

    @classmethod
    def of(cls, n_vars: int, gens: Iterable) -> "MonomialIdeal":
        """Build from masks, Monomials or index collections; minimalizes."""
        masks = []
        for g in gens:
            if isinstance(g, (int, Monomial)):
                masks.append(_m(g))
            else:
                masks.append(mask_of(g))
        return cls(n_vars, minimal_masks(masks))

    @classmethod
    def zero(cls, n_vars: int) -> "MonomialIdeal":
        return cls(n_vars, ())

    @classmethod
    def unit(cls, n_vars: int) -> "MonomialIdeal":
        return cls(n_vars, (0,))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (0,)

    @property
    def support(self) -> int:
        s = 0
        for g in self.gens:
            s |= g
        return s

    def generator_sets(self) -> list[list[int]]:
        return [bits(g) for g in self.gens]

    def contains(self, mon) -> bool:
        m = _m(mon)
        return any(g & ~m == 0 for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def embed(self, positions: Sequence[int], n_vars: int) -> "MonomialIdeal":
        """Rename variable ``i`` to ``positions[i]`` inside a ring with ``n_vars`` variables."""
        return MonomialIdeal.of(n_vars, (mask_of(positions[i] for i in bits(g)) for g in self.gens))

    def permute(self, perm: Sequence[int]) -> "MonomialIdeal":
        return self.embed(perm, self.n_vars)

    def with_variables(self, n_vars: int) -> "MonomialIdeal":
        if n_vars < self.n_vars and self.support >> n_vars:
            raise DomainError("cannot drop variables that occur in generators")
        return MonomialIdeal(n_vars, self.gens)

    def __str__(self) -> str:
        return self.format()

    def format(self, labels: Sequence[str] | None = None) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(monomial_str(g, labels) for g in self.gens) + ">"


def minimalize(n_vars: int, gens: Iterable) -> MonomialIdeal:
    return MonomialIdeal.of(n_vars, gens)


def _same_ring(i: MonomialIdeal, j: MonomialIdeal) -> int:
    if i.n_vars != j.n_vars:
        raise DomainError(f"ideals live in different rings ({i.n_vars} vs {j.n_vars} variables)")
    return i.n_vars


# ---------------------------------------------------------------- graph ideals

def closed_neighborhood_ideal(g: Graph) -> MonomialIdeal:
    """NI(G): generated by the product of the closed neighbourhood of each vertex."""
    return MonomialIdeal.of(g.n, g.closed)


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal.of(g.n, ((1 << u) | (1 << v) for u, v in g.edges))


def path_ideal(g: Graph, t: int) -> MonomialIdeal:
    """J_t(G): products over all paths with ``t`` distinct vertices."""
    if t < 1:
        raise ValueError(f"path length t must be >= 1, got {t}")
    if t > g.n:
        return MonomialIdeal.zero(g.n)
    found: set[int] = set()
    adj = g.adj

    def walk(v: int, used: int, left: int) -> None:
        if left == 0:
            found.add(used)
            return
        nb = adj[v] & ~used
        while nb:
            low = nb & -nb
            walk(low.bit_length() - 1, used | low, left - 1)
            nb ^= low

    for v in range(g.n):
        walk(v, 1 << v, t - 1)
    return MonomialIdeal.of(g.n, found)


# ---------------------------------------------------------------- ideal algebra

def colon_by_monomial(ideal: MonomialIdeal, mon) -> MonomialIdeal:
    """(I : m) = < g / gcd(g, m) >."""
    m = _m(mon)
    return MonomialIdeal.of(ideal.n_vars, (g & ~m for g in ideal.gens))


def add_ideals(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(i, j)
    return MonomialIdeal.of(n, i.gens + j.gens)


def intersect_ideals(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(i, j)
    return MonomialIdeal.of(n, (a | b for a in i.gens for b in j.gens))


def scale_by_monomial(ideal: MonomialIdeal, mon) -> MonomialIdeal:
    m = _m(mon)
    for g in ideal.gens:
        if g & m:
            raise DomainError(f"{monomial_str(m)} * {monomial_str(g)} is not squarefree")
    return MonomialIdeal.of(ideal.n_vars, (g | m for g in ideal.gens))


def add_variable(ideal: MonomialIdeal, v: int) -> MonomialIdeal:
    """<I, x_v>."""
    return MonomialIdeal.of(ideal.n_vars, ideal.gens + (1 << v,))


def extend_ring(ideal: MonomialIdeal, extra: int = 1) -> MonomialIdeal:
    return MonomialIdeal(ideal.n_vars + extra, ideal.gens)


def split_at_variable(ideal: MonomialIdeal, v: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Partition G(I) into generators divisible by x_v (J) and the rest (K)."""
    bit = 1 << v
    if not ideal.support & bit:
        raise ValueError(f"variable x{v + 1} does not occur in any generator")
    j = MonomialIdeal(ideal.n_vars, tuple(g for g in ideal.gens if g & bit))
    k = MonomialIdeal(ideal.n_vars, tuple(g for g in ideal.gens if not g & bit))
    return j, k
