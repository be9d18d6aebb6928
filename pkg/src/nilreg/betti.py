"""Graded Betti numbers of R/I for squarefree monomial ideals I.

Two independent routes are provided:

* :func:`betti_table_hochster` sums reduced homology of induced
  subcomplexes of the Stanley-Reisner complex,
  ``beta_{i,j}(R/I) = sum_{|W|=j} dim H~_{j-i-1}(Δ(I)|_W)``.
* :func:`betti_table_taylor_oracle` takes the homology of the Taylor
  complex tensored with the residue field. After tensoring, the only
  surviving differential entries are between subsets of generators with
  equal lcm, so the complex splits by lcm and each piece is small.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .config import GUARDS
from .graphs import SizeGuardError, bits
from .linalg import check_prime, rank_gf2, sparse_rank
from .monomials import DomainError, MonomialIdeal, extend_ring, intersect_ideals, scale_by_monomial, split_at_variable
from .simplicial import homology_from_faces


@dataclass
class BettiTable:
    """Sparse graded Betti numbers of R/I (the quotient, not the ideal)."""

    n_vars: int
    field_char: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.field_char == other.field_char and self.entries == other.entries

    @property
    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), c in self.entries.items():
            out[i] = out.get(i, 0) + c
        return out

    def ideal_betti(self) -> dict[tuple[int, int], int]:
        """beta_{i,j}(I) = beta_{i+1,j}(R/I)."""
        return {(i - 1, j): c for (i, j), c in self.entries.items() if i >= 1}

    def sorted_entries(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in sorted(self.entries.items())]

    def to_json(self) -> dict:
        return {"p": self.field_char, "n_vars": self.n_vars, "entries": self.sorted_entries(),
                "reg": self.regularity, "pd": self.projective_dimension}

    @classmethod
    def from_json(cls, d: dict) -> "BettiTable":
        return cls(d.get("n_vars", 0), d["p"], {(i, j): c for i, j, c in d["entries"]})

    def format(self) -> str:
        """Macaulay2-style layout: rows are j - i, columns are i."""
        if not self.entries:
            return "(empty)"
        pd, reg = self.projective_dimension, self.regularity
        cols = list(range(pd + 1))
        tot = self.totals()
        cells = [[str(tot.get(i, 0)) for i in cols]]
        labels = ["total:"]
        for r in range(reg + 1):
            cells.append([str(self[i, i + r]) if self[i, i + r] else "." for i in cols])
            labels.append(f"{r}:")
        width = max(len(c) for row in cells for c in row + [str(pd)])
        lw = max(len(x) for x in labels)
        lines = [" " * (lw + 1) + " ".join(str(i).rjust(width) for i in cols)]
        for lab, row in zip(labels, cells):
            lines.append(lab.rjust(lw) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def regularity(t: BettiTable) -> int:
    return t.regularity


def projective_dimension(t: BettiTable) -> int:
    return t.projective_dimension


def _check_ideal(ideal: MonomialIdeal) -> None:
    if ideal.is_unit:
        raise DomainError("Betti numbers of R/<1> are not defined here (the module is zero)")


# ---------------------------------------------------------------- Hochster

def _sr_faces(ideal: MonomialIdeal) -> set[int]:
    """All faces of Δ(I), generated upward in increasing vertex order."""
    n = ideal.n_vars
    by_var = [[g for g in ideal.gens if g >> v & 1] for v in range(n)]
    faces = {0}
    budget = GUARDS.face_budget
    stack = [(0, 0)]
    while stack:
        f, start = stack.pop()
        for v in range(start, n):
            g = f | (1 << v)
            if any(h & ~g == 0 for h in by_var[v]):
                continue
            faces.add(g)
            if len(faces) > budget:
                raise SizeGuardError("face_budget", budget, len(faces))
            stack.append((g, v + 1))
    return faces


def lcm_lattice(ideal: MonomialIdeal) -> list[int]:
    """Every lcm of a subset of G(I) (including the empty lcm 1)."""
    lat = {0}
    for g in ideal.gens:
        lat |= {x | g for x in lat}
    return sorted(lat)


def _induced_faces(faces: set[int], w: int, n: int) -> list[list[int]]:
    verts = bits(w)
    by: list[list[int]] = [[] for _ in range(len(verts) + 1)]
    by[0].append(0)
    stack = [(0, 0)]
    while stack:
        f, start = stack.pop()
        for idx in range(start, len(verts)):
            g = f | (1 << verts[idx])
            if g in faces:
                by[g.bit_count()].append(g)
                stack.append((g, idx + 1))
    return by


def _hochster_chunk(args) -> dict:
    faces, ws, n, p = args
    acc: dict[tuple[int, int], int] = {}
    for w in ws:
        j = w.bit_count()
        for d, r in homology_from_faces(_induced_faces(faces, w, n), p).items():
            i = j - d - 1
            if i >= 1:
                acc[(i, j)] = acc.get((i, j), 0) + r
    return acc


def betti_table_hochster(ideal: MonomialIdeal, p: int = 2, jobs: int = 1, prune: bool = True) -> BettiTable:
    """Graded Betti table of R/I via Hochster's formula.

    With ``prune`` only subsets W that are unions of generator supports are
    visited; any other W has a vertex lying in no minimal non-face of
    Δ|_W, so Δ|_W is a cone and contributes nothing.
    """
    check_prime(p)
    _check_ideal(ideal)
    n = ideal.n_vars
    if n > GUARDS.hochster_vars:
        raise SizeGuardError("hochster_vars", GUARDS.hochster_vars, n)
    faces = _sr_faces(ideal)
    ws = [w for w in (lcm_lattice(ideal) if prune else range(1 << n)) if w]
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    if jobs > 1 and len(ws) > 64:
        chunks = [ws[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_hochster_chunk, [(faces, c, n, p) for c in chunks]))
    else:
        parts = [_hochster_chunk((faces, ws, n, p))]
    for part in parts:
        for k, v in part.items():
            entries[k] = entries.get(k, 0) + v
    return BettiTable(n, p, entries)


# ---------------------------------------------------------------- Taylor oracle

def betti_table_taylor_oracle(ideal: MonomialIdeal, p: int = 2) -> BettiTable:
    """Graded Tor of R/I computed from the Taylor complex tensored with the residue field."""
    check_prime(p)
    _check_ideal(ideal)
    gens = ideal.gens
    g = len(gens)
    if g > GUARDS.taylor_gens:
        raise SizeGuardError("taylor_gens", GUARDS.taylor_gens, g)
    lcm = [0] * (1 << g)
    for s in range(1, 1 << g):
        low = s & -s
        lcm[s] = lcm[s ^ low] | gens[low.bit_length() - 1]
    groups: dict[int, list[list[int]]] = {}
    for s in range(1 << g):
        by = groups.setdefault(lcm[s], [[] for _ in range(g + 1)])
        by[s.bit_count()].append(s)
    entries: dict[tuple[int, int], int] = {}
    for m, by in groups.items():
        deg = m.bit_count()
        rk = [0] * (g + 2)
        for k in range(1, g + 1):
            if not by[k] or not by[k - 1]:
                continue
            index = {s: i for i, s in enumerate(by[k - 1])}
            if p == 2:
                rows = []
                for s in by[k]:
                    r = 0
                    rest = s
                    while rest:
                        low = rest & -rest
                        t = s ^ low
                        if lcm[t] == m:
                            r |= 1 << index[t]
                        rest ^= low
                    rows.append(r)
                rk[k] = rank_gf2(rows)
            else:
                rows = []
                for s in by[k]:
                    row = []
                    sign = 1
                    rest = s
                    while rest:
                        low = rest & -rest
                        t = s ^ low
                        if lcm[t] == m:
                            row.append((index[t], sign))
                        sign = -sign
                        rest ^= low
                    rows.append(row)
                rk[k] = sparse_rank(rows, len(by[k - 1]), p)
        for k in range(g + 1):
            h = len(by[k]) - rk[k] - rk[k + 1]
            if h:
                entries[(k, deg)] = entries.get((k, deg), 0) + h
    return BettiTable(ideal.n_vars, p, entries)


def betti_table(ideal: MonomialIdeal, p: int = 2, method: str = "hochster", jobs: int = 1) -> BettiTable:
    if method == "hochster":
        return betti_table_hochster(ideal, p, jobs=jobs)
    if method == "taylor":
        return betti_table_taylor_oracle(ideal, p)
    raise ValueError(f"unknown Betti method {method!r}")


# ---------------------------------------------------------------- identities

def convolve_tables(a: BettiTable, b: BettiTable) -> BettiTable:
    """Betti table of R/(I1 + I2) for ideals in disjoint sets of variables."""
    if a.field_char != b.field_char:
        raise ValueError("tables over different fields")
    out: dict[tuple[int, int], int] = {}
    for (i, j), c in a.entries.items():
        for (k, l), d in b.entries.items():
            out[(i + k, j + l)] = out.get((i + k, j + l), 0) + c * d
    return BettiTable(a.n_vars + b.n_vars, a.field_char, out)


@dataclass
class ShiftVerdict:
    base: BettiTable
    scaled: BettiTable
    mismatches: list
    reg_increment: int
    pd_difference: int

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.reg_increment == 1 and self.pd_difference == 0


def shift_check_extra_variable(ideal: MonomialIdeal, p: int = 2) -> ShiftVerdict:
    """Compare R/I with R'/x_{n+1}I: beta_{i,j} should move to beta_{i,j+1} for i >= 1."""
    if ideal.is_zero:
        raise DomainError("the shift identity needs a nonzero ideal")
    n = ideal.n_vars
    scaled_ideal = scale_by_monomial(extend_ring(ideal), 1 << n)
    base = betti_table_hochster(ideal, p)
    scaled = betti_table_hochster(scaled_ideal, p)
    expect = {(i, j + 1): c for (i, j), c in base.entries.items() if i >= 1}
    got = {k: c for k, c in scaled.entries.items() if k[0] >= 1}
    mismatches = [(k, expect.get(k, 0), got.get(k, 0)) for k in sorted(set(expect) | set(got))
                  if expect.get(k, 0) != got.get(k, 0)]
    if scaled[0, 0] != 1:
        mismatches.append(((0, 0), 1, scaled[0, 0]))
    return ShiftVerdict(base, scaled, mismatches, scaled.regularity - base.regularity,
                        scaled.projective_dimension - base.projective_dimension)


@dataclass
class SplitReport:
    variable: int
    j: MonomialIdeal
    k: MonomialIdeal
    j_cap_k: MonomialIdeal
    rows: dict          # (i, j) -> (beta I, beta J, beta K, beta_{i-1} J∩K, residual)
    pd_i: int
    pd_parts: tuple     # (pd R/J, pd R/K, pd R/(J∩K) + 1 or None)

    @property
    def verdict(self) -> bool:
        return all(r[-1] == 0 for r in self.rows.values())

    @property
    def pd_recursion_holds(self) -> bool:
        return self.pd_i == max(x for x in self.pd_parts if x is not None)

    def to_json(self) -> dict:
        return {
            "variable": self.variable + 1,
            "verdict": self.verdict,
            "pd_recursion": self.pd_recursion_holds,
            "rows": [[i, j, *vals] for (i, j), vals in sorted(self.rows.items())],
        }


def _ideal_betti(ideal: MonomialIdeal, p: int) -> tuple[dict, int]:
    """Betti numbers of the ideal itself and pd of the quotient (zero ideal: ({}, 0))."""
    if ideal.is_zero:
        return {}, 0
    t = betti_table_hochster(ideal, p)
    return t.ideal_betti(), t.projective_dimension


def betti_splitting_report(ideal: MonomialIdeal, v: int, p: int = 2) -> SplitReport:
    """Check beta(I) = beta(J) + beta(K) + beta_{i-1}(J∩K) for the split of G(I) at x_v."""
    j, k = split_at_variable(ideal, v)
    jk = intersect_ideals(j, k)
    bi, pdi = _ideal_betti(ideal, p)
    bj, pdj = _ideal_betti(j, p)
    bk, pdk = _ideal_betti(k, p)
    bjk, pdjk = _ideal_betti(jk, p)
    keys = set(bi) | set(bj) | set(bk) | {(i + 1, d) for i, d in bjk}
    rows = {}
    for (i, d) in sorted(keys):
        a, b, c, e = bi.get((i, d), 0), bj.get((i, d), 0), bk.get((i, d), 0), bjk.get((i - 1, d), 0)
        rows[(i, d)] = (a, b, c, e, a - b - c - e)
    return SplitReport(v, j, k, jk, rows, pdi, (pdj, pdk, None if jk.is_zero else pdjk + 1))
