"""Exact rank computations over prime fields.

GF(2) matrices are handled as lists of Python ints (one bitset per row);
other primes go through dense row reduction in numpy with int64 entries.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"field characteristic must be prime, got {p!r}")
    if p > 46337:
        # products of two residues must stay inside int64 before reduction
        raise ValueError(f"prime {p} too large for int64 elimination (max 46337)")
    return p


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as row bitsets."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            other = pivots.get(low)
            if other is None:
                pivots[low] = r
                break
            r ^= other
    return len(pivots)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p), p an odd prime."""
    a = np.array(matrix, dtype=np.int64) % p
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, col]
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + rank + 1
            a[idx] = (a[idx] - np.outer(a[idx, col], a[rank])) % p
        rank += 1
    return rank


def sparse_rank(rows: Sequence[Sequence[tuple[int, int]]], n_cols: int, p: int) -> int:
    """Rank over GF(p) of a matrix given as rows of ``(column, value)`` pairs."""
    if not rows or n_cols == 0:
        return 0
    if p == 2:
        bits = []
        for row in rows:
            r = 0
            for c, v in row:
                if v & 1:
                    r ^= 1 << c
            bits.append(r)
        return rank_gf2(bits)
    dense = np.zeros((len(rows), n_cols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, v in row:
            dense[i, c] += v
    return rank_mod_p(dense, p)
