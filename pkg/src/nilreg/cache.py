"""Append-only JSON-lines cache of Betti tables keyed by canonical graph form.

Betti tables do not depend on vertex labels, so isomorphic graphs share a
record. The directory comes from ``NIL_CACHE_DIR`` (default
``~/.cache/nilreg``). Appends go through one lock so concurrent writers in a
process never interleave lines.
"""

from __future__ import annotations

import json
import os
import random
import threading
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .betti import BettiTable, betti_table_hochster
from .canon import canonical_graph, canonical_key
from .graphs import Graph
from .monomials import MonomialIdeal, closed_neighborhood_ideal, edge_ideal, path_ideal


def ideal_for(g: Graph, kind: str) -> MonomialIdeal:
    if kind == "ni":
        return closed_neighborhood_ideal(g)
    if kind == "edge":
        return edge_ideal(g)
    if kind.startswith("path:"):
        return path_ideal(g, int(kind.split(":", 1)[1]))
    raise ValueError(f"unknown ideal kind {kind!r} (use ni, edge or path:t)")


@dataclass
class CacheRecord:
    key: str
    table: dict
    version: str

    def to_line(self) -> str:
        return json.dumps({"key": self.key, "table": self.table, "version": self.version}, sort_keys=True)


class BettiCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        d = directory or os.environ.get("NIL_CACHE_DIR") or Path.home() / ".cache" / "nilreg"
        self.dir = Path(d)
        self.path = self.dir / "betti.jsonl"
        self._lock = threading.Lock()
        self._mem: dict[str, dict] | None = None

    @staticmethod
    def key(g: Graph, kind: str, p: int) -> str:
        return f"{canonical_key(g)}|{kind}|{p}"

    def _load(self) -> dict[str, dict]:
        if self._mem is None:
            self._mem = {}
            if self.path.exists():
                for line in self.path.read_text().splitlines():
                    if line.strip():
                        rec = json.loads(line)
                        self._mem[rec["key"]] = rec["table"]
        return self._mem

    def get(self, g: Graph, kind: str, p: int) -> BettiTable | None:
        rec = self._load().get(self.key(g, kind, p))
        return BettiTable.from_json(rec) if rec else None

    def put(self, g: Graph, kind: str, p: int, table: BettiTable) -> None:
        key = self.key(g, kind, p)
        with self._lock:
            mem = self._load()
            if key in mem:
                return
            mem[key] = table.to_json()
            self.dir.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a") as fh:
                fh.write(CacheRecord(key, mem[key], __version__).to_line() + "\n")

    def table(self, g: Graph, kind: str = "ni", p: int = 2) -> BettiTable:
        hit = self.get(g, kind, p)
        if hit is not None:
            return hit
        t = betti_table_hochster(ideal_for(g, kind), p)
        self.put(g, kind, p, t)
        return t

    def audit(self, fraction: float = 0.05, seed: int = 0) -> tuple[int, list[str]]:
        """Recompute a random sample of records; returns (checked, mismatching keys)."""
        from .canon import decode_key
        mem = self._load()
        keys = sorted(mem)
        rng = random.Random(seed)
        k = max(1, round(fraction * len(keys))) if keys else 0
        sample = rng.sample(keys, k)
        bad = []
        for key in sample:
            gk, kind, p = key.split("|")
            g = canonical_graph(decode_key(gk))
            fresh = betti_table_hochster(ideal_for(g, kind), int(p))
            if fresh != BettiTable.from_json(mem[key]):
                bad.append(key)
        return len(sample), bad
