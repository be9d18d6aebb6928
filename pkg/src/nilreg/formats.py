"""Text and JSON encodings for graphs, ideals, complexes and Betti tables.

All external encodings use 1-based vertex and variable indices.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from pathlib import Path

from .graphs import Graph, GraphError, bits, mask_of
from .monomials import MonomialIdeal, monomial_str
from .simplicial import SimplicialComplex


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}")


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield no, s


def parse_edge_list(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``u v`` (1-based); blanks and ``#`` comments ignored."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty edge list (expected header 'n m')")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(no, f"expected header 'n m', got {head!r}")
    n, m = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else no)
        raise ParseError(where, f"header announces {m} edges, found {len(body)}")
    edges = []
    seen = set()
    for no, s in body:
        parts = s.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(no, f"expected 'u v', got {s!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(no, f"vertex out of range 1..{n}")
        if u == v:
            raise ParseError(no, f"loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(no, f"repeated edge {u} {v}")
        seen.add(e)
        edges.append((u - 1, v - 1))
    return Graph.from_edges(n, edges)


def read_edge_list(path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read edge list {path}: {exc}") from None
    return parse_edge_list(text)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- ideals

_VAR = re.compile(r"x(\d+)")


def parse_ideal_text(text: str, n_vars: int | None = None) -> MonomialIdeal:
    """One generator per line, variables ``x<k>`` joined by ``*`` (``1`` is the unit)."""
    gens = []
    top = 0
    for no, s in _content_lines(text):
        if s == "1":
            gens.append(0)
            continue
        m = 0
        for tok in s.split("*"):
            tok = tok.strip()
            mt = _VAR.fullmatch(tok)
            if not mt or int(mt.group(1)) < 1:
                raise ParseError(no, f"bad variable {tok!r} (expected x1, x2, ...)")
            k = int(mt.group(1)) - 1
            if m >> k & 1:
                raise ParseError(no, f"{tok} repeated; only squarefree monomials are supported")
            m |= 1 << k
            top = max(top, k + 1)
        gens.append(m)
    n = top if n_vars is None else n_vars
    if top > n:
        raise ParseError(0, f"generators use x{top} but the ring has {n} variables")
    return MonomialIdeal.of(n, gens)


def format_ideal_text(ideal: MonomialIdeal) -> str:
    return "".join(monomial_str(g) + "\n" for g in ideal.gens)


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {"n_vars": ideal.n_vars, "gens": [[v + 1 for v in bits(g)] for g in ideal.gens]}


def ideal_from_json(d: dict) -> MonomialIdeal:
    return MonomialIdeal.of(d["n_vars"], (mask_of(v - 1 for v in g) for g in d["gens"]))


def load_ideal(path) -> MonomialIdeal:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return ideal_from_json(json.loads(text))
    return parse_ideal_text(text)


# ---------------------------------------------------------------- complexes

def complex_to_json(cx: SimplicialComplex) -> dict:
    return {"n": cx.n_vertices, "facets": [[v + 1 for v in bits(f)] for f in cx.facets]}


def complex_from_json(d: dict) -> SimplicialComplex:
    return SimplicialComplex(d["n"], tuple(mask_of(v - 1 for v in f) for f in d["facets"]))


def write_atomic(path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
