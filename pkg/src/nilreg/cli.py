"""Command-line entry point: ``nilreg invariants | betti | verify | gen | census | cache``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .betti import betti_table_hochster, betti_table_taylor_oracle
from .cache import BettiCache, ideal_for
from .canon import enumerate_graphs, enumerate_trees, unicyclic_classes
from .config import GUARDS, default_prime
from .formats import ParseError, format_edge_list, load_ideal, read_edge_list, write_atomic
from .graphs import (Graph, GraphError, SizeGuardError, build_family, clique_cover_number, matching_number,
                     parse_family, structure_predicates)
from .harness import SUITES, census, encode_graph
from .linalg import check_prime
from .monomials import DomainError, closed_neighborhood_ideal


def load_graph(src: str) -> Graph:
    """A family spec (``cycle:5``) or a path to an edge-list file."""
    if os.path.exists(src):
        return read_edge_list(src)
    return build_family(parse_family(src))


def _cache(args) -> BettiCache | None:
    return None if args.no_cache else BettiCache()


def _table(g: Graph, kind: str, p: int, cache: BettiCache | None):
    if cache is None:
        return betti_table_hochster(ideal_for(g, kind), p)
    return cache.table(g, kind, p)


def cmd_invariants(args) -> int:
    g = load_graph(args.input)
    p = args.p
    st = structure_predicates(g)
    ni = closed_neighborhood_ideal(g)
    t = _table(g, "ni", p, _cache(args))
    info = {
        "input": args.input, "n": g.n, "m": g.m, "a": matching_number(g),
        "chi_complement": clique_cover_number(g), "chordal": st.is_chordal, "forest": st.is_forest,
        "tree": st.is_tree, "unicyclic": st.is_unicyclic, "NI_gens": ni.format(g.vertex_labels()),
        "p": p, "reg": t.regularity, "pd": t.projective_dimension, "betti": t.sorted_entries(),
    }
    if args.format == "json":
        print(json.dumps(info, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(info))
        w.writeheader()
        w.writerow({k: json.dumps(v) if isinstance(v, list) else v for k, v in info.items()})
        sys.stdout.write(buf.getvalue())
    else:
        print(f"graph      {args.input}   n={g.n} m={g.m}")
        print(f"matching   a_G = {info['a']}")
        print(f"clique cover chi(G^c) = {info['chi_complement']}")
        print(f"structure  chordal={st.is_chordal} forest={st.is_forest} tree={st.is_tree} "
              f"unicyclic={st.is_unicyclic}")
        print(f"NI(G)      {info['NI_gens']}")
        print(f"Betti table of R/NI(G) over GF({p}):")
        print(t.format())
        print(f"reg = {t.regularity}   pd = {t.projective_dimension}")
    return 0


def cmd_betti(args) -> int:
    p = args.p
    if args.ideal_file:
        ideal = load_ideal(args.ideal_file)
        label = args.ideal_file
        table = betti_table_hochster(ideal, p, jobs=args.jobs)
    else:
        if not args.input:
            raise GraphError("give a graph (family spec or edge-list file) or --ideal-file")
        g = load_graph(args.input)
        ideal = ideal_for(g, args.ideal)
        label = f"{args.ideal} {args.input}"
        if args.jobs > 1 or args.no_cache:
            table = betti_table_hochster(ideal, p, jobs=args.jobs)
        else:
            table = _table(g, args.ideal, p, _cache(args))
    status = 0
    oracle = None
    if args.oracle:
        oracle = betti_table_taylor_oracle(ideal, p)
        if oracle != table:
            status = 1
    if args.format == "json":
        d = table.to_json()
        if oracle is not None:
            d["oracle_agrees"] = status == 0
            if status:
                d["oracle"] = oracle.to_json()
        print(json.dumps(d, sort_keys=True))
    else:
        print(f"{label}   ideal {ideal}")
        print(table.format())
        print(f"reg = {table.regularity}   pd = {table.projective_dimension}   (GF({p}))")
        if oracle is not None:
            print("Taylor oracle: " + ("agrees" if status == 0 else "DISAGREES"))
            if status:
                print(oracle.format())
    if status:
        print("error: Hochster and Taylor tables differ", file=sys.stderr)
    return status


def cmd_verify(args) -> int:
    fn = SUITES[args.suite]
    kw = {"p": args.p, "seed": args.seed, "jobs": args.jobs}
    if args.n is not None:
        kw["n_max"] = args.n
    if args.suite == "closed-forms":
        kw.pop("jobs")
        kw.pop("n_max", None)
    elif args.suite == "oracle":
        kw.pop("p")
        kw["primes"] = tuple(args.primes) if args.primes else (2, 32003)
    elif args.suite == "stanley-reisner":
        kw.pop("p")
    report = fn(**kw)
    text = report.dumps(timing=not args.no_timing)
    if args.out:
        write_atomic(args.out, text)
    print(f"suite {report.suite}: {'PASS' if report.passed else 'FAIL'}  cases={report.cases} "
          f"failures={len(report.failures)} findings={len(report.findings)} seed={report.seed} "
          f"elapsed_ms={report.elapsed_ms}")
    if not args.out:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def cmd_gen(args) -> int:
    if args.what == "family":
        sys.stdout.write(format_edge_list(load_graph(args.arg)))
        return 0
    n = int(args.arg)
    if args.what == "trees":
        it = enumerate_trees(n, dedup=not args.labeled)
    elif args.what == "graphs":
        it = enumerate_graphs(n, connected_only=args.connected, dedup=not args.labeled)
    else:
        it = iter(unicyclic_classes(n))
    count = 0
    for g in it:
        if args.edge_list:
            sys.stdout.write(format_edge_list(g) + "\n")
        else:
            print(encode_graph(g))
        count += 1
    print(f"# {count} graphs", file=sys.stderr)
    return 0


def cmd_census(args) -> int:
    rows = census(args.n, args.p)
    if args.format == "json":
        print(json.dumps(rows, indent=1))
    else:
        w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)
    eq = sum(r["reg_eq_a"] for r in rows)
    print(f"# {len(rows)} graph classes, reg = a for {eq}, reg > a for {len(rows) - eq}", file=sys.stderr)
    return 0


def cmd_cache(args) -> int:
    cache = BettiCache()
    if args.action == "audit":
        checked, bad = cache.audit(args.fraction, args.seed)
        print(f"audited {checked} records in {cache.path}: {len(bad)} mismatches")
        for k in bad:
            print("  mismatch", k)
        return 1 if bad else 0
    if args.action == "path":
        print(cache.path)
        return 0
    if cache.path.exists():
        cache.path.unlink()
    print(f"cleared {cache.path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nilreg", description=__doc__)
    ap.add_argument("--max-n", type=int, help="raise every vertex-count guard (may be slow)")
    ap.add_argument("--max-gens", type=int, help="raise the Taylor generator guard (may be slow)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def prime_opt(p):
        p.add_argument("--p", type=int, default=default_prime(), help="field characteristic (default NIL_DEFAULT_P or 2)")

    p = sub.add_parser("invariants", help="graph and NI(G) invariants")
    p.add_argument("input", help="family spec (cycle:5, whiskered(path:3)) or edge-list file")
    p.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")
    p.add_argument("--no-cache", action="store_true")
    prime_opt(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("betti", help="Betti table of an ideal attached to a graph, or of an ideal file")
    p.add_argument("input", nargs="?", help="family spec or edge-list file")
    p.add_argument("--ideal", default="ni", help="ni | edge | path:t")
    p.add_argument("--ideal-file", help="ideal as text (x1*x2 per line) or JSON")
    p.add_argument("--oracle", action="store_true", help="also run the Taylor oracle and compare")
    p.add_argument("--format", choices=["pretty", "json"], default="pretty")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-cache", action="store_true")
    prime_opt(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int, help="largest vertex count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--primes", type=int, nargs="+", help="primes for the oracle suite")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms (byte-stable reports)")
    prime_opt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print graphs")
    p.add_argument("what", choices=["family", "trees", "graphs", "unicyclic"])
    p.add_argument("arg", help="family spec, or vertex count")
    p.add_argument("--labeled", action="store_true", help="all labelled graphs instead of one per class")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--edge-list", action="store_true", help="print edge lists instead of one-line encodings")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("census", help="reg / pd / matching number over all graph classes")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    prime_opt(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("cache", help="inspect the Betti cache (NIL_CACHE_DIR)")
    p.add_argument("action", choices=["audit", "clear", "path"])
    p.add_argument("--fraction", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cache)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.max_n is not None:
        print(f"warning: vertex guards raised to {args.max_n}; this may be slow", file=sys.stderr)
        GUARDS.override(subset_n=args.max_n, coloring_n=args.max_n, tree_n=args.max_n,
                        graph_n=args.max_n, hochster_vars=args.max_n)
    if args.max_gens is not None:
        print(f"warning: generator guard raised to {args.max_gens}; this may be slow", file=sys.stderr)
        GUARDS.override(taylor_gens=args.max_gens)
    try:
        if hasattr(args, "p"):
            check_prime(args.p)
        return args.func(args)
    except ParseError as exc:
        print(f"error: {args.input if hasattr(args, 'input') else ''}: {exc}", file=sys.stderr)
        return 2
    except SizeGuardError as exc:
        print(f"error: {exc.guard} guard: {exc.value} exceeds limit {exc.limit} "
              f"(raise with --max-n / --max-gens)", file=sys.stderr)
        return 2
    except (GraphError, DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
