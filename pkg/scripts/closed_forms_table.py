"""Print reg / pd / matching number for cycles, wheels, complete graphs and K_{n,2}."""

from __future__ import annotations

import argparse

from nilreg.graphs import build_family, complete_bipartite, complete_graph, cycle_graph, matching_number
from nilreg.harness import cycle_pd_formula, ni_table, wheel_pd_formula


def row(name, g, p, predicted=None):
    t = ni_table(g, p)
    extra = "" if predicted is None else f"  predicted pd {predicted}"
    print(f"{name:10s} a={matching_number(g):2d} reg={t.regularity:2d} pd={t.projective_dimension:2d}{extra}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--max-cycle", type=int, default=12)
    args = ap.parse_args()
    for n in range(3, args.max_cycle + 1):
        row(f"C{n}", cycle_graph(n), args.p, cycle_pd_formula(n))
    for n in range(3, 11):
        w = build_family(f"wheel:{n + 1}")
        row(f"W{n + 1}", w, args.p, wheel_pd_formula(n, matching_number(w)))
    for m in range(2, 9):
        row(f"K{m}", complete_graph(m), args.p, 1)
    for n in range(2, 6):
        row(f"K{n},2", complete_bipartite(n, 2), args.p)


if __name__ == "__main__":
    main()
