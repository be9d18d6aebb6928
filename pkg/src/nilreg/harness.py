"""Named verification suites over enumerated and constructed graph families.

Each suite returns a :class:`SuiteReport`. A failure records the graph (as
a 1-based edge string), the check name, and the expected/actual values, so
:func:`rerun_failure` can reproduce it. Outcomes that the theory predicts
to be strict or reversed (C_5, C_7, K_m) are asserted exactly; they land in
``findings`` when they hold and in ``failures`` when they do not.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .betti import (BettiTable, betti_splitting_report, betti_table_hochster, betti_table_taylor_oracle,
                    convolve_tables, shift_check_extra_variable)
from .canon import (canonical_key, chordal_classes, forest_classes, graph_classes, tree_classes,
                    unicyclic_classes)
from .graphs import (Graph, SizeGuardError, bits, build_family, clique_cover_number, complete_bipartite,
                     complete_graph, components, cycle_graph, is_chordal, is_star, mask_of, matching_number,
                     path_graph, rooted_levels, simplicial_vertices, star_graph, wheel_graph, whisker_all)
from .monomials import (MonomialIdeal, add_ideals, add_variable, closed_neighborhood_ideal, colon_by_monomial,
                        edge_ideal, extend_ring, path_ideal, scale_by_monomial)
from .simplicial import (dominance_complex, reduced_homology_ranks, stanley_reisner_complex,
                         stanley_reisner_ideal)


def encode_graph(g: Graph) -> str:
    return f"{g.n}:" + ",".join(f"{u + 1}-{v + 1}" for u, v in g.sorted_edges())


def decode_graph(s: str) -> Graph:
    n_s, _, rest = s.partition(":")
    edges = []
    for tok in filter(None, rest.split(",")):
        u, v = tok.split("-")
        edges.append((int(u) - 1, int(v) - 1))
    return Graph.from_edges(int(n_s), edges)


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    seed: int = 0
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = True) -> dict:
        d = {
            "suite": self.suite, "params": self.params, "cases": self.cases,
            "failures": sorted(self.failures, key=lambda f: (f["check"], f["graph"])),
            "findings": self.findings, "summary": self.summary, "seed": self.seed,
            "pass": self.passed,
        }
        if timing:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True) + "\n"


class _Run:
    """Accumulates cases for one suite run."""

    def __init__(self, name: str, params: dict, seed: int = 0):
        self.report = SuiteReport(name, params, seed=seed)
        self.t0 = time.perf_counter()

    def check(self, check: str, g: Graph | None, ok: bool, expected, actual, p: int | None = None) -> bool:
        self.report.cases += 1
        if not ok:
            rec = {"check": check, "graph": encode_graph(g) if g is not None else "",
                   "expected": expected, "actual": actual}
            if p is not None:
                rec["p"] = p
            self.report.failures.append(rec)
        return ok

    def finding(self, **kw) -> None:
        self.report.findings.append(kw)

    def done(self) -> SuiteReport:
        self.report.elapsed_ms = int((time.perf_counter() - self.t0) * 1000)
        return self.report


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def ni_table(g: Graph, p: int = 2) -> BettiTable:
    return betti_table_hochster(closed_neighborhood_ideal(g), p)


# ---------------------------------------------------------------- single checks
# Each check takes (graph, p) and returns (ok, expected, actual); the same
# functions back the suites and rerun_failure.

def check_reg_eq_matching(g: Graph, p: int):
    a, reg = matching_number(g), ni_table(g, p).regularity
    return reg == a, a, reg


def check_reg_ge_matching(g: Graph, p: int):
    a, reg = matching_number(g), ni_table(g, p).regularity
    return reg >= a, f">={a}", reg


def chain_values(g: Graph, p: int) -> dict:
    reg = ni_table(g, p).regularity
    hdim = reduced_homology_ranks(dominance_complex(g), p).homological_dimension
    chi = clique_cover_number(g)
    return {"reg": reg, "hdim": hdim, "n_minus_chi": g.n - chi, "a": matching_number(g)}


def check_chain(g: Graph, p: int):
    v = chain_values(g, p)
    h1 = None if v["hdim"] is None else v["hdim"] + 1
    ok = (h1 is not None and v["reg"] >= h1 >= v["n_minus_chi"] >= v["a"])
    return ok, "reg >= hdim+1 >= n-chi >= a", v


def check_pd_ge_matching(g: Graph, p: int):
    a, pd = matching_number(g), ni_table(g, p).projective_dimension
    return pd >= a, f">={a}", pd


def check_component_additivity(g: Graph, p: int):
    direct = ni_table(g, p)
    conv = BettiTable(0, p, {(0, 0): 1})
    for comp in components(g):
        conv = convolve_tables(conv, ni_table(g.induced(comp)[0], p))
    return direct == conv, conv.sorted_entries(), direct.sorted_entries()


def check_splitting(g: Graph, p: int, v: int):
    rep = betti_splitting_report(closed_neighborhood_ideal(g), v, p)
    g2, old = g.delete(bits(g.closed[v]))
    expect_jk = scale_by_monomial(closed_neighborhood_ideal(g2).embed(old, g.n), g.closed[v])
    ok = rep.verdict and rep.pd_recursion_holds and len(rep.j.gens) == 1 and rep.j_cap_k == expect_jk
    actual = {"verdict": rep.verdict, "pd_recursion": rep.pd_recursion_holds,
              "J_principal": len(rep.j.gens) == 1, "JcapK_matches": rep.j_cap_k == expect_jk}
    return ok, "all true", actual


def check_froberg(g: Graph, p: int):
    """reg(R/I(G^c)) = 1 exactly when G is chordal, for G not complete."""
    gc = g.complement()
    chordal = is_chordal(g)
    if gc.m == 0:
        reg = 0
        return chordal, "chordal", {"reg": reg, "chordal": chordal}
    reg = betti_table_hochster(edge_ideal(gc), p).regularity
    return (reg == 1) == chordal, {"reg_is_1": chordal}, {"reg": reg, "chordal": chordal}


def _ideals_for_oracle(g: Graph) -> dict[str, MonomialIdeal]:
    return {"ni": closed_neighborhood_ideal(g), "edge": edge_ideal(g), "path3": path_ideal(g, 3)}


def check_oracle(g: Graph, p: int):
    bad = {}
    for kind, ideal in _ideals_for_oracle(g).items():
        h, t = betti_table_hochster(ideal, p), betti_table_taylor_oracle(ideal, p)
        if h != t:
            bad[kind] = {"hochster": h.sorted_entries(), "taylor": t.sorted_entries()}
    return not bad, "tables agree", bad or "tables agree"


def check_stanley_reisner(g: Graph, p: int):
    ni = closed_neighborhood_ideal(g)
    dc = dominance_complex(g)
    sr = stanley_reisner_complex(ni)
    res = {
        "I_of_D_is_NI": stanley_reisner_ideal(dc) == ni,
        "D_is_Delta_NI": sr == dc,
        "ideal_round_trip": stanley_reisner_ideal(sr) == ni,
        "complex_round_trip": stanley_reisner_complex(stanley_reisner_ideal(dc)) == dc,
    }
    return all(res.values()), "all true", res


CHECKS: dict[str, Callable] = {
    "reg_eq_matching": check_reg_eq_matching,
    "reg_ge_matching": check_reg_ge_matching,
    "chain": check_chain,
    "pd_ge_matching": check_pd_ge_matching,
    "component_additivity": check_component_additivity,
    "froberg": check_froberg,
    "oracle": check_oracle,
    "stanley_reisner": check_stanley_reisner,
}


def rerun_failure(rec: dict, p: int = 2):
    """Recompute a recorded failure; returns (ok, expected, actual)."""
    g = decode_graph(rec["graph"])
    p = rec.get("p", p)
    if rec["check"].startswith("splitting@"):
        return check_splitting(g, p, int(rec["check"].split("@x")[1]) - 1)
    return CHECKS[rec["check"]](g, p)


def _run_checks(run: _Run, name: str, graphs: list[Graph], p: int, jobs: int) -> list:
    fn = CHECKS[name]
    results = _pmap(_CheckCall(name, p), graphs, jobs) if jobs > 1 else [fn(g, p) for g in graphs]
    for g, (ok, exp, act) in zip(graphs, results):
        run.check(name, g, ok, exp, act, p)
    return results


class _CheckCall:
    def __init__(self, name: str, p: int):
        self.name, self.p = name, p

    def __call__(self, g: Graph):
        return CHECKS[self.name](g, self.p)


def _guard(name: str, value: int, limit: int) -> None:
    if value > limit:
        raise SizeGuardError(name, limit, value)


# ---------------------------------------------------------------- suites

def suite_forest_equality(n_max: int = 8, p: int = 2, seed: int = 0, n_random: int = 20,
                          jobs: int = 1) -> SuiteReport:
    """reg(R/NI(F)) = matching number for every tree class and random forests."""
    _guard("forest_n", n_max, 10)
    run = _Run("forest-equality", {"n_max": n_max, "p": p, "n_random": n_random}, seed)
    counts = {}
    for n in range(1, n_max + 1):
        trees = list(tree_classes(n))
        counts[n] = len(trees)
        _run_checks(run, "reg_eq_matching", trees, p, jobs)
    rng = random.Random(seed)
    forests = []
    for _ in range(n_random):
        total = rng.randint(2, n_max)
        parts = []
        while total:
            size = rng.randint(1, total)
            parts.append(rng.choice(tree_classes(size)))
            total -= size
        from .graphs import disjoint_union
        forests.append(disjoint_union(*parts))
    _run_checks(run, "reg_eq_matching", forests, p, jobs)
    for n in range(2, min(8, n_max) + 1):
        reg = ni_table(star_graph(n), p).regularity
        run.check("star_reg_is_1", star_graph(n), reg == 1, 1, reg, p)
    if n_max >= 3:
        t = ni_table(path_graph(3), p)
        ok = t.regularity == 1 and t.projective_dimension == 2
        run.check("P3_reg1_pd2", path_graph(3), ok, [1, 2], [t.regularity, t.projective_dimension], p)
        if ok:
            run.finding(kind="strict", graph="P3", statement="pd = 2 > 1 = matching number")
    run.report.summary = {"tree_classes": counts, "tree_classes_n2_to_nmax": sum(c for n, c in counts.items()
                                                                                  if n >= 2),
                          "random_forests": n_random}
    return run.done()


def suite_lower_bound(n_max: int = 6, p: int = 2, seed: int = 0, jobs: int = 1) -> SuiteReport:
    """reg(R/NI(G)) >= matching number with the intermediate chain, over all graph classes."""
    _guard("graph_n", n_max, 7)
    run = _Run("lower-bound", {"n_max": n_max, "p": p}, seed)
    counts, census = {}, {"equal": 0, "strict": 0}
    for n in range(1, n_max + 1):
        graphs = list(graph_classes(n))
        counts[n] = len(graphs)
        for g, (ok, _, vals) in zip(graphs, _run_checks(run, "chain", graphs, p, jobs)):
            run.check("reg_ge_matching", g, vals["reg"] >= vals["a"], f">={vals['a']}", vals["reg"], p)
            census["equal" if vals["reg"] == vals["a"] else "strict"] += 1
    c7 = cycle_graph(7)
    reg, a = ni_table(c7, p).regularity, matching_number(c7)
    if run.check("C7_reg4_gt_a3", c7, reg == 4 and a == 3, [4, 3], [reg, a], p):
        run.finding(kind="strict", graph="C7", statement="reg = 4 > 3 = matching number")
    for m in range(3, 8):
        km = complete_graph(m)
        reg, a = ni_table(km, p).regularity, matching_number(km)
        run.check(f"K{m}_reg", km, reg == m - 1 and a == m // 2 and reg >= a, [m - 1, m // 2], [reg, a], p)
    run.report.summary = {"graph_classes": counts, "reg_vs_matching": census}
    return run.done()


def suite_pd_bounds(n_max: int = 8, p: int = 2, seed: int = 0, jobs: int = 1) -> SuiteReport:
    """pd(R/NI(G)) >= matching number for forests and unicyclic graphs; K_m reverses it."""
    _guard("pd_n", n_max, 9)
    run = _Run("pd-bounds", {"n_max": n_max, "p": p}, seed)
    counts = {"forests": {}, "unicyclic": {}}
    for n in range(1, n_max + 1):
        fs = list(forest_classes(n))
        us = list(unicyclic_classes(n))
        counts["forests"][n], counts["unicyclic"][n] = len(fs), len(us)
        _run_checks(run, "pd_ge_matching", fs + us, p, jobs)
    c5 = cycle_graph(5)
    pd, a = ni_table(c5, p).projective_dimension, matching_number(c5)
    if run.check("C5_pd3_gt_a2", c5, pd == 3 and a == 2, [3, 2], [pd, a], p):
        run.finding(kind="strict", graph="C5", statement="pd = 3 > 2 = matching number")
    for m in range(4, 9):
        km = complete_graph(m)
        pd, a = ni_table(km, p).projective_dimension, matching_number(km)
        if run.check(f"K{m}_pd1_lt_a", km, pd == 1 and a == m // 2 and pd < a, [1, m // 2], [pd, a], p):
            run.finding(kind="reversal", graph=f"K{m}", statement=f"pd = 1 < {a} = matching number")
    run.report.summary = counts
    return run.done()


def cycle_pd_formula(n: int) -> int:
    d = n % 4
    return n // 2 if d == 0 else (n - d + 2) // 2


def wheel_pd_formula(n: int, a: int) -> int:
    """pd of R/NI(W_{n+1}) in terms of its matching number a."""
    return a - 1 if n % 4 == 3 else a


def suite_closed_forms(p: int = 2, seed: int = 0) -> SuiteReport:
    run = _Run("closed-forms", {"p": p}, seed)
    for n in range(3, 13):
        g = cycle_graph(n)
        t = ni_table(g, p)
        pd = t.projective_dimension
        run.check(f"cycle_pd_C{n}", g, pd == cycle_pd_formula(n), cycle_pd_formula(n), pd, p)
        run.check(f"NI_eq_J3_C{n}", g, closed_neighborhood_ideal(g) == path_ideal(g, 3), True,
                  closed_neighborhood_ideal(g) == path_ideal(g, 3), p)
    for n in range(3, 11):
        w = wheel_graph(n + 1)
        a = matching_number(w)
        tw = ni_table(w, p)
        pd = tw.projective_dimension
        run.check(f"wheel_pd_W{n + 1}", w, pd == wheel_pd_formula(n, a), wheel_pd_formula(n, a), pd, p)
        run.check(f"wheel_matching_W{n + 1}", w, a == (n + 1) // 2, (n + 1) // 2, a, p)
        hub_scaled = scale_by_monomial(extend_ring(closed_neighborhood_ideal(cycle_graph(n))), 1 << n)
        run.check(f"wheel_hub_ideal_W{n + 1}", w, closed_neighborhood_ideal(w) == hub_scaled, True,
                  closed_neighborhood_ideal(w) == hub_scaled, p)
        tc = ni_table(cycle_graph(n), p)
        shifted = {(i, j + (1 if i >= 1 else 0)): c for (i, j), c in tc.entries.items()}
        run.check(f"wheel_hub_table_W{n + 1}", w, tw.entries == shifted, sorted(shifted.items()),
                  sorted(tw.entries.items()), p)
        run.check(f"wheel_pd_via_cycle_W{n + 1}", w, tc.projective_dimension == pd, pd, tc.projective_dimension, p)
    for m in range(2, 9):
        km = complete_graph(m)
        t = ni_table(km, p)
        run.check(f"K{m}_reg_pd", km, (t.regularity, t.projective_dimension) == (m - 1, 1), [m - 1, 1],
                  [t.regularity, t.projective_dimension], p)
    c7, c5 = cycle_graph(7), cycle_graph(5)
    run.check("C7_reg4", c7, ni_table(c7, p).regularity == 4, 4, ni_table(c7, p).regularity, p)
    run.check("C5_pd3", c5, ni_table(c5, p).projective_dimension == 3, 3, ni_table(c5, p).projective_dimension, p)
    for n in range(1, 5):
        for base in graph_classes(n):
            w = whisker_all(base)
            t = ni_table(w, p)
            vals = [t.regularity, t.projective_dimension, matching_number(w)]
            run.check("whiskered_reg_pd_a", w, vals == [n, n, n], [n, n, n], vals, p)
    for n in range(2, 6):
        g = complete_bipartite(n, 2)
        y1, y2 = n, n + 1
        plus = add_variable(closed_neighborhood_ideal(g), y2)
        expect = MonomialIdeal.of(n + 2, [1 << y2, ((1 << n) - 1) | (1 << y1)])
        run.check(f"K{n},2_colon_form", g, plus == expect, str(expect), str(plus), p)
        reg_plus = betti_table_hochster(plus, p).regularity
        reg = ni_table(g, p).regularity
        run.check(f"K{n},2_reg", g, reg_plus == n and reg >= n and matching_number(g) == 2,
                  {"reg_plus_y2": n, "reg": f">={n}", "a": 2},
                  {"reg_plus_y2": reg_plus, "reg": reg, "a": matching_number(g)}, p)
    return run.done()


def deep_leaf_setups(t: Graph):
    """Every (root, deepest leaf x1, its neighbour y, leaf neighbours of y, b) for a non-star tree."""
    if is_star(t) or t.n < 3:
        return
    for root in range(t.n):
        level, height = rooted_levels(t, root)
        for x1 in range(t.n):
            if level[x1] != height:
                continue
            (y,) = t.neighbors(x1)
            xs = [w for w in t.neighbors(y) if t.degree(w) == 1]
            bs = [w for w in t.neighbors(y) if t.degree(w) > 1]
            yield root, x1, y, xs, bs


def check_tree_colon(t: Graph, y: int, xs: list[int]) -> dict:
    ni = closed_neighborhood_ideal(t)
    tp, old_p = t.delete([y] + xs)
    tpp, old_pp = t.delete(xs)
    colon = colon_by_monomial(ni, 1 << y)
    rhs = add_ideals(MonomialIdeal.of(t.n, [1 << x for x in xs]), closed_neighborhood_ideal(tp).embed(old_p, t.n))
    plus = add_variable(ni, y)
    rhs2 = add_variable(closed_neighborhood_ideal(tpp).embed(old_pp, t.n), y)
    return {"colon": colon == rhs, "plus_y": plus == rhs2}


def suite_structural_identities(n_max: int = 6, p: int = 2, seed: int = 0, n_shift: int = 50,
                                jobs: int = 1) -> SuiteReport:
    _guard("graph_n", n_max, 7)
    run = _Run("structural-identities", {"n_max": n_max, "p": p, "n_shift": n_shift}, seed)
    summary = {"splits": 0, "tree_setups": 0, "disconnected": 0, "shift_samples": 0, "colon_plus_bounds": 0}
    # (a) Betti splitting at simplicial vertices of chordal graphs
    for n in range(1, n_max + 1):
        for g in chordal_classes(n):
            for v in sorted(simplicial_vertices(g)):
                ok, exp, act = check_splitting(g, p, v)
                run.check(f"splitting@x{v + 1}", g, ok, exp, act, p)
                summary["splits"] += 1
    # (b) colon / deletion identities on trees
    for n in range(3, max(n_max, 3) + 1):
        for t in tree_classes(n):
            for root, x1, y, xs, bs in deep_leaf_setups(t):
                res = check_tree_colon(t, y, xs)
                res["b_unique_nonleaf"] = len(bs) == 1
                run.check("tree_colon_identities", t, all(res.values()), "all true", res, p)
                summary["tree_setups"] += 1
    # (c) component additivity
    disc = [g for n in range(2, n_max + 1) for g in graph_classes(n) if len(components(g)) > 1]
    _run_checks(run, "component_additivity", disc, p, jobs)
    summary["disconnected"] = len(disc)
    # (d) extra-variable shift on sampled ideals
    rng = random.Random(seed)
    for ideal in sample_ideals(rng, n_shift, max_vars=min(n_max, 6)):
        v = shift_check_extra_variable(ideal, p)
        run.check("extra_variable_shift", None, v.ok, "shift by one, reg+1, pd same",
                  {"ideal": str(ideal), "mismatches": [list(m) for m in v.mismatches],
                   "reg_increment": v.reg_increment, "pd_difference": v.pd_difference}, p)
        summary["shift_samples"] += 1
    # (e) regularity bounds under colon and adding a variable
    for n in range(1, min(n_max, 5) + 1):
        for g in graph_classes(n):
            for ok, exp, act in colon_and_plus_checks(closed_neighborhood_ideal(g), p):
                run.check("colon_plus_reg_bounds", g, ok, exp, act, p)
                summary["colon_plus_bounds"] += 1
    run.report.summary = summary
    return run.done()


def _reg_or_none(ideal: MonomialIdeal, p: int) -> int | None:
    """Regularity of R/I, or None when I is the unit ideal (zero module)."""
    if ideal.is_unit:
        return None
    return betti_table_hochster(ideal, p).regularity


def colon_and_plus_checks(ideal: MonomialIdeal, p: int):
    """For each variable x in some generator: reg(R/<I,x>) <= reg(R/I) <= max(reg(R/(I:x)) + 1, reg(R/<I,x>))."""
    reg = betti_table_hochster(ideal, p).regularity
    for v in bits(ideal.support):
        plus = _reg_or_none(add_variable(ideal, v), p)
        colon = _reg_or_none(colon_by_monomial(ideal, 1 << v), p)
        upper = max(x for x in (None if colon is None else colon + 1, plus) if x is not None)
        yield (plus <= reg <= upper, {"x": v + 1, "rule": "plus <= reg <= max(colon+1, plus)"},
               {"x": v + 1, "reg": reg, "plus": plus, "colon": colon})


def sample_ideals(rng: random.Random, count: int, max_vars: int = 6) -> list[MonomialIdeal]:
    """Half NI(G) of random labelled graphs, half random squarefree ideals."""
    out = []
    while len(out) < count:
        n = rng.randint(2, max_vars)
        if len(out) % 2 == 0:
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = Graph.from_edges(n, [e for e in pairs if rng.random() < 0.5])
            ideal = closed_neighborhood_ideal(g)
        else:
            k = rng.randint(1, 5)
            ideal = MonomialIdeal.of(n, [rng.randrange(1, 1 << n) for _ in range(k)])
        if not ideal.is_zero and not ideal.is_unit:
            out.append(ideal)
    return out


def suite_oracle(n_max: int = 5, primes: tuple = (2, 32003), seed: int = 0, jobs: int = 1) -> SuiteReport:
    _guard("oracle_n", n_max, 6)
    run = _Run("oracle", {"n_max": n_max, "primes": list(primes)}, seed)
    graphs = [g for n in range(1, n_max + 1) for g in graph_classes(n)]
    for p in primes:
        _run_checks(run, "oracle", graphs, p, jobs)
    _field_findings(run, graphs, primes)
    run.report.summary = {"graphs": len(graphs), "ideal_kinds": ["ni", "edge", "path3"]}
    return run.done()


def _field_findings(run: _Run, graphs: list[Graph], primes: tuple) -> None:
    if len(primes) < 2:
        return
    for g in graphs:
        tabs = {p: ni_table(g, p).entries for p in primes}
        if len({json.dumps(sorted(t.items())) for t in tabs.values()}) > 1:
            run.finding(kind="field_dependence", graph=encode_graph(g), primes=list(primes))


def suite_stanley_reisner(n_max: int = 5, seed: int = 0, jobs: int = 1) -> SuiteReport:
    _guard("sr_n", n_max, 7)
    run = _Run("stanley-reisner", {"n_max": n_max}, seed)
    graphs = [g for n in range(1, n_max + 1) for g in graph_classes(n)]
    _run_checks(run, "stanley_reisner", graphs, 2, jobs)
    run.report.summary = {"graphs": len(graphs)}
    return run.done()


def suite_froberg(n_max: int = 6, p: int = 2, seed: int = 0, jobs: int = 1) -> SuiteReport:
    _guard("graph_n", n_max, 7)
    run = _Run("froberg", {"n_max": n_max, "p": p}, seed)
    graphs = [g for n in range(1, n_max + 1) for g in graph_classes(n)]
    _run_checks(run, "froberg", graphs, p, jobs)
    run.report.summary = {"graphs": len(graphs), "chordal": sum(is_chordal(g) for g in graphs),
                          "complete_graphs_skipping_reg1": sum(g.complement().m == 0 for g in graphs)}
    return run.done()


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "forest-equality": suite_forest_equality,
    "lower-bound": suite_lower_bound,
    "pd-bounds": suite_pd_bounds,
    "closed-forms": suite_closed_forms,
    "structural-identities": suite_structural_identities,
    "oracle": suite_oracle,
    "stanley-reisner": suite_stanley_reisner,
    "froberg": suite_froberg,
}


def census(n_max: int = 6, p: int = 2) -> list[dict]:
    """reg, pd and matching number of NI(G) for every graph class; no pass/fail semantics."""
    rows = []
    for n in range(1, n_max + 1):
        for g in graph_classes(n):
            t = ni_table(g, p)
            a = matching_number(g)
            rows.append({"graph": encode_graph(g), "key": canonical_key(g), "n": g.n, "m": g.m, "a": a,
                         "reg": t.regularity, "pd": t.projective_dimension, "chordal": is_chordal(g),
                         "reg_eq_a": t.regularity == a})
    return rows
