"""Run every verification suite at its acceptance parameters and write JSON reports.

    python3 scripts/run_all_suites.py --out reports/ --p 2
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from nilreg.formats import write_atomic
from nilreg.harness import SUITES

PARAMS = {
    "forest-equality": {"n_max": 8},
    "lower-bound": {"n_max": 6},
    "pd-bounds": {"n_max": 8},
    "closed-forms": {},
    "structural-identities": {"n_max": 6},
    "oracle": {"n_max": 5, "primes": (2, 32003)},
    "stanley-reisner": {"n_max": 5},
    "froberg": {"n_max": 6},
}
NO_PRIME = {"oracle", "stanley-reisner"}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="reports")
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-timing", action="store_true")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name, kw in PARAMS.items():
        kw = dict(kw, seed=args.seed)
        if name not in NO_PRIME:
            kw["p"] = args.p
        rep = SUITES[name](**kw)
        write_atomic(out / f"{name}.json", rep.dumps(timing=not args.no_timing))
        print(f"{name:24s} {'PASS' if rep.passed else 'FAIL'}  cases={rep.cases:5d} "
              f"findings={len(rep.findings):3d} {rep.elapsed_ms} ms")
        failed += not rep.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
