"""Size guards for the exhaustive searches.

Every search that is exponential in its input checks one of these limits
first. The CLI can override them with ``--max-n`` / ``--max-gens``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, asdict


@dataclass
class Guards:
    subset_n: int = 24          # minimal dominating sets, dominance complex
    coloring_n: int = 16        # exact chromatic number of the complement
    tree_n: int = 12            # Pruefer enumeration
    graph_n: int = 7            # enumeration of all graphs
    hochster_vars: int = 20     # 2^n induced subcomplexes
    taylor_gens: int = 12       # 2^g Taylor basis
    face_budget: int = 1 << 24  # faces materialised for one homology computation

    def get(self, name: str) -> int:
        return getattr(self, name)

    def override(self, **kw) -> None:
        for k, v in kw.items():
            if v is not None:
                if not hasattr(self, k):
                    raise KeyError(k)
                setattr(self, k, int(v))

    def as_dict(self) -> dict:
        return asdict(self)


GUARDS = Guards()


def default_prime() -> int:
    return int(os.environ.get("NIL_DEFAULT_P", "2"))
