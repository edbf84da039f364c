"""Desk-scale comparison of encodings and mixers on small seeded graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .graph import Graph, generate_barabasi_albert, generate_erdos_renyi
from .qaoa import AnsatzConfig, RunRecord, Strategy, optimize

DESK_K = (3, 5, 6, 7)
DESK_SEEDS = {"er": 11, "ba": 5}
BA_WEIGHTS = (0.5, 1.5)

# (label, encoding, mixer); balanced rows only where the relation differs
METHODS = (
    ("X <k", "full_lt", "x"),
    ("Grover-box <k", "full_lt", "grover_box"),
    ("X bal", "full_bal", "x"),
    ("Grover-box bal", "full_bal", "grover_box"),
    ("LX sub", "subspace", "lx"),
    ("Grover-box sub", "subspace", "grover_box"),
    ("Grover sub", "subspace", "grover"),
)


def desk_graphs(n: int = 6) -> dict[str, Graph]:
    return {
        "er": generate_erdos_renyi(n, 0.5, DESK_SEEDS["er"]),
        "ba": generate_barabasi_albert(n, 2, DESK_SEEDS["ba"], *BA_WEIGHTS),
    }


def methods_for(k: int):
    for label, enc, mix in METHODS:
        if enc == "full_bal" and k in (3, 7):
            continue
        yield label, enc, mix


@dataclass
class DeskResult:
    graph: str
    k: int
    method: str
    alphas: list[float]
    seconds: float
    records: list[RunRecord] = field(default_factory=list, repr=False)

    def monotone_violation(self) -> float:
        """Largest drop of alpha from one depth to the next (0 if none)."""
        return max([0.0] + [a - b for a, b in zip(self.alphas, self.alphas[1:])])


def run_desk(p_max: int = 5, k_values=DESK_K, strategy: Strategy = Strategy(),
             graphs: dict[str, Graph] | None = None, progress=None) -> list[DeskResult]:
    graphs = desk_graphs() if graphs is None else graphs
    out = []
    for gname, g in graphs.items():
        for k in k_values:
            for label, enc, mix in methods_for(k):
                t0 = time.perf_counter()
                recs = optimize(AnsatzConfig(g, k, enc, mix), strategy, seed=0, p_max=p_max)
                res = DeskResult(gname, k, label, [r.alpha for r in recs],
                                 time.perf_counter() - t0, recs)
                out.append(res)
                if progress:
                    progress(res)
    return out


RANKINGS = (
    ("Grover-box sub", "LX sub"),
    ("Grover-box <k", "X <k"),
    ("Grover-box bal", "X bal"),
    ("X bal", "X <k"),
)


def ranking_checks(results: list[DeskResult], slack: float = 0.02, depth: int = 1):
    """``(graph, k, better, worse, alpha_better, alpha_worse, ok)`` at ``depth``."""
    table = {(r.graph, r.k, r.method): r.alphas[depth - 1] for r in results}
    rows = []
    for (gname, k, _m) in sorted({(g, k, None) for g, k, _ in table}):
        for better, worse in RANKINGS:
            if (gname, k, better) in table and (gname, k, worse) in table:
                ab, aw = table[gname, k, better], table[gname, k, worse]
                rows.append((gname, k, better, worse, ab, aw, ab >= aw - slack))
    return rows
