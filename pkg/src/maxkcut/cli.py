"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage or input error.
Output files default to ``$MAXKCUT_OUTPUT_DIR`` (or the working directory).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .checks import run_suites
from .circuit import DEFAULT_CX_TABLE, format_census, load_cx_table
from .exceptions import MaxKCutError
from .graph import (
    brute_force_max_kcut,
    generate_barabasi_albert,
    generate_erdos_renyi,
    load_graph,
    save_graph,
)
from .qaoa import AnsatzConfig, Strategy, fmt, grid_axes, landscape, landscape_csv, optimize
from .resources import prior_work_row, resource_report
from .statevector import DEFAULT_MAX_QUBITS, check_size

OUTPUT_ENV = "MAXKCUT_OUTPUT_DIR"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _out_path(arg: str | None, default_name: str) -> Path:
    base = Path(os.environ.get(OUTPUT_ENV, "."))
    path = Path(arg) if arg else base / default_name
    if not path.is_absolute() and arg and os.environ.get(OUTPUT_ENV):
        path = base / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _encoding(text: str) -> str:
    return text.replace("-", "_")


def _config(args, p: int = 1) -> AnsatzConfig:
    g = load_graph(args.graph)
    cfg = AnsatzConfig(g, args.k, _encoding(args.encoding), args.mixer, p, args.backend)
    if cfg.resolved_backend() != "restricted":
        check_size(cfg.num_qubits, args.max_qubits)
    return cfg


# ----------------------------------------------------------------- commands


def cmd_gen_graph(args) -> int:
    if args.kind == "er":
        g = generate_erdos_renyi(args.n, args.p, args.seed)
    else:
        g = generate_barabasi_albert(args.n, args.m, args.seed, args.weight_low, args.weight_high)
    path = _out_path(args.out, f"{args.kind}_n{args.n}_seed{args.seed}.json")
    save_graph(g, path)
    print(f"wrote {path}")
    print(f"|V|={g.num_vertices} |E|={g.num_edges} total_weight={fmt(g.total_weight)}")
    return EXIT_OK


def cmd_brute_force(args) -> int:
    g = load_graph(args.graph)
    opt, witnesses = brute_force_max_kcut(g, args.k)
    if args.json:
        print(json.dumps({"optimum": opt, "witnesses": [list(w) for w in witnesses[:args.show]],
                          "num_witnesses": len(witnesses)}))
    else:
        print(f"optimum {fmt(opt)}")
        print(f"witnesses found {len(witnesses)} (vertex 0 fixed to color 0)")
        for w in witnesses[:args.show]:
            print(" ".join(map(str, w)))
    return EXIT_OK


def cmd_validate(args) -> int:
    results = run_suites(args.scope)
    width = max(len(r.name) for r in results)
    first_fail = None
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.suite:<11} {r.name:<{width}}  {status}  max_dev={r.deviation:.3e}")
        if not r.passed and first_fail is None:
            first_fail = r
    if first_fail is not None:
        print(f"first failure: {first_fail.suite} {first_fail.name}: "
              f"deviation {first_fail.deviation:.12g} {first_fail.detail}", file=sys.stderr)
        return EXIT_FAIL
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def cmd_landscape(args) -> int:
    cfg = _config(args)
    gammas, betas = grid_axes(cfg.mixer, args.resolution,
                              tuple(args.gamma_range) if args.gamma_range else None,
                              tuple(args.beta_range) if args.beta_range else None)
    grid = landscape(cfg, gammas, betas, workers=args.threads)
    path = _out_path(args.out, f"landscape_k{args.k}_{cfg.encoding}_{cfg.mixer}.csv")
    path.write_text(landscape_csv(gammas, betas, grid))
    i, j = np.unravel_index(int(np.argmax(grid)), grid.shape)
    print(f"wrote {path} ({grid.size} rows)")
    print(f"max alpha {fmt(grid[i, j])} at gamma={fmt(gammas[i])} beta={fmt(betas[j])}")
    return EXIT_OK


def cmd_optimize(args) -> int:
    cfg = _config(args, args.p_max)
    strategy = Strategy(grid=args.grid, workers=args.threads, maxiter=args.maxiter)
    records = optimize(cfg, strategy, seed=args.seed, p_max=args.p_max)
    if args.shots:
        from .qaoa import Simulator

        sim = Simulator(cfg)
        for r in records:
            e, a = sim.evaluate(r.gammas, r.betas, shots=args.shots, seed=args.seed)
            r.extra["sampled"] = {"shots": args.shots, "expectation": e, "alpha": a}
    path = _out_path(args.out, f"optimize_k{args.k}_{cfg.encoding}_{cfg.mixer}.json")
    path.write_text(json.dumps([json.loads(r.to_json()) for r in records], indent=2) + "\n")
    print(f"wrote {path}")
    for r in records:
        print(f"p={len(r.gammas)} alpha={fmt(r.alpha)} expectation={fmt(r.expectation)}")
    return EXIT_OK


def cmd_resources(args) -> int:
    table = load_cx_table(args.cx_table) if args.cx_table else DEFAULT_CX_TABLE
    rep = resource_report(args.k, _encoding(args.encoding), args.mixer,
                          args.vertices, args.edges, table)
    data = rep.to_dict()
    if args.prior_work and rep.encoding != "subspace":
        variant = "less_than" if rep.encoding == "full_lt" else "balanced"
        data["prior_work"] = prior_work_row(args.k, variant)
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"separator: {format_census(rep.separator_census)} per edge "
          f"({rep.separator_cx} CX each)")
    scope = "per vertex" if rep.mixer_per_vertex else "per layer"
    print(f"mixer: {format_census(rep.mixer_census) or 'no gates'} {scope} ({rep.mixer_cx} CX)")
    print(f"initial state: {format_census(rep.prep_census) or 'no gates'} per vertex "
          f"({rep.prep_cx} CX)")
    print(f"CX per layer: {rep.formula()}")
    if rep.total() is not None:
        print(f"total CX for |V|={rep.num_vertices}, |E|={rep.num_edges}: {rep.total()}")
    if "prior_work" in data:
        print(f"prior work: {data['prior_work']} per edge")
    return EXIT_OK


# ------------------------------------------------------------------ parser


def _add_ansatz_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="graph file (JSON or edge list)")
    p.add_argument("--k", type=int, required=True, help="number of colors")
    p.add_argument("--encoding", choices=["full-lt", "full-bal", "subspace"], required=True)
    p.add_argument("--mixer", choices=["x", "lx", "grover", "grover-box"], required=True)
    p.add_argument("--backend", choices=["auto", "full", "restricted", "circuit"], default="auto")
    p.add_argument("--max-qubits", type=int, default=DEFAULT_MAX_QUBITS)
    p.add_argument("--threads", type=int, default=1, help="worker processes for grid scans")
    p.add_argument("--out", help="output file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxkcut", description="MAX k-CUT with QAOA")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-graph", help="generate a seeded random graph")
    p.add_argument("kind", choices=["er", "ba"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="edge probability (er)")
    p.add_argument("--m", type=int, default=2, help="edges per new vertex (ba)")
    p.add_argument("--weight-low", type=float, default=0.5, help="ba weight range")
    p.add_argument("--weight-high", type=float, default=1.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_graph)

    p = sub.add_parser("brute-force", help="exact optimum by enumeration")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--show", type=int, default=5, help="witnesses to print")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_brute_force)

    p = sub.add_parser("validate", help="compare circuits against their oracles")
    p.add_argument("scope", choices=["separators", "mixers", "preps", "all"], nargs="?",
                   default="all")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("landscape", help="depth-one alpha grid as CSV")
    _add_ansatz_args(p)
    p.add_argument("--resolution", type=int, default=32)
    p.add_argument("--gamma-range", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--beta-range", type=float, nargs=2, metavar=("LO", "HI"))
    p.set_defaults(func=cmd_landscape)

    p = sub.add_parser("optimize", help="grid + Nelder-Mead with interpolation over depth")
    _add_ansatz_args(p)
    p.add_argument("--p-max", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", type=int, default=32)
    p.add_argument("--maxiter", type=int, default=500)
    p.add_argument("--shots", type=int, help="also report a sampled estimate")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("resources", help="per-layer gate census and CX cost")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--encoding", choices=["full-lt", "full-bal", "subspace"], required=True)
    p.add_argument("--mixer", choices=["x", "lx", "grover", "grover-box"], required=True)
    p.add_argument("--vertices", type=int)
    p.add_argument("--edges", type=int)
    p.add_argument("--cx-table", help="JSON map from gate class to CX count")
    p.add_argument("--prior-work", action="store_true", help="add the earlier construction's row")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_resources)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MaxKCutError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
