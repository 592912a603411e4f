"""Command-line interface: generation, validation, single runs, and tables."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import __version__
from .dynamics import anneal, gap_scan
from .graphs import hypercube_graph, laplacian, path_window_graph, sector_graph
from .hamiltonian import BarrierTargetConfig, barrier_target, mixture_target
from .ordering import (
    AttemptLog,
    CertificateError,
    GeneratorBudget,
    Ordering,
    diagnostics,
    load_certificate,
    save_certificate,
    standard_ordering,
    strict_generate,
    v2_generate,
    validate,
    validation_mode_for_kind,
)
from .experiments import context
from .experiments.banding import run_banding
from .experiments.context import ScanGrid
from .experiments.reproduce import reproduce_all
from .experiments.tables import (
    run_ablation,
    run_controls,
    run_convergence,
    run_diagonal_qa,
    run_fine_scan,
    run_finite_size,
    run_gap_table,
    run_sensor_benchmark,
    run_time_sweep,
)

DEFAULT_OUT_ENV = "SECTORSNAKE_OUT"


def _out_dir(args) -> Path:
    out = args.out or os.environ.get(DEFAULT_OUT_ENV) or "out"
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _build_ordering(kind: str, n: int, seed, budget: GeneratorBudget):
    if kind == "strict":
        return strict_generate(n, budget)
    if kind == "v2":
        return v2_generate(n)
    return standard_ordering(kind, n, seed)


def cmd_generate(args) -> int:
    budget = GeneratorBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    result = _build_ordering(args.kind, args.n, args.seed, budget)
    out = _out_dir(args)
    if isinstance(result, AttemptLog):
        path = out / f"{args.kind}_n{args.n}_attempt.json"
        path.write_text(json.dumps(asdict(result), indent=1) + "\n")
        print(f"budget exhausted: attempt log written to {path}")
        print(f"  nodes={result.nodes} deepest_index={result.deepest_index} "
              f"elapsed={result.elapsed_seconds:.3f}s")
        return 0
    path = out / f"{args.kind}_n{args.n}.json"
    report = save_certificate(result, path)
    print(f"certificate written to {path}")
    print(f"  validation ({report.mode}): {'OK' if report.passed else 'FAILED'}")
    if result.search_nodes is not None:
        print(f"  search_nodes={result.search_nodes}")
    return 0 if report.passed else 1


def cmd_validate(args) -> int:
    try:
        ordering = load_certificate(args.certificate)
    except CertificateError as exc:
        print(f"certificate rejected: {exc}")
        return 1
    mode = args.mode or validation_mode_for_kind(ordering.kind)
    report = validate(ordering, mode)
    print(f"n={ordering.n} kind={ordering.kind} mode={mode}")
    for name, ok in report.checks.items():
        detail = "" if ok else f"  ({report.failures[name]})"
        print(f"  {name}: {'pass' if ok else 'FAIL'}{detail}")
    return 0 if report.passed else 1


def cmd_diagnose(args) -> int:
    result = _build_ordering(args.kind, args.n, args.seed, GeneratorBudget())
    if isinstance(result, AttemptLog):
        print("generation exhausted its budget; nothing to diagnose")
        return 1
    d = diagnostics(result)
    print(f"n={args.n} kind={args.kind}")
    print(f"  mean_adjacent_dh={d.mean_adjacent_dh:.3f}")
    print(f"  max_adjacent_dh={d.max_adjacent_dh}")
    print(f"  fraction_dh1={d.fraction_dh1:.3f}")
    return 0


def _anneal_target(args, ordering: Ordering):
    if args.target == "barrier":
        return barrier_target(
            BarrierTargetConfig(
                ordering=ordering, w_T=args.w_T, p_star_frac=args.p_star, h=args.h
            )
        )
    if args.target == "sector_well":
        return mixture_target("sector_well_r1", ordering, p_star_frac=args.p_star)
    if args.target == "mix":
        return mixture_target("mix_sector_path", ordering, w=args.w_T, p_star_frac=args.p_star)
    if args.target == "sensor":
        return context.sensor_benchmark_target()
    raise ValueError(f"unknown target {args.target!r}")


def cmd_anneal(args) -> int:
    ordering = context.ordering_by_name(args.path_source, args.n)
    target = _anneal_target(args, ordering)
    driver = context.driver(ordering, args.w, args.alpha, args.epsilon)
    from .dynamics import ScheduleConfig

    out = anneal(driver, target, ScheduleConfig(T=args.T, slices=args.slices))
    print(f"fidelity={out.fidelity:.4f}")
    print(f"energy_residual={out.energy_residual:.4f}")
    if out.degeneracy_flag:
        print("degenerate target ground space: fidelity is the ground-space weight")
    return 0


def cmd_scan(args) -> int:
    if args.grid:
        spec = json.loads(Path(args.grid).read_text())
    else:
        spec = json.loads(
            (Path(__file__).parent / "experiments" / "data" / "fine_scan_grid.json").read_text()
        )
    grid = ScanGrid(
        alphas=tuple(spec["alphas"]),
        epsilons=tuple(spec["epsilons"]),
        path_sources=tuple(spec["path_sources"]),
        w_driver=int(spec["w_driver"]),
    )
    result = run_fine_scan(_out_dir(args), grid=grid, jobs=args.jobs)
    for row in result["rows"]:
        print(f"{row['target']}: best {row['best_fidelity']:.4f} at "
              f"({row['best_source']}, {row['best_alpha']}, {row['best_epsilon']})")
    return 0


def _table_command(runner, args, **kwargs) -> int:
    result = runner(_out_dir(args), **kwargs)
    for name in result["hashes"]:
        print(f"wrote {name}")
    return 0


def cmd_reproduce_all(args) -> int:
    budget = GeneratorBudget(
        max_nodes=args.n9_max_nodes, max_seconds=args.n9_max_seconds
    )
    out = _out_dir(args)
    manifest = reproduce_all(
        out, samples=args.samples, base_seed=args.base_seed, jobs=args.jobs, n9_budget=budget
    )
    print(f"manifest: {out / 'manifest.json'}")
    failed = [g for g in manifest["gates"] if not g["passed"]]
    for g in manifest["gates"]:
        print(f"  [{'PASS' if g['passed'] else 'FAIL'}] {g['name']}: {g['detail']}")
    if failed:
        print(f"{len(failed)} gate(s) failed")
        return 1
    print("all gates passed")
    return 0


def cmd_graph_stats(args) -> int:
    if args.graph == "hypercube":
        g = hypercube_graph(args.n)
    elif args.graph == "sector":
        g = sector_graph(args.n)
    else:
        ordering = context.ordering_by_name(args.kind, args.n, args.seed)
        g = path_window_graph(ordering, args.w)
    lap = laplacian(g, normalize=False)
    print(f"graph={args.graph} n={args.n} vertices={g.num_vertices} edges={len(g.edges)}")
    print(f"lambda_max={lap.lambda_max:.6g} connected={g.is_connected()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sectorsnake",
        description="Sector/path hypercube orderings and graph-local annealing benchmarks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help=f"output directory (default ${DEFAULT_OUT_ENV} or ./out)")

    p = sub.add_parser("generate", help="generate an ordering and write its certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", required=True, choices=[
        "strict", "v2", "binary", "gray", "weight_block", "random_perm",
        "sector_preserving_random"])
    p.add_argument("--seed", type=int)
    p.add_argument("--max-nodes", type=int, help="search budget: candidate extensions")
    p.add_argument("--max-seconds", type=float, help="search budget: wall time")
    add_out(p)
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("validate", help="checksum and revalidate a certificate")
    p.add_argument("certificate")
    p.add_argument("--mode", choices=["strict", "skeleton_only", "bijection_only"])
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("diagnose", help="adjacent-distance diagnostics of an ordering")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=cmd_diagnose)

    p = sub.add_parser("anneal", help="single annealing run")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--w", type=int, default=8)
    p.add_argument("--T", type=float, default=80.0)
    p.add_argument("--slices", type=int, default=35)
    p.add_argument("--target", default="barrier",
                   choices=["barrier", "sector_well", "mix", "sensor"])
    p.add_argument("--w-T", dest="w_T", type=int, default=4, help="target window")
    p.add_argument("--h", type=float, default=0.35, help="barrier height")
    p.add_argument("--p-star", dest="p_star", type=float, default=0.5,
                   help="target position as a fraction of the path")
    p.add_argument("--path-source", default="original", choices=["original", "v2"])
    p.set_defaults(fn=cmd_anneal)

    p = sub.add_parser("scan", help="fine (alpha, epsilon) scan over all target classes")
    p.add_argument("--grid", help="JSON grid file (alphas, epsilons, path_sources, w_driver)")
    p.add_argument("--jobs", type=int, default=1)
    add_out(p)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("ablate", help="driver ablation table")
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(run_ablation, a))

    p = sub.add_parser("controls", help="path-order control table with ensembles")
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--base-seed", type=int, default=777)
    p.add_argument("--jobs", type=int, default=1)
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(
        run_controls, a, samples=a.samples, base_seed=a.base_seed, jobs=a.jobs))

    p = sub.add_parser("diagonal-qa", help="plain transverse-field diagonal-cost table")
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(run_diagonal_qa, a))

    p = sub.add_parser("band", help="MeanBand/OffBand banding table")
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(run_banding, a))

    p = sub.add_parser("sensor", help="sensor-placement benchmark table")
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(run_sensor_benchmark, a))

    p = sub.add_parser("gaps", help="grid gap scan table")
    p.add_argument("--grid-points", type=int, default=15)
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(run_gap_table, a, grid_points=a.grid_points))

    p = sub.add_parser("convergence", help="midpoint-slice convergence table")
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(run_convergence, a))

    p = sub.add_parser("time-sweep", help="anneal-time dependence table")
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(run_time_sweep, a))

    p = sub.add_parser("finite-size", help="finite-size sweep over n")
    add_out(p)
    p.set_defaults(fn=lambda a: _table_command(run_finite_size, a))

    p = sub.add_parser("graph-stats", help="edge counts and spectral norm of a driver graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--graph", required=True, choices=["hypercube", "sector", "path_window"])
    p.add_argument("--w", type=int, default=4)
    p.add_argument("--kind", default="original")
    p.add_argument("--seed", type=int)
    p.set_defaults(fn=cmd_graph_stats)

    p = sub.add_parser("reproduce-all", help="regenerate every table, certificate, and the manifest")
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--base-seed", type=int, default=777)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--n9-max-nodes", type=int)
    p.add_argument("--n9-max-seconds", type=float, default=5.0)
    add_out(p)
    p.set_defaults(fn=cmd_reproduce_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
