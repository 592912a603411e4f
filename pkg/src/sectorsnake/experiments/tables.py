"""Table generators: every run emits one or two CSVs and returns its rows."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..dynamics import anneal, gap_scan
from ..hamiltonian import (
    BarrierTargetConfig,
    SensorModelConfig,
    barrier_target,
    diagonal_cost,
    driver_parts,
    mix_driver,
    sensor_target,
    transverse_field,
)
from ..linalg import eigh
from ..ordering import standard_ordering
from . import context
from .context import (
    DEFAULT_N,
    DEFAULT_SLICES,
    DEFAULT_T,
    DRIVER_ROWS,
    FIXED_CONTROL_ALPHA,
    FIXED_CONTROL_EPSILON,
    FIXED_CONTROL_W,
    SCAN_TARGETS,
    SCAN_W,
    SENSOR_DRIVER_W,
    ScanGrid,
    member_seeds,
    schedule,
)
from .csv_io import write_csv
from .pool import run_cells
from .reference import COMPARISON_EPSILON_MAX


def _anneal_cell(driver, target, T=DEFAULT_T, slices=DEFAULT_SLICES):
    out = anneal(driver, target, schedule(T, slices))
    return out


def run_ablation(out_dir, n: int = DEFAULT_N, T: float = DEFAULT_T, slices: int = DEFAULT_SLICES) -> dict:
    """Seven driver rows on the centered strict-window barrier target."""
    orig = context.strict_ordering(n)
    target = context.centered_barrier(orig)
    rows = []
    for name, (alpha, epsilon) in DRIVER_ROWS.items():
        out = _anneal_cell(context.driver(orig, FIXED_CONTROL_W, alpha, epsilon), target, T, slices)
        rows.append(
            {
                "driver": name,
                "alpha": alpha,
                "epsilon": epsilon,
                "w": FIXED_CONTROL_W,
                "fidelity": out.fidelity,
                "energy_residual": out.energy_residual,
            }
        )
    h = write_csv(
        Path(out_dir) / "ablation.csv",
        ["driver", "alpha", "epsilon", "w", "fidelity", "energy_residual"],
        rows,
    )
    return {"rows": rows, "hashes": {"ablation.csv": h}}


def _fine_cell(cell):
    target_name, source, alpha, epsilon, w = cell
    target = context.scan_target(target_name)
    ordering = context.ordering_by_name(source)
    out = _anneal_cell(context.driver(ordering, w, alpha, epsilon), target)
    return out.fidelity, out.energy_residual


def run_fine_scan(out_dir, grid: ScanGrid | None = None, jobs: int = 1, targets=SCAN_TARGETS) -> dict:
    """Baselines plus the (source, alpha, epsilon) grid for each target class."""
    grid = grid or ScanGrid()
    # warm the caches before any fork so workers inherit them
    for name in targets:
        context.scan_target(name)
    for source in grid.path_sources:
        context.parts_for(context.ordering_by_name(source), grid.w_driver)

    grid_rows = []
    summary_rows = []
    baselines = (
        ("tf", "original", 0.0, 1.0),
        ("sector", "original", 0.0, 0.0),
        ("orig_path", "original", 1.0, 0.0),
        ("v2_path", "v2", 1.0, 0.0),
    )
    for target_name in targets:
        base_vals = {}
        for label, source, alpha, epsilon in baselines:
            f, r = _fine_cell((target_name, source, alpha, epsilon, grid.w_driver))
            base_vals[label] = f
            grid_rows.append(
                {
                    "target": target_name,
                    "path_source": source,
                    "alpha": alpha,
                    "epsilon": epsilon,
                    "w": grid.w_driver,
                    "kind": label,
                    "fidelity": f,
                    "energy_residual": r,
                }
            )
        cells = [(target_name, src, a, e, grid.w_driver) for src, a, e in grid.cells()]
        results = run_cells(_fine_cell, cells, jobs=jobs)
        scored = []
        for (tname, src, a, e, w), (f, r) in zip(cells, results):
            grid_rows.append(
                {
                    "target": tname,
                    "path_source": src,
                    "alpha": a,
                    "epsilon": e,
                    "w": w,
                    "kind": "hybrid",
                    "fidelity": f,
                    "energy_residual": r,
                }
            )
            scored.append((src, a, e, f))

        def best_of(items):
            # ties break toward smaller (alpha, epsilon), original source first
            return min(items, key=lambda c: (-c[3], c[1], c[2], c[0] != "original"))

        b_src, b_a, b_e, b_f = best_of(scored)
        # the reference table's argmax points all sit at small epsilon; keep
        # the best over that slice as a separate, comparable column
        comparable = [c for c in scored if c[2] <= COMPARISON_EPSILON_MAX + 1e-12]
        c_src, c_a, c_e, c_f = best_of(comparable) if comparable else (b_src, b_a, b_e, b_f)
        summary_rows.append(
            {
                "target": target_name,
                "tf": base_vals["tf"],
                "sector": base_vals["sector"],
                "orig_path": base_vals["orig_path"],
                "v2_path": base_vals["v2_path"],
                "best_fidelity": b_f,
                "best_source": b_src,
                "best_alpha": b_a,
                "best_epsilon": b_e,
                "cmp_best_fidelity": c_f,
                "cmp_best_source": c_src,
                "cmp_best_alpha": c_a,
                "cmp_best_epsilon": c_e,
            }
        )
    out_dir = Path(out_dir)
    h1 = write_csv(
        out_dir / "fine_scan.csv",
        ["target", "tf", "sector", "orig_path", "v2_path",
         "best_fidelity", "best_source", "best_alpha", "best_epsilon",
         "cmp_best_fidelity", "cmp_best_source", "cmp_best_alpha", "cmp_best_epsilon"],
        summary_rows,
    )
    h2 = write_csv(
        out_dir / "fine_scan_grid.csv",
        ["target", "path_source", "alpha", "epsilon", "w", "kind", "fidelity", "energy_residual"],
        grid_rows,
    )
    return {"rows": summary_rows, "grid_rows": grid_rows,
            "hashes": {"fine_scan.csv": h1, "fine_scan_grid.csv": h2}}


CONTROL_SOURCES = ("strict", "gray", "binary", "weight_block")
CONTROL_ENSEMBLES = ("random_perm", "sector_preserving_random")


def _control_cell(cell):
    """One (source ordering, mode) run at the fixed control parameters.

    Ensemble members are built without the long-lived caches: each seeded
    ordering is used exactly once.
    """
    kind, seed, mode = cell
    n = DEFAULT_N
    if kind == "strict":
        source = context.strict_ordering(n)
    elif seed is None:
        source = context.ordering_by_name(kind, n)
    else:
        source = standard_ordering(kind, n, seed)
    if mode == "matched":
        if seed is None:
            target = context.centered_barrier(source)
        else:
            target = barrier_target(
                BarrierTargetConfig(
                    ordering=source,
                    w_T=context.CALIBRATED_W_T,
                    p_star_frac=0.5,
                    h=context.CALIBRATED_H,
                )
            )
    else:
        target = context.centered_barrier(context.strict_ordering(n))
    if seed is None:
        driver = context.driver(source, FIXED_CONTROL_W, FIXED_CONTROL_ALPHA, FIXED_CONTROL_EPSILON)
    else:
        driver = mix_driver(
            driver_parts(source, FIXED_CONTROL_W), FIXED_CONTROL_ALPHA, FIXED_CONTROL_EPSILON
        )
    out = _anneal_cell(driver, target)
    return out.fidelity, out.energy_residual


def run_controls(out_dir, samples: int = 64, base_seed: int = 777, jobs: int = 1) -> dict:
    """Matched and strict-target path-order controls, single and ensemble."""
    n = DEFAULT_N
    strict = context.strict_ordering(n)
    strict_target = context.centered_barrier(strict)
    rows = []
    sample_rows = []

    # driver-only baselines (no path source): strict-target mode only
    for name, (alpha, epsilon) in (("tf_only", (0.0, 1.0)), ("sector_only", (0.0, 0.0))):
        out = _anneal_cell(context.driver(strict, FIXED_CONTROL_W, alpha, epsilon), strict_target)
        rows.append(
            {
                "source": name, "mode": "strict_target", "samples": 1, "base_seed": None,
                "fidelity_mean": out.fidelity, "fidelity_std": None,
                "residual_mean": out.energy_residual, "residual_std": None,
            }
        )

    for kind in CONTROL_SOURCES:
        for mode in ("matched", "strict_target"):
            f, r = _control_cell((kind, None, mode))
            rows.append(
                {
                    "source": kind, "mode": mode, "samples": 1, "base_seed": None,
                    "fidelity_mean": f, "fidelity_std": None,
                    "residual_mean": r, "residual_std": None,
                }
            )

    seeds = member_seeds(base_seed, samples)
    for kind in CONTROL_ENSEMBLES:
        for mode in ("matched", "strict_target"):
            cells = [(kind, seed, mode) for seed in seeds]
            results = run_cells(_control_cell, cells, jobs=jobs)
            fids = np.array([f for f, _ in results])
            ress = np.array([r for _, r in results])
            rows.append(
                {
                    "source": kind, "mode": mode, "samples": samples, "base_seed": base_seed,
                    "fidelity_mean": float(fids.mean()),
                    "fidelity_std": float(fids.std(ddof=1)),
                    "residual_mean": float(ress.mean()),
                    "residual_std": float(ress.std(ddof=1)),
                }
            )
            for i, (seed, (f, r)) in enumerate(zip(seeds, results)):
                sample_rows.append(
                    {
                        "source": kind, "mode": mode, "sample_index": i, "seed": seed,
                        "fidelity": f, "energy_residual": r,
                    }
                )

    out_dir = Path(out_dir)
    h1 = write_csv(
        out_dir / "controls.csv",
        ["source", "mode", "samples", "base_seed",
         "fidelity_mean", "fidelity_std", "residual_mean", "residual_std"],
        rows,
    )
    h2 = write_csv(
        out_dir / "controls_samples.csv",
        ["source", "mode", "sample_index", "seed", "fidelity", "energy_residual"],
        sample_rows,
    )
    return {"rows": rows, "sample_rows": sample_rows,
            "hashes": {"controls.csv": h1, "controls_samples.csv": h2}}


QA_ENCODINGS = ("binary", "gray", "strict", "v2")
QA_FAMILIES = ("index_well", "sector_well", "mix", "barrier_path")
QA_FRACTIONS = (0.25, 0.50, 0.75)


def run_diagonal_qa(out_dir, n: int = DEFAULT_N, T: float = DEFAULT_T, slices: int = DEFAULT_SLICES) -> dict:
    """Plain transverse-field annealing of the diagonal cost families."""
    size = 1 << n
    driver = transverse_field(n)
    rows = []
    for family in QA_FAMILIES:
        for enc_name in QA_ENCODINGS:
            encoding = context.ordering_by_name(enc_name, n)
            per_frac = {}
            for frac in QA_FRACTIONS:
                t_star = int(np.floor(frac * (size - 1) + 0.5))
                target = np.diag(diagonal_cost(family, encoding, n, t_star))
                out = anneal(driver, target, schedule(T, slices))
                norm = float(np.sum(np.abs(out.final_state) ** 2))
                if abs(norm - 1.0) > 1e-9:
                    raise AssertionError(f"probabilities sum to {norm}")
                per_frac[frac] = float(np.abs(out.final_state[encoding.states[t_star]]) ** 2)
            rows.append(
                {
                    "family": family,
                    "encoding": enc_name,
                    "mean_success": float(np.mean(list(per_frac.values()))),
                    "success_p25": per_frac[0.25],
                    "success_p50": per_frac[0.50],
                    "success_p75": per_frac[0.75],
                }
            )
    h = write_csv(
        Path(out_dir) / "diagonal_qa.csv",
        ["family", "encoding", "mean_success", "success_p25", "success_p50", "success_p75"],
        rows,
    )
    return {"rows": rows, "hashes": {"diagonal_qa.csv": h}}


CONVERGENCE_DRIVERS = ("tf_only", "sector_only", "sector_path", "full_hybrid", "path_only")


def run_convergence(out_dir, slice_counts=(35, 70, 140)) -> dict:
    orig = context.strict_ordering()
    target = context.centered_barrier(orig)
    rows = []
    for name in CONVERGENCE_DRIVERS:
        alpha, epsilon = DRIVER_ROWS[name]
        driver = context.driver(orig, FIXED_CONTROL_W, alpha, epsilon)
        for m in slice_counts:
            out = _anneal_cell(driver, target, DEFAULT_T, m)
            rows.append(
                {
                    "driver": name, "slices": m,
                    "fidelity": out.fidelity, "energy_residual": out.energy_residual,
                }
            )
    h = write_csv(
        Path(out_dir) / "convergence.csv",
        ["driver", "slices", "fidelity", "energy_residual"],
        rows,
    )
    return {"rows": rows, "hashes": {"convergence.csv": h}}


def slices_for_time(T: float) -> int:
    """Keep the slice width of the T=80, 35-slice benchmark."""
    return max(1, round(T * DEFAULT_SLICES / DEFAULT_T))


def run_time_sweep(out_dir, times=(20.0, 40.0, 80.0, 160.0)) -> dict:
    orig = context.strict_ordering()
    target = context.centered_barrier(orig)
    rows = []
    for name, (alpha, epsilon) in DRIVER_ROWS.items():
        driver = context.driver(orig, FIXED_CONTROL_W, alpha, epsilon)
        for T in times:
            m = slices_for_time(T)
            out = _anneal_cell(driver, target, T, m)
            rows.append(
                {
                    "driver": name, "T": T, "slices": m,
                    "fidelity": out.fidelity, "energy_residual": out.energy_residual,
                }
            )
    h = write_csv(
        Path(out_dir) / "time_sweep.csv",
        ["driver", "T", "slices", "fidelity", "energy_residual"],
        rows,
    )
    return {"rows": rows, "hashes": {"time_sweep.csv": h}}


FINITE_SIZE_DRIVERS = ("tf_only", "sector_only", "full_hybrid", "path_only")


def run_finite_size(out_dir, ns=(5, 6, 7, 8)) -> dict:
    rows = []
    for n in ns:
        orig = context.strict_ordering(n)
        target = context.centered_barrier(orig)
        for name in FINITE_SIZE_DRIVERS:
            alpha, epsilon = DRIVER_ROWS[name]
            out = _anneal_cell(context.driver(orig, FIXED_CONTROL_W, alpha, epsilon), target)
            rows.append(
                {
                    "driver": name, "n": n,
                    "fidelity": out.fidelity, "energy_residual": out.energy_residual,
                }
            )
    h = write_csv(
        Path(out_dir) / "finite_size.csv",
        ["driver", "n", "fidelity", "energy_residual"],
        rows,
    )
    return {"rows": rows, "hashes": {"finite_size.csv": h}}


GAP_DRIVERS = {
    "tf_only": (FIXED_CONTROL_W, 0.0, 1.0),
    "sector_only": (FIXED_CONTROL_W, 0.0, 0.0),
    "orig_window4_only": (4, 1.0, 0.0),
    "orig_hybrid_w4": (4, 0.30, 0.10),
    "orig_hybrid_w8": (8, 0.25, 0.10),
}


def run_gap_table(out_dir, grid_points: int = 15) -> dict:
    """Low spectrum of H(s) on the grid for the selected drivers.

    gaps.csv reports the minimum E1-E0 gap (the adiabatic gap) and, as a
    separate pair of columns, the minimum E2-E1 spacing; the published
    window4-involving rows coincide with the latter at s=0.
    """
    orig = context.strict_ordering()
    target = context.centered_barrier(orig).matrix
    grid = np.linspace(0.0, 1.0, grid_points)
    grid_rows = []
    summary_rows = []
    for name, (w, alpha, epsilon) in GAP_DRIVERS.items():
        hd = context.driver(orig, w, alpha, epsilon).matrix
        e10 = np.empty(grid_points)
        e21 = np.empty(grid_points)
        for i, s in enumerate(grid):
            vals = eigh((1.0 - s) * hd + s * target).eigenvalues
            e10[i] = vals[1] - vals[0]
            e21[i] = vals[2] - vals[1]
            grid_rows.append(
                {
                    "driver": name, "s": float(s),
                    "e0": float(vals[0]), "e1": float(vals[1]), "e2": float(vals[2]),
                    "gap": float(e10[i]), "excited_spacing": float(e21[i]),
                }
            )
        i1 = int(np.argmin(e10))
        i2 = int(np.argmin(e21))
        summary_rows.append(
            {
                "driver": name,
                "s_at_min": float(grid[i1]),
                "min_gap": float(e10[i1]),
                "s_at_min_excited_spacing": float(grid[i2]),
                "min_excited_spacing": float(e21[i2]),
            }
        )
    out_dir = Path(out_dir)
    h1 = write_csv(
        out_dir / "gaps.csv",
        ["driver", "s_at_min", "min_gap", "s_at_min_excited_spacing", "min_excited_spacing"],
        summary_rows,
    )
    h2 = write_csv(
        out_dir / "gap_grid.csv",
        ["driver", "s", "e0", "e1", "e2", "gap", "excited_spacing"],
        grid_rows,
    )
    return {"rows": summary_rows, "grid_rows": grid_rows,
            "hashes": {"gaps.csv": h1, "gap_grid.csv": h2}}


SENSOR_DRIVERS = {
    "tf_only": (0.0, 1.0),
    "sector_only": (0.0, 0.0),
    "path_only": (1.0, 0.0),
    "sector_path": (0.50, 0.0),
    "hybrid_a": (0.30, 0.10),
    "hybrid_b": (0.50, 0.20),
}


def run_sensor_benchmark(out_dir) -> dict:
    target = context.sensor_benchmark_target()
    orig = context.strict_ordering()
    rows = []
    for name, (alpha, epsilon) in SENSOR_DRIVERS.items():
        out = _anneal_cell(context.driver(orig, SENSOR_DRIVER_W, alpha, epsilon), target)
        rows.append(
            {
                "driver": name, "alpha": alpha, "epsilon": epsilon, "w": SENSOR_DRIVER_W,
                "fidelity": out.fidelity, "energy_residual": out.energy_residual,
            }
        )
    h = write_csv(
        Path(out_dir) / "sensor.csv",
        ["driver", "alpha", "epsilon", "w", "fidelity", "energy_residual"],
        rows,
    )
    return {"rows": rows, "hashes": {"sensor.csv": h}}


def run_generator_diagnostics(out_dir, ns=(5, 6, 7, 8)) -> dict:
    """Adjacent-distance diagnostics for the strict and v2 orderings."""
    from ..ordering import diagnostics

    rows = []
    for n in ns:
        for kind in ("strict", "v2"):
            ordering = context.strict_ordering(n) if kind == "strict" else context.v2_ordering(n)
            d = diagnostics(ordering)
            rows.append(
                {
                    "n": n, "ordering": kind,
                    "mean_adjacent_dh": d.mean_adjacent_dh,
                    "max_adjacent_dh": d.max_adjacent_dh,
                    "fraction_dh1": d.fraction_dh1,
                    "search_nodes": ordering.search_nodes,
                }
            )
    h = write_csv(
        Path(out_dir) / "generator_diagnostics.csv",
        ["n", "ordering", "mean_adjacent_dh", "max_adjacent_dh", "fraction_dh1", "search_nodes"],
        rows,
    )
    return {"rows": rows, "hashes": {"generator_diagnostics.csv": h}}
