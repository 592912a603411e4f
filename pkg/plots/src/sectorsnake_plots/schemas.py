"""CSV loading with named schema errors.

The renderers never recompute physics: they read the documented CSV columns
and draw. Anything unexpected (missing file, missing column, no data rows)
raises SchemaError naming the problem.
"""

from __future__ import annotations

import csv
from pathlib import Path


class SchemaError(ValueError):
    """A required CSV is missing, empty, or lacks a documented column."""


REQUIRED_COLUMNS = {
    "generator_diagnostics.csv": [
        "n", "ordering", "mean_adjacent_dh", "max_adjacent_dh", "fraction_dh1"],
    "ablation.csv": ["driver", "alpha", "epsilon", "w", "fidelity", "energy_residual"],
    "fine_scan.csv": [
        "target", "tf", "sector", "orig_path", "v2_path",
        "best_fidelity", "best_source", "best_alpha", "best_epsilon"],
    "fine_scan_grid.csv": [
        "target", "path_source", "alpha", "epsilon", "w", "kind",
        "fidelity", "energy_residual"],
    "controls.csv": [
        "source", "mode", "samples", "base_seed",
        "fidelity_mean", "fidelity_std", "residual_mean", "residual_std"],
    "controls_samples.csv": [
        "source", "mode", "sample_index", "seed", "fidelity", "energy_residual"],
    "convergence.csv": ["driver", "slices", "fidelity", "energy_residual"],
    "time_sweep.csv": ["driver", "T", "slices", "fidelity", "energy_residual"],
    "finite_size.csv": ["driver", "n", "fidelity", "energy_residual"],
    "gaps.csv": [
        "driver", "s_at_min", "min_gap",
        "s_at_min_excited_spacing", "min_excited_spacing"],
    "gap_grid.csv": ["driver", "s", "e0", "e1", "e2", "gap", "excited_spacing"],
    "banding.csv": ["family", "ordering", "mean_band", "off_band_4"],
    "banding_random.csv": [
        "family", "samples", "base_seed", "mean_band_mean", "mean_band_std"],
    "sensor.csv": ["driver", "alpha", "epsilon", "w", "fidelity", "energy_residual"],
    "diagonal_qa.csv": [
        "family", "encoding", "mean_success",
        "success_p25", "success_p50", "success_p75"],
}


def load_table(csv_dir, name: str) -> list[dict[str, str]]:
    path = Path(csv_dir) / name
    if name not in REQUIRED_COLUMNS:
        raise SchemaError(f"unknown table {name!r}")
    if not path.exists():
        raise SchemaError(f"missing CSV: {path}")
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise SchemaError(f"{name}: no header row")
        missing = [c for c in REQUIRED_COLUMNS[name] if c not in reader.fieldnames]
        if missing:
            raise SchemaError(f"{name}: missing columns {missing}")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{name}: no data rows")
    return rows


def fnum(row: dict[str, str], key: str) -> float:
    value = row.get(key, "")
    if value == "":
        raise SchemaError(f"empty numeric field {key!r}")
    return float(value)
