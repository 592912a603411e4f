import csv
from pathlib import Path

import pytest


def write(path: Path, header, rows):
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


@pytest.fixture
def csv_dir(tmp_path):
    """A small synthetic table set matching the documented schemas."""
    d = tmp_path / "csv"
    d.mkdir()

    write(d / "generator_diagnostics.csv",
          ["n", "ordering", "mean_adjacent_dh", "max_adjacent_dh", "fraction_dh1", "search_nodes"],
          [[n, "strict", 1.0, 1, 1.0, 100] for n in (5, 6, 7, 8)]
          + [[n, "v2", 1.5, 3, 0.7, ""] for n in (5, 6, 7, 8)])

    drivers = ["full_hybrid", "sector_path", "sector_tf", "sector_only",
               "tf_only", "path_tf", "path_only"]
    write(d / "ablation.csv",
          ["driver", "alpha", "epsilon", "w", "fidelity", "energy_residual"],
          [[name, 0.5, 0.15, 8, 0.98 - 0.1 * i, 0.01 * (i + 1)] for i, name in enumerate(drivers)])

    targets = ["original_window_barrier", "v2_window_barrier", "sector_well_r1",
               "original_mix_sector_path", "v2_mix_sector_path"]
    write(d / "fine_scan.csv",
          ["target", "tf", "sector", "orig_path", "v2_path",
           "best_fidelity", "best_source", "best_alpha", "best_epsilon",
           "cmp_best_fidelity", "cmp_best_source", "cmp_best_alpha", "cmp_best_epsilon"],
          [[t, 0.89, 0.95, 0.17, 0.76, 0.97, "original", 0.3, 0.1, 0.97, "original", 0.3, 0.1]
           for t in targets])

    grid_rows = []
    for a in (0.1, 0.2, 0.3):
        for e in (0.05, 0.1):
            grid_rows.append(["original_window_barrier", "original", a, e, 4,
                              "hybrid", 0.9 + a / 10 + e / 100, 0.01])
    grid_rows.append(["original_window_barrier", "original", 0.0, 1.0, 4, "tf", 0.89, 0.014])
    write(d / "fine_scan_grid.csv",
          ["target", "path_source", "alpha", "epsilon", "w", "kind", "fidelity", "energy_residual"],
          grid_rows)

    control_rows, sample_rows = [], []
    for mode in ("matched", "strict_target"):
        for src in ("strict", "gray", "binary", "weight_block"):
            control_rows.append([src, mode, 1, "", 0.9, "", 0.01, ""])
        for kind in ("random_perm", "sector_preserving_random"):
            control_rows.append([kind, mode, 8, 7, 0.5, 0.2, 0.05, 0.01])
            for i in range(8):
                sample_rows.append([kind, mode, i, 1000 + i, 0.4 + 0.02 * i, 0.05])
    write(d / "controls.csv",
          ["source", "mode", "samples", "base_seed",
           "fidelity_mean", "fidelity_std", "residual_mean", "residual_std"],
          control_rows)
    write(d / "controls_samples.csv",
          ["source", "mode", "sample_index", "seed", "fidelity", "energy_residual"],
          sample_rows)

    write(d / "convergence.csv",
          ["driver", "slices", "fidelity", "energy_residual"],
          [[name, m, 0.9, 0.01] for name in drivers[:3] for m in (35, 70, 140)])

    write(d / "time_sweep.csv",
          ["driver", "T", "slices", "fidelity", "energy_residual"],
          [[name, t, int(t * 35 / 80), 0.5 + 0.1 * i, 0.02]
           for i, name in enumerate(drivers[:4]) for t in (20, 40, 80, 160)])

    write(d / "finite_size.csv",
          ["driver", "n", "fidelity", "energy_residual"],
          [[name, n, 0.9 - 0.05 * i, 0.01] for i, name in enumerate(drivers[:4]) for n in (5, 6, 7, 8)])

    gap_drivers = ["tf_only", "sector_only", "orig_window4_only", "orig_hybrid_w4", "orig_hybrid_w8"]
    write(d / "gaps.csv",
          ["driver", "s_at_min", "min_gap", "s_at_min_excited_spacing", "min_excited_spacing"],
          [[name, 0.0, 0.01 * (i + 1), 0.0, 0.02] for i, name in enumerate(gap_drivers)])
    write(d / "gap_grid.csv",
          ["driver", "s", "e0", "e1", "e2", "gap", "excited_spacing"],
          [[name, s, 0.0, 0.05, 0.1, 0.05, 0.05] for name in gap_drivers for s in (0.0, 0.5, 1.0)])

    families = ["sector_dense_r1", "same_sector_swap", "path_orig_w4", "path_v2_w4",
                "mix_sector_orig_path", "mix_sector_v2_path", "local_hopping_1d",
                "local_pair_creation_1d"]
    write(d / "banding.csv",
          ["family", "ordering", "mean_band", "off_band_4"],
          [[f, o, 10.0 + i, 0.1] for i, f in enumerate(families)
           for o in ("strict", "v2", "binary", "gray", "weight_block")])
    write(d / "banding_random.csv",
          ["family", "samples", "base_seed", "mean_band_mean", "mean_band_std"],
          [[f, 50, 2024, 85.7, 1.0] for f in families])

    write(d / "sensor.csv",
          ["driver", "alpha", "epsilon", "w", "fidelity", "energy_residual"],
          [["tf_only", "", "", 12, 0.66, 0.01], ["sector_only", 0.0, 0.0, 12, 0.76, 0.01],
           ["path_only", 1.0, 0.0, 12, 0.26, 0.05], ["sector_path", 0.5, 0.0, 12, 0.75, 0.007],
           ["hybrid_a", 0.3, 0.1, 12, 0.80, 0.007], ["hybrid_b", 0.5, 0.2, 12, 0.83, 0.005]])

    write(d / "diagonal_qa.csv",
          ["family", "encoding", "mean_success", "success_p25", "success_p50", "success_p75"],
          [["index_well", e, 0.02, 0.02, 0.02, 0.02] for e in ("binary", "gray", "strict", "v2")])

    return d
