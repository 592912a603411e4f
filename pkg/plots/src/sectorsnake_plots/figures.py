"""The eight benchmark figures, each rendered from CSVs alone."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .schemas import SchemaError, fnum, load_table

plt.rcParams["svg.hashsalt"] = "sectorsnake-plots"
plt.rcParams["figure.dpi"] = 110

DRIVER_LABELS = {
    "full_hybrid": "sector+path+TF",
    "sector_path": "sector+path",
    "sector_tf": "sector+TF",
    "sector_only": "sector only",
    "tf_only": "TF only",
    "path_tf": "path+TF",
    "path_only": "path only",
    "orig_window4_only": "window4 only",
    "orig_hybrid_w4": "hybrid w=4",
    "orig_hybrid_w8": "hybrid w=8",
    "sector_path_no_tf": "sector+path",
    "hybrid_a": "hybrid (0.30, 0.10)",
    "hybrid_b": "hybrid (0.50, 0.20)",
}


def _label(name: str) -> str:
    return DRIVER_LABELS.get(name, name.replace("_", " "))


def _save(fig, out_dir, figure_id: str) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for ext in ("svg", "png"):
        path = out_dir / f"{figure_id}.{ext}"
        metadata = {"Date": None} if ext == "svg" else None
        fig.savefig(path, format=ext, bbox_inches="tight", metadata=metadata)
        paths.append(path)
    plt.close(fig)
    return paths


def fig_generator_diagnostics(csv_dir, out_dir):
    rows = load_table(csv_dir, "generator_diagnostics.csv")
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.4))
    for kind, marker in (("strict", "o"), ("v2", "s")):
        sub = sorted((r for r in rows if r["ordering"] == kind), key=lambda r: int(r["n"]))
        ns = [int(r["n"]) for r in sub]
        axes[0].plot(ns, [fnum(r, "mean_adjacent_dh") for r in sub], marker=marker, label=kind)
        axes[1].plot(ns, [fnum(r, "fraction_dh1") for r in sub], marker=marker, label=kind)
    axes[0].set_xlabel("n")
    axes[0].set_ylabel("mean adjacent Hamming distance")
    axes[1].set_xlabel("n")
    axes[1].set_ylabel("fraction of one-bit steps")
    axes[1].set_ylim(0, 1.05)
    for ax in axes:
        ax.legend()
        ax.grid(alpha=0.3)
    fig.suptitle("Ordering locality diagnostics")
    return _save(fig, out_dir, "generator_diagnostics")


def fig_target_class_bars(csv_dir, out_dir):
    rows = load_table(csv_dir, "fine_scan.csv")
    labels = ["TF", "sector", "orig path", "v2 path", "best hybrid"]
    keys = ["tf", "sector", "orig_path", "v2_path", "best_fidelity"]
    x = np.arange(len(rows))
    width = 0.16
    fig, ax = plt.subplots(figsize=(10, 3.8))
    for i, (key, label) in enumerate(zip(keys, labels)):
        ax.bar(x + (i - 2) * width, [fnum(r, key) for r in rows], width, label=label)
    ax.set_xticks(x)
    ax.set_xticklabels([r["target"].replace("_", "\n") for r in rows], fontsize=8)
    ax.set_ylabel("fidelity")
    ax.set_ylim(0, 1.05)
    ax.legend(ncol=5, fontsize=8)
    ax.set_title("Baselines and best hybrid per target class")
    return _save(fig, out_dir, "target_class_bars")


def fig_scan_heatmap(csv_dir, out_dir):
    rows = load_table(csv_dir, "fine_scan_grid.csv")
    cells = [
        r for r in rows
        if r["target"] == "original_window_barrier"
        and r["kind"] == "hybrid"
        and r["path_source"] == "original"
    ]
    if not cells:
        raise SchemaError("fine_scan_grid.csv: no original_window_barrier hybrid cells")
    alphas = sorted({fnum(r, "alpha") for r in cells})
    epsilons = sorted({fnum(r, "epsilon") for r in cells})
    grid = np.full((len(epsilons), len(alphas)), np.nan)
    for r in cells:
        i = epsilons.index(fnum(r, "epsilon"))
        j = alphas.index(fnum(r, "alpha"))
        grid[i, j] = fnum(r, "fidelity")
    fig, ax = plt.subplots(figsize=(7, 3.6))
    im = ax.imshow(grid, origin="lower", aspect="auto", cmap="viridis")
    ax.set_xticks(range(len(alphas)))
    ax.set_xticklabels([f"{a:g}" for a in alphas], fontsize=8)
    ax.set_yticks(range(len(epsilons)))
    ax.set_yticklabels([f"{e:g}" for e in epsilons], fontsize=8)
    ax.set_xlabel(r"path weight $\alpha$")
    ax.set_ylabel(r"one-bit catalyst $\epsilon$")
    i, j = np.unravel_index(np.nanargmax(grid), grid.shape)
    ax.plot(j, i, marker="*", markersize=14, color="red")
    ax.annotate(
        f"best {grid[i, j]:.4f}\n" rf"$(\alpha, \epsilon)$=({alphas[j]:g}, {epsilons[i]:g})",
        xy=(j, i), xytext=(j + 0.4, i + 0.3), color="white", fontsize=8,
    )
    fig.colorbar(im, ax=ax, label="fidelity")
    ax.set_title("Centered window-barrier target: driver mixture scan")
    return _save(fig, out_dir, "scan_heatmap")


def fig_controls_box(csv_dir, out_dir):
    samples = load_table(csv_dir, "controls_samples.csv")
    summary = load_table(csv_dir, "controls.csv")
    fig, axes = plt.subplots(1, 2, figsize=(10, 3.8), sharey=True)
    for ax, mode, title in (
        (axes[0], "matched", "matched target and driver path"),
        (axes[1], "strict_target", "strict target, varied catalyst path"),
    ):
        data, labels = [], []
        for kind in ("random_perm", "sector_preserving_random"):
            vals = [fnum(r, "fidelity") for r in samples
                    if r["mode"] == mode and r["source"] == kind]
            if vals:
                data.append(vals)
                labels.append(_label(kind))
        if not data:
            raise SchemaError(f"controls_samples.csv: no ensemble rows for mode {mode}")
        ax.boxplot(data, tick_labels=labels, widths=0.5)
        singles = [r for r in summary
                   if r["mode"] == mode and r["fidelity_std"] == "" and r["source"] != "tf_only"]
        for k, row in enumerate(singles):
            ax.plot(len(data) + 0.6 + 0.25 * k, fnum(row, "fidelity_mean"), "o", ms=4)
            ax.annotate(_label(row["source"]),
                        (len(data) + 0.6 + 0.25 * k, fnum(row, "fidelity_mean")),
                        fontsize=7, rotation=90, textcoords="offset points", xytext=(0, 4))
        ax.set_title(title, fontsize=9)
        ax.set_ylabel("fidelity")
        ax.grid(alpha=0.3)
        ax.tick_params(axis="x", labelsize=8)
    fig.suptitle("Path-order controls: 64-sample ensembles and deterministic orderings")
    return _save(fig, out_dir, "controls_box")


def fig_ablation_time(csv_dir, out_dir):
    ablation = load_table(csv_dir, "ablation.csv")
    sweep = load_table(csv_dir, "time_sweep.csv")
    fig, axes = plt.subplots(1, 2, figsize=(10, 3.8))
    names = [r["driver"] for r in ablation]
    axes[0].barh(range(len(names)), [fnum(r, "fidelity") for r in ablation])
    axes[0].set_yticks(range(len(names)))
    axes[0].set_yticklabels([_label(n) for n in names], fontsize=8)
    axes[0].invert_yaxis()
    axes[0].set_xlabel("fidelity")
    axes[0].set_title("driver ablation", fontsize=9)
    drivers = sorted({r["driver"] for r in sweep})
    for name in drivers:
        sub = sorted((r for r in sweep if r["driver"] == name), key=lambda r: fnum(r, "T"))
        axes[1].plot([fnum(r, "T") for r in sub], [fnum(r, "fidelity") for r in sub],
                     marker="o", ms=3, label=_label(name))
    axes[1].set_xlabel("anneal time T")
    axes[1].set_ylabel("fidelity")
    axes[1].set_title("anneal-time dependence", fontsize=9)
    axes[1].legend(fontsize=7)
    axes[1].grid(alpha=0.3)
    return _save(fig, out_dir, "ablation_time")


def fig_gaps_finite_size(csv_dir, out_dir):
    gaps = load_table(csv_dir, "gaps.csv")
    finite = load_table(csv_dir, "finite_size.csv")
    fig, axes = plt.subplots(1, 2, figsize=(10, 3.8))
    names = [r["driver"] for r in gaps]
    axes[0].bar(range(len(names)), [fnum(r, "min_gap") for r in gaps])
    axes[0].set_yscale("log")
    axes[0].set_xticks(range(len(names)))
    axes[0].set_xticklabels([_label(n) for n in names], fontsize=7, rotation=20)
    axes[0].set_ylabel("minimum grid gap")
    axes[0].set_title("grid minimum gaps", fontsize=9)
    for r, name in zip(gaps, names):
        axes[0].annotate(f"s={fnum(r, 's_at_min'):.2f}",
                         (names.index(name), fnum(r, "min_gap")),
                         fontsize=7, ha="center", textcoords="offset points", xytext=(0, 3))
    for name in sorted({r["driver"] for r in finite}):
        sub = sorted((r for r in finite if r["driver"] == name), key=lambda r: int(r["n"]))
        axes[1].plot([int(r["n"]) for r in sub], [fnum(r, "fidelity") for r in sub],
                     marker="o", ms=3, label=_label(name))
    axes[1].set_xlabel("n")
    axes[1].set_ylabel("fidelity")
    axes[1].set_title("finite-size summary", fontsize=9)
    axes[1].legend(fontsize=7)
    axes[1].grid(alpha=0.3)
    return _save(fig, out_dir, "gaps_finite_size")


def fig_banding_bars(csv_dir, out_dir):
    rows = load_table(csv_dir, "banding.csv")
    families = ["sector_dense_r1", "path_orig_w4", "mix_sector_orig_path",
                "local_hopping_1d", "local_pair_creation_1d"]
    orderings = ["strict", "v2", "binary", "gray", "weight_block"]
    table = {(r["family"], r["ordering"]): fnum(r, "mean_band") for r in rows}
    missing = [f for f in families if (f, "strict") not in table]
    if missing:
        raise SchemaError(f"banding.csv: missing families {missing}")
    x = np.arange(len(families))
    width = 0.15
    fig, ax = plt.subplots(figsize=(10, 3.8))
    for i, ordering in enumerate(orderings):
        vals = [table[(f, ordering)] for f in families]
        ax.bar(x + (i - 2) * width, vals, width, label=ordering)
    ax.set_xticks(x)
    ax.set_xticklabels([f.replace("_", "\n") for f in families], fontsize=8)
    ax.set_ylabel("MeanBand")
    ax.legend(fontsize=8, ncol=5)
    ax.set_title("Off-diagonal band locality under each ordering (smaller is better)")
    return _save(fig, out_dir, "banding_bars")


def fig_sensor_bars(csv_dir, out_dir):
    rows = load_table(csv_dir, "sensor.csv")
    fig, ax = plt.subplots(figsize=(7, 3.6))
    names = [r["driver"] for r in rows]
    ax.bar(range(len(names)), [fnum(r, "fidelity") for r in rows])
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels([_label(n) for n in names], fontsize=8, rotation=20)
    ax.set_ylabel("fidelity")
    ax.set_ylim(0, 1.0)
    for i, r in enumerate(rows):
        ax.annotate(f"{fnum(r, 'fidelity'):.3f}", (i, fnum(r, "fidelity")),
                    ha="center", fontsize=7, textcoords="offset points", xytext=(0, 3))
    ax.set_title("Staged sensor-placement benchmark")
    return _save(fig, out_dir, "sensor_bars")


FIGURES = {
    "generator_diagnostics": fig_generator_diagnostics,
    "target_class_bars": fig_target_class_bars,
    "scan_heatmap": fig_scan_heatmap,
    "controls_box": fig_controls_box,
    "ablation_time": fig_ablation_time,
    "gaps_finite_size": fig_gaps_finite_size,
    "banding_bars": fig_banding_bars,
    "sensor_bars": fig_sensor_bars,
}


def render(figure_id: str, csv_dir, out_dir) -> list[Path]:
    """Render one figure from its CSVs; SVG and PNG side by side."""
    if figure_id not in FIGURES:
        raise SchemaError(f"unknown figure {figure_id!r} (known: {sorted(FIGURES)})")
    return FIGURES[figure_id](csv_dir, out_dir)


def render_all(csv_dir, out_dir) -> dict[str, list[Path]]:
    return {figure_id: render(figure_id, csv_dir, out_dir) for figure_id in FIGURES}
