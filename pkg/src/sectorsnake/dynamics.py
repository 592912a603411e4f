"""Linear-schedule annealing with midpoint slicing, plus grid gap scans."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    as_matrix,
    eigh,
    evolve_step,
    ground_space_projection,
    ground_state,
)


@dataclass(frozen=True)
class ScheduleConfig:
    """Total anneal time T and number of piecewise-constant slices."""

    T: float
    slices: int = 35

    def __post_init__(self) -> None:
        if self.T <= 0:
            raise ValueError(f"anneal time must be positive, got {self.T}")
        if self.slices < 1:
            raise ValueError(f"slice count must be >= 1, got {self.slices}")


@dataclass(frozen=True)
class AnnealOutcome:
    fidelity: float
    energy_residual: float
    final_state: np.ndarray
    degeneracy_flag: bool


def anneal(h_driver, h_target, cfg: ScheduleConfig) -> AnnealOutcome:
    """Propagate the driver ground state along H(s) = (1-s) H_D + s H_T.

    Midpoint slicing: slice j is propagated under H evaluated at
    s = (j + 1/2) / M for a time T / M.  The fidelity is the squared overlap
    with the target ground state; for a degenerate target it is the weight on
    the whole lowest eigenspace and the outcome is flagged.
    """
    hd = as_matrix(h_driver)
    ht = as_matrix(h_target)
    if hd.shape != ht.shape:
        raise ValueError(f"dimension mismatch: {hd.shape} vs {ht.shape}")

    start = ground_state(hd)
    if start.degenerate:
        raise ValueError("driver ground state is degenerate; initial state undefined")
    psi = start.vector.astype(complex)

    m = cfg.slices
    dt = cfg.T / m
    for j in range(m):
        s = (j + 0.5) / m
        psi = evolve_step((1.0 - s) * hd + s * ht, dt, psi)

    target = ground_state(ht)
    if target.degenerate:
        fidelity = ground_space_projection(ht, psi)
    else:
        fidelity = float(np.abs(np.vdot(target.vector, psi)) ** 2)
    residual = float(np.real(np.vdot(psi, ht @ psi))) - target.energy
    return AnnealOutcome(
        fidelity=fidelity,
        energy_residual=residual,
        final_state=psi,
        degeneracy_flag=target.degenerate,
    )


@dataclass(frozen=True)
class GapScanResult:
    grid: np.ndarray
    gaps: np.ndarray
    min_gap: float
    argmin_s: float


def gap_scan(h_driver, h_target, grid_points: int = 15) -> GapScanResult:
    """E_1 - E_0 of H(s) on a uniform grid over [0, 1] including endpoints.

    The reported argmin is the first grid point attaining the minimum.
    """
    if grid_points < 2:
        raise ValueError(f"need at least 2 grid points, got {grid_points}")
    hd = as_matrix(h_driver)
    ht = as_matrix(h_target)
    if hd.shape != ht.shape:
        raise ValueError(f"dimension mismatch: {hd.shape} vs {ht.shape}")
    grid = np.linspace(0.0, 1.0, grid_points)
    gaps = np.empty(grid_points)
    for i, s in enumerate(grid):
        vals = eigh((1.0 - s) * hd + s * ht).eigenvalues
        gaps[i] = float(vals[1] - vals[0])
    imin = int(np.argmin(gaps))
    return GapScanResult(
        grid=grid, gaps=gaps, min_gap=float(gaps[imin]), argmin_s=float(grid[imin])
    )
