"""Driver and target Hamiltonians built from sector/path graph geometry.

Drivers are convex mixtures of normalized graph Laplacians.  Targets add a
diagonal potential in the path coordinate (ramp plus Gaussian barrier), a
sector or sector/path well, a Gaussian-process sensor-placement cost, or one
of the banding benchmark families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .bits import weight
from .graphs import GraphSpec, hypercube_graph, laplacian, path_window_graph, sector_graph
from .linalg import check_hermitian
from .ordering import Ordering, skeleton


@dataclass(frozen=True)
class HermitianOperator:
    """Dense self-adjoint operator on the 2^n-dimensional state space."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        check_hermitian(self.matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def round_position(frac: float, size: int) -> int:
    """Map a fractional path position to an index, rounding half away from zero."""
    return int(math.floor(frac * (size - 1) + 0.5))


def rescale01(values: np.ndarray) -> np.ndarray:
    lo = float(values.min())
    hi = float(values.max())
    if hi == lo:
        raise ValueError("cannot rescale a constant potential to [0, 1]")
    return (values - lo) / (hi - lo)


@dataclass(frozen=True)
class DriverConfig:
    """Hybrid-driver mixture weights and path-window source."""

    alpha: float
    epsilon: float
    w: int
    path_source: Ordering

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must be in [0, 1], got {self.epsilon}")
        if self.w < 1:
            raise ValueError(f"window must be >= 1, got {self.w}")


@dataclass(frozen=True)
class DriverParts:
    """Component graphs and normalized Laplacians, reusable across mixtures."""

    n: int
    w: int
    sector: GraphSpec
    path: GraphSpec
    hypercube: GraphSpec
    l_sector: np.ndarray
    l_path: np.ndarray
    l_hypercube: np.ndarray


@lru_cache(maxsize=None)
def _static_parts(n: int):
    """Sector and hypercube components depend only on n; treat as read-only."""
    g_sec = sector_graph(n)
    g_tf = hypercube_graph(n)
    return g_sec, g_tf, laplacian(g_sec).matrix, laplacian(g_tf).matrix


def driver_parts(ordering: Ordering, w: int) -> DriverParts:
    """Precompute the three component Laplacians for repeated mixing."""
    n = ordering.n
    g_sec, g_tf, l_sec, l_tf = _static_parts(n)
    g_path = path_window_graph(ordering, w)
    return DriverParts(
        n=n,
        w=w,
        sector=g_sec,
        path=g_path,
        hypercube=g_tf,
        l_sector=l_sec,
        l_path=laplacian(g_path).matrix,
        l_hypercube=l_tf,
    )


def mix_driver(parts: DriverParts, alpha: float, epsilon: float) -> HermitianOperator:
    """H_D = (1-eps)[(1-alpha) Lsec + alpha Lpath] + eps Ltf, on unit-norm parts."""
    w_sec = (1.0 - epsilon) * (1.0 - alpha)
    w_path = (1.0 - epsilon) * alpha
    w_tf = epsilon
    active = []
    if w_sec > 0.0:
        active.append(parts.sector)
    if w_path > 0.0:
        active.append(parts.path)
    if w_tf > 0.0:
        active.append(parts.hypercube)
    if not active:
        raise ValueError("driver has no active component (alpha=1, epsilon=0 path missing?)")
    union = GraphSpec(
        n=parts.n,
        edges=frozenset().union(*(g.edges for g in active)),
        kind="driver_union",
    )
    if not union.is_connected():
        raise ValueError(
            "driver support graph is disconnected: the ground state would be degenerate"
        )
    mat = w_sec * parts.l_sector + w_path * parts.l_path + w_tf * parts.l_hypercube
    return HermitianOperator(matrix=mat)


def hybrid_driver(cfg: DriverConfig, n: Optional[int] = None) -> HermitianOperator:
    if n is not None and n != cfg.path_source.n:
        raise ValueError(f"n={n} does not match path source n={cfg.path_source.n}")
    parts = driver_parts(cfg.path_source, cfg.w)
    return mix_driver(parts, cfg.alpha, cfg.epsilon)


def transverse_field(n: int) -> HermitianOperator:
    """-sum_i X_i: the plain one-bit-flip driver used for diagonal costs."""
    size = 1 << n
    mat = np.zeros((size, size))
    for x in range(size):
        for b in range(n):
            mat[x, x ^ (1 << b)] = -1.0
    return HermitianOperator(matrix=mat)


@dataclass(frozen=True)
class BarrierTargetConfig:
    """Path-window barrier target: ramp toward p*, Gaussian bump at p_b."""

    ordering: Ordering
    w_T: int = 4
    p_star_frac: float = 0.5
    h: float = 0.35
    p_b_frac: float = 0.35
    sigma: float = 0.06

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_star_frac <= 1.0:
            raise ValueError(f"p_star_frac must be in [0, 1], got {self.p_star_frac}")
        if self.h < 0.0:
            raise ValueError(f"barrier height must be >= 0, got {self.h}")
        if self.w_T < 1:
            raise ValueError(f"target window must be >= 1, got {self.w_T}")


def barrier_potential(cfg: BarrierTargetConfig, size: int) -> np.ndarray:
    """Rescaled potential per path position: min 0, max 1."""
    p = np.arange(size, dtype=float)
    p_star = round_position(cfg.p_star_frac, size)
    p_b = cfg.p_b_frac * (size - 1)
    raw = np.abs(p - p_star) / (size - 1)
    raw = raw + cfg.h * np.exp(-(((p - p_b) / (cfg.sigma * size)) ** 2))
    return rescale01(raw)


def barrier_target(cfg: BarrierTargetConfig, n: Optional[int] = None) -> HermitianOperator:
    ordering = cfg.ordering
    if n is not None and n != ordering.n:
        raise ValueError(f"n={n} does not match ordering n={ordering.n}")
    size = len(ordering)
    lap = laplacian(path_window_graph(ordering, cfg.w_T)).matrix
    v_path = barrier_potential(cfg, size)
    v_state = np.empty(size)
    v_state[np.asarray(ordering.states)] = v_path
    return HermitianOperator(matrix=lap + np.diag(v_state))


DIAGONAL_FAMILIES = ("index_well", "sector_well", "mix", "barrier_path")

# barrier constants of the diagonal benchmark family (distinct from the
# non-diagonal barrier target's h and p_b)
_DIAG_BARRIER_HEIGHT = 0.35
_DIAG_BARRIER_WIDTH = 0.10
_SECTOR_TIEBREAK = 0.02


def diagonal_cost_profile(family: str, n: int, t_star: int) -> np.ndarray:
    """Cost per logical path position t, rescaled to [0, 1].

    The sector of position t is the strict skeleton weight, for every
    encoding; encodings only change which bit string sits at position t.
    """
    size = 1 << n
    if not 0 <= t_star < size:
        raise ValueError(f"t_star must be in [0, {size}), got {t_star}")
    t = np.arange(size, dtype=float)
    pi = np.asarray(skeleton(n).weights, dtype=float)
    d_idx = np.abs(t - t_star) / (size - 1)
    d_sec = np.abs(pi - pi[t_star]) / n
    if family == "index_well":
        cost = d_idx
    elif family == "sector_well":
        cost = d_sec + _SECTOR_TIEBREAK * d_idx
    elif family == "mix":
        cost = 0.5 * d_sec + 0.5 * d_idx
    elif family == "barrier_path":
        bump = _DIAG_BARRIER_HEIGHT * np.exp(
            -(((t - (size - 1) / 2.0) / (_DIAG_BARRIER_WIDTH * size)) ** 2)
        )
        cost = d_idx + bump
        cost[t_star] = 0.0
    else:
        raise ValueError(f"unknown diagonal cost family {family!r}")
    return rescale01(cost)


def diagonal_cost(family: str, encoding: Ordering, n: int, t_star: int) -> np.ndarray:
    """Diagonal cost vector over basis states under the given encoding."""
    if encoding.n != n:
        raise ValueError(f"encoding n={encoding.n} does not match n={n}")
    profile = diagonal_cost_profile(family, n, t_star)
    cost = np.empty(len(profile))
    cost[np.asarray(encoding.states)] = profile
    return cost


MIXTURE_CLASSES = ("sector_well_r1", "mix_sector_path")


def mixture_target(
    klass: str,
    ordering: Ordering,
    n: Optional[int] = None,
    *,
    w: int = 4,
    p_star_frac: float = 0.5,
    well_amplitude: float = 1.0,
) -> HermitianOperator:
    """Sector-well and sector/path mixture target classes.

    sector_well_r1: Lsec + diag of a rescaled |wt - wt*| well (ordering
    enters only through the centered position's skeleton weight).
    mix_sector_path: (Lsec + Lpath)/2 + diag of the rescaled half/half
    sector+index well in the ordering's path coordinate.
    """
    if n is None:
        n = ordering.n
    elif n != ordering.n:
        raise ValueError(f"n={n} does not match ordering n={ordering.n}")
    size = 1 << n
    p_star = round_position(p_star_frac, size)
    skel_w = np.asarray(skeleton(n).weights, dtype=float)
    if klass == "sector_well_r1":
        j_star = skel_w[p_star]
        well_state = rescale01(np.abs(np.array([weight(x) for x in range(size)], dtype=float) - j_star))
        mat = laplacian(sector_graph(n)).matrix + well_amplitude * np.diag(well_state)
    elif klass == "mix_sector_path":
        t = np.arange(size, dtype=float)
        profile = rescale01(
            0.5 * np.abs(skel_w - skel_w[p_star]) / n + 0.5 * np.abs(t - p_star) / (size - 1)
        )
        well_state = np.empty(size)
        well_state[np.asarray(ordering.states)] = profile
        mat = (
            0.5 * laplacian(sector_graph(n)).matrix
            + 0.5 * laplacian(path_window_graph(ordering, w)).matrix
            + well_amplitude * np.diag(well_state)
        )
    else:
        raise ValueError(f"unknown mixture target class {klass!r}")
    return HermitianOperator(matrix=mat)


@dataclass(frozen=True)
class SensorModelConfig:
    """A-optimal sensor selection on a 1D domain with a soft budget."""

    n_sensors: int = 8
    n_grid: int = 16
    lengthscale: float = 0.25
    noise: float = 0.08
    budget: int = 4
    penalty_weight: float = 0.20
    laplacian_weight: float = 0.6
    window: int = 4

    def __post_init__(self) -> None:
        if self.lengthscale <= 0 or self.noise <= 0:
            raise ValueError("kernel parameters must be positive")

    def sensor_locations(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.n_sensors)

    def grid_locations(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.n_grid)


def _sq_exp_kernel(a: np.ndarray, b: np.ndarray, ell: float) -> np.ndarray:
    diff = a[:, None] - b[None, :]
    return np.exp(-(diff**2) / (2.0 * ell**2))


def sensor_posterior_traces(cfg: SensorModelConfig) -> np.ndarray:
    """tr of the grid posterior covariance for every sensor subset."""
    xs = cfg.sensor_locations()
    xg = cfg.grid_locations()
    k_gg = _sq_exp_kernel(xg, xg, cfg.lengthscale)
    k_gs = _sq_exp_kernel(xg, xs, cfg.lengthscale)
    k_ss = _sq_exp_kernel(xs, xs, cfg.lengthscale)
    size = 1 << cfg.n_sensors
    traces = np.empty(size)
    for s in range(size):
        idx = [i for i in range(cfg.n_sensors) if (s >> i) & 1]
        if not idx:
            traces[s] = float(np.trace(k_gg))
            continue
        kss = k_ss[np.ix_(idx, idx)] + cfg.noise**2 * np.eye(len(idx))
        kgs = k_gs[:, idx]
        post = k_gg - kgs @ np.linalg.solve(kss, kgs.T)
        traces[s] = float(np.trace(post))
    return traces


def sensor_cost(cfg: SensorModelConfig) -> np.ndarray:
    """Normalized A-optimality cost with budget penalty, rescaled to [0, 1]."""
    xg = cfg.grid_locations()
    tr_prior = float(np.trace(_sq_exp_kernel(xg, xg, cfg.lengthscale)))
    traces = sensor_posterior_traces(cfg)
    sizes = np.array([weight(s) for s in range(1 << cfg.n_sensors)], dtype=float)
    raw = traces / tr_prior + cfg.penalty_weight * ((sizes - cfg.budget) / cfg.n_sensors) ** 2
    return rescale01(raw)


def sensor_target(cfg: SensorModelConfig, ordering: Ordering) -> HermitianOperator:
    if ordering.n != cfg.n_sensors:
        raise ValueError(
            f"ordering n={ordering.n} does not match n_sensors={cfg.n_sensors}"
        )
    lap = laplacian(path_window_graph(ordering, cfg.window)).matrix
    return HermitianOperator(
        matrix=cfg.laplacian_weight * lap + np.diag(sensor_cost(cfg))
    )


BANDING_FAMILIES = (
    "sector_dense_r1",
    "same_sector_swap",
    "path_w4",
    "mix_sector_path_w4",
    "local_hopping_1d",
    "local_pair_creation_1d",
)


def banding_family(
    family: str, ordering_for_path: Optional[Ordering] = None, n: int = 8
) -> HermitianOperator:
    """Sparse benchmark Hamiltonians for the matrix-banding comparison."""
    size = 1 << n
    if family == "sector_dense_r1":
        mat = sector_graph(n).adjacency()
    elif family == "same_sector_swap":
        mat = np.zeros((size, size))
        for x in range(size):
            for y in range(x + 1, size):
                if weight(x) == weight(y) and weight(x ^ y) == 2:
                    mat[x, y] = mat[y, x] = 1.0
    elif family == "path_w4":
        if ordering_for_path is None:
            raise ValueError("path_w4 needs an ordering")
        mat = path_window_graph(ordering_for_path, 4).adjacency()
    elif family == "mix_sector_path_w4":
        if ordering_for_path is None:
            raise ValueError("mix_sector_path_w4 needs an ordering")
        # each component scaled to unit total off-diagonal weight, so the mix
        # band statistics average the component statistics
        a_sec = sector_graph(n).adjacency()
        a_path = path_window_graph(ordering_for_path, 4).adjacency()
        mat = 0.5 * a_sec / np.abs(a_sec).sum() + 0.5 * a_path / np.abs(a_path).sum()
    elif family == "local_hopping_1d":
        mat = np.zeros((size, size))
        for x in range(size):
            for b in range(n - 1):
                pair = (x >> b) & 3
                if pair in (1, 2):  # "01" or "10": move the particle
                    mat[x, x ^ (3 << b)] = 1.0
    elif family == "local_pair_creation_1d":
        mat = np.zeros((size, size))
        for x in range(size):
            for b in range(n - 1):
                pair = (x >> b) & 3
                if pair in (0, 3):  # "00" <-> "11"
                    mat[x, x ^ (3 << b)] = 1.0
    else:
        raise ValueError(f"unknown banding family {family!r}")
    return HermitianOperator(matrix=mat)
