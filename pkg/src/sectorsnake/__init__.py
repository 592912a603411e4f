"""Sector/path orderings of the Boolean hypercube and graph-local annealing.

The package generates and certifies sector-snake orderings, builds sector,
path-window, and hypercube Laplacian drivers, propagates linear annealing
schedules exactly, and regenerates the benchmark CSV tables.
"""

__version__ = "0.1.0"

from .bits import weight, hamming, span, to_string, from_string
from .ordering import (
    AttemptLog,
    CertificateError,
    GeneratorBudget,
    Ordering,
    OrderingDiagnostics,
    Skeleton,
    ValidationReport,
    active_counts,
    diagnostics,
    fixed_prefix,
    load_certificate,
    save_certificate,
    skeleton,
    standard_ordering,
    strict_generate,
    v2_generate,
    validate,
)
from .graphs import GraphSpec, LaplacianOperator, hypercube_graph, laplacian, path_window_graph, sector_graph
from .hamiltonian import (
    BarrierTargetConfig,
    DriverConfig,
    HermitianOperator,
    SensorModelConfig,
    banding_family,
    barrier_target,
    diagonal_cost,
    hybrid_driver,
    mixture_target,
    sensor_cost,
    sensor_target,
    transverse_field,
)
from .linalg import EigenDecomposition, GroundState, eigh, evolve_step, ground_state, uniform_state
from .dynamics import AnnealOutcome, GapScanResult, ScheduleConfig, anneal, gap_scan
