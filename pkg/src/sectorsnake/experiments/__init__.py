from .banding import mean_band, off_band, run_banding
from .calibrate import CalibrationResult, baseline_fidelities, find_calibration
from .context import ScanGrid
from .reproduce import reproduce_all
from .tables import (
    run_ablation,
    run_controls,
    run_convergence,
    run_diagonal_qa,
    run_fine_scan,
    run_finite_size,
    run_gap_table,
    run_generator_diagnostics,
    run_sensor_benchmark,
    run_time_sweep,
)
