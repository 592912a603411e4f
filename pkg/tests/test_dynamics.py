import numpy as np
import pytest

from sectorsnake.dynamics import ScheduleConfig, anneal, gap_scan
from sectorsnake.graphs import hypercube_graph, laplacian
from sectorsnake.hamiltonian import BarrierTargetConfig, barrier_target, driver_parts, mix_driver
from sectorsnake.ordering import strict_generate


@pytest.fixture(scope="module")
def small_problem():
    orig = strict_generate(4)
    parts = driver_parts(orig, 2)
    target = barrier_target(BarrierTargetConfig(ordering=orig, w_T=2, p_star_frac=0.5, h=0.35))
    return parts, target


class TestAnneal:
    def test_static_ground_state_is_stationary(self, small_problem):
        parts, _ = small_problem
        driver = mix_driver(parts, 0.0, 0.0)
        out = anneal(driver, driver, ScheduleConfig(T=10.0, slices=7))
        assert out.fidelity == pytest.approx(1.0, abs=1e-10)
        assert out.energy_residual == pytest.approx(0.0, abs=1e-10)

    def test_fidelity_in_unit_interval_and_residual_nonnegative(self, small_problem):
        parts, target = small_problem
        for alpha, epsilon in ((0.0, 0.0), (0.5, 0.15), (1.0, 0.0), (0.0, 1.0)):
            out = anneal(mix_driver(parts, alpha, epsilon), target, ScheduleConfig(T=20.0, slices=9))
            assert 0.0 <= out.fidelity <= 1.0 + 1e-12
            assert out.energy_residual >= -1e-9

    def test_adiabatic_limit_sector_only(self, small_problem):
        # very slow schedule: the sector driver prepares the target ground
        # state almost perfectly at n=4
        parts, target = small_problem
        out = anneal(mix_driver(parts, 0.0, 0.0), target, ScheduleConfig(T=2000.0, slices=875))
        assert out.fidelity >= 0.999

    def test_slice_convergence(self, small_problem):
        parts, target = small_problem
        driver = mix_driver(parts, 0.5, 0.15)
        f35 = anneal(driver, target, ScheduleConfig(T=80.0, slices=35)).fidelity
        f70 = anneal(driver, target, ScheduleConfig(T=80.0, slices=70)).fidelity
        assert abs(f70 - f35) <= 5e-4

    def test_dimension_mismatch(self, small_problem):
        parts, target = small_problem
        with pytest.raises(ValueError, match="dimension"):
            anneal(np.eye(4), target, ScheduleConfig(T=1.0, slices=1))

    def test_degenerate_driver_rejected(self, small_problem):
        _, target = small_problem
        with pytest.raises(ValueError, match="degenerate"):
            anneal(np.zeros((16, 16)), target, ScheduleConfig(T=1.0, slices=1))

    def test_degenerate_target_reports_ground_space_weight(self, small_problem):
        parts, _ = small_problem
        target = np.diag([0.0, 0.0] + [1.0] * 14)
        out = anneal(mix_driver(parts, 0.0, 0.1), target, ScheduleConfig(T=30.0, slices=11))
        assert out.degeneracy_flag
        assert 0.0 <= out.fidelity <= 1.0 + 1e-12

    def test_schedule_validation(self):
        with pytest.raises(ValueError):
            ScheduleConfig(T=0.0, slices=5)
        with pytest.raises(ValueError):
            ScheduleConfig(T=1.0, slices=0)

    def test_final_state_normalized(self, small_problem):
        parts, target = small_problem
        out = anneal(mix_driver(parts, 0.3, 0.1), target, ScheduleConfig(T=15.0, slices=10))
        assert np.linalg.norm(out.final_state) == pytest.approx(1.0, abs=1e-10)


class TestGapScan:
    def test_constant_gap_when_endpoints_equal(self):
        h = np.diag([0.0, 0.5, 2.0])
        result = gap_scan(h, h, 7)
        assert np.allclose(result.gaps, 0.5, atol=1e-12)
        assert result.min_gap == pytest.approx(0.5)
        assert result.argmin_s == 0.0  # first minimum reported

    def test_grid_includes_endpoints(self, small_problem):
        parts, target = small_problem
        result = gap_scan(mix_driver(parts, 0.0, 1.0), target, 15)
        assert result.grid[0] == 0.0 and result.grid[-1] == 1.0
        assert len(result.grid) == 15
        assert result.grid[13] == pytest.approx(13 / 14)

    def test_min_matches_grid(self, small_problem):
        parts, target = small_problem
        result = gap_scan(mix_driver(parts, 0.3, 0.1), target, 9)
        assert result.min_gap == result.gaps.min()
        idx = int(np.argmin(result.gaps))
        assert result.argmin_s == result.grid[idx]

    def test_driver_endpoint_gap(self):
        # at s=0 the gap is the driver's own spectral gap
        lap = laplacian(hypercube_graph(3)).matrix
        target = np.diag(np.arange(8.0))
        result = gap_scan(lap, target, 5)
        assert result.gaps[0] == pytest.approx(2.0 / 6.0, abs=1e-10)

    def test_grid_points_validated(self, small_problem):
        parts, target = small_problem
        with pytest.raises(ValueError):
            gap_scan(mix_driver(parts, 0.0, 0.0), target, 1)
