import numpy as np
import pytest

from sectorsnake.graphs import hypercube_graph, laplacian
from sectorsnake.hamiltonian import BarrierTargetConfig, barrier_target
from sectorsnake.linalg import (
    EigenDecomposition,
    eigh,
    evolve_step,
    ground_space_projection,
    ground_state,
    normalize,
    uniform_state,
)
from sectorsnake.ordering import strict_generate


def random_hermitian(dim, seed, real=False):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(dim, dim))
    if not real:
        a = a + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


class TestEigh:
    def test_single_edge_laplacian(self):
        lap = np.array([[1.0, -1.0], [-1.0, 1.0]])
        dec = eigh(lap)
        assert np.allclose(dec.eigenvalues, [0.0, 2.0], atol=1e-12)

    def test_hypercube_n3_spectrum(self):
        dec = eigh(laplacian(hypercube_graph(3), normalize=False).matrix)
        assert np.allclose(dec.eigenvalues, [0, 2, 2, 2, 4, 4, 4, 6], atol=1e-9)

    @pytest.mark.parametrize("seed", range(5))
    def test_residual_invariants(self, seed):
        h = random_hermitian(8, seed)
        dec = eigh(h)
        scale = np.linalg.norm(h, 2)
        for k in range(8):
            res = np.linalg.norm(h @ dec.eigenvectors[:, k] - dec.eigenvalues[k] * dec.eigenvectors[:, k])
            assert res <= 1e-9 * max(scale, 1.0)
        gram = dec.eigenvectors.conj().T @ dec.eigenvectors
        assert np.abs(gram - np.eye(8)).max() <= 1e-10

    @pytest.mark.parametrize("seed", range(5))
    def test_trace_identity(self, seed):
        h = random_hermitian(16, seed)
        dec = eigh(h)
        assert abs(dec.eigenvalues.sum() - np.trace(h).real) <= 1e-9 * 16

    def test_ascending(self):
        vals = eigh(random_hermitian(12, 3)).eigenvalues
        assert np.all(np.diff(vals) >= 0)

    def test_gauge_fixed(self):
        dec = eigh(random_hermitian(6, 11))
        for k in range(6):
            v = dec.eigenvectors[:, k]
            anchor = v[np.abs(v).argmax()]
            assert anchor.imag == pytest.approx(0.0, abs=1e-12)
            assert anchor.real > 0

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValueError, match="Hermitian"):
            eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestGroundState:
    def test_connected_laplacian_uniform(self):
        lap = laplacian(hypercube_graph(4)).matrix
        gs = ground_state(lap)
        assert gs.energy == pytest.approx(0.0, abs=1e-10)
        assert not gs.degenerate
        overlap = abs(np.vdot(uniform_state(4), gs.vector))
        assert overlap == pytest.approx(1.0, abs=1e-10)

    def test_barrier_target_n2_against_power_iteration(self):
        # independent oracle: shifted power iteration on (c*I - H)
        cfg = BarrierTargetConfig(ordering=strict_generate(2), w_T=1, p_star_frac=0.5, h=0.35)
        h = barrier_target(cfg).matrix
        c = np.linalg.norm(h, np.inf) + 1.0
        shifted = c * np.eye(4) - h
        v = np.full(4, 0.5)
        for _ in range(4000):
            v = shifted @ v
            v /= np.linalg.norm(v)
        oracle_energy = float(v @ h @ v)
        gs = ground_state(h)
        assert gs.energy == pytest.approx(oracle_energy, abs=1e-9)
        assert abs(np.vdot(v, gs.vector)) == pytest.approx(1.0, abs=1e-7)

    def test_degenerate_identity_flagged(self):
        gs = ground_state(np.eye(2))
        assert gs.degenerate

    def test_ground_space_projection(self):
        h = np.diag([0.0, 0.0, 1.0])
        psi = normalize(np.array([1.0, 1.0, 1.0], dtype=complex))
        assert ground_space_projection(h, psi) == pytest.approx(2.0 / 3.0, abs=1e-12)


class TestEvolveStep:
    def test_dt_zero_identity(self):
        h = random_hermitian(8, 0)
        psi = normalize(np.arange(1.0, 9.0).astype(complex))
        out = evolve_step(h, 0.0, psi)
        assert np.allclose(out, psi, atol=1e-12)

    def test_diagonal_phase_rotation(self):
        d = np.array([0.5, -1.0, 2.0])
        psi = normalize(np.array([1.0, 1.0j, 1.0]))
        out = evolve_step(np.diag(d), 0.3, psi)
        assert np.allclose(out, np.exp(-1j * d * 0.3) * psi, atol=1e-12)

    def test_against_taylor_series(self):
        # degree-20 Taylor expansion of exp(-i H dt) psi as an independent oracle
        h = random_hermitian(16, 7)
        psi = normalize(np.random.default_rng(8).normal(size=16) + 0j)
        dt = 0.1
        term = psi.copy()
        acc = psi.copy()
        for k in range(1, 21):
            term = (-1j * dt / k) * (h @ term)
            acc = acc + term
        out = evolve_step(h, dt, psi)
        assert np.abs(out - acc).max() <= 1e-10

    def test_unitarity_many_trials(self):
        rng = np.random.default_rng(123)
        for trial in range(1000):
            dim = int(rng.integers(2, 9))
            a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            h = (a + a.conj().T) / 2
            psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
            psi /= np.linalg.norm(psi)
            out = evolve_step(h, float(rng.normal()), psi)
            assert abs(np.linalg.norm(out) - 1.0) <= 1e-10

    @pytest.mark.parametrize("seed", range(5))
    def test_energy_conserved(self, seed):
        h = random_hermitian(12, seed)
        psi = normalize(np.random.default_rng(seed + 50).normal(size=12) + 0j)
        out = evolve_step(h, 1.7, psi)
        before = np.vdot(psi, h @ psi).real
        after = np.vdot(out, h @ out).real
        assert after == pytest.approx(before, abs=1e-9)

    @pytest.mark.parametrize("seed", range(5))
    def test_composition(self, seed):
        h = random_hermitian(10, seed)
        psi = normalize(np.random.default_rng(seed + 99).normal(size=10) + 0j)
        one = evolve_step(h, 0.8, psi)
        two = evolve_step(h, 0.5, evolve_step(h, 0.3, psi))
        assert np.abs(one - two).max() <= 1e-9

    @pytest.mark.parametrize("seed", range(3))
    def test_reversal(self, seed):
        h = random_hermitian(12, seed)
        psi = normalize(np.random.default_rng(seed).normal(size=12) + 0j)
        back = evolve_step(h, -0.7, evolve_step(h, 0.7, psi))
        assert np.abs(back - psi).max() <= 1e-9

    def test_non_finite_dt(self):
        with pytest.raises(ValueError):
            evolve_step(np.eye(2), float("nan"), np.array([1.0, 0.0]))
