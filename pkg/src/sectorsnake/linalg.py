"""Dense Hermitian eigendecomposition and exact unitary propagation steps.

Everything here is exact to solver precision: propagation uses the full
eigendecomposition of the (at most 512-dimensional) slice Hamiltonian, so
there is no approximation tolerance to tune.  Real-symmetric inputs take the
faster real LAPACK path; the complex path is used otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_ATOL = 1e-12


def as_matrix(h) -> np.ndarray:
    """Accept a bare ndarray or any object exposing a .matrix attribute."""
    return getattr(h, "matrix", h)


def check_hermitian(mat: np.ndarray) -> np.ndarray:
    mat = np.asarray(as_matrix(mat))
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"operator must be square, got shape {mat.shape}")
    scale = max(1.0, float(np.abs(mat).max()))
    dev = float(np.abs(mat - mat.conj().T).max())
    if dev > HERMITICITY_ATOL * scale:
        raise ValueError(f"operator is not Hermitian: max deviation {dev:.3e}")
    return mat


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues with orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)


def eigh(h) -> EigenDecomposition:
    """Full spectrum of a Hermitian operator, gauge-fixed for reproducibility.

    Each eigenvector is rotated so that its largest-magnitude entry is real
    and positive; fidelities do not depend on this, logged vectors do.
    """
    mat = check_hermitian(h)
    if np.iscomplexobj(mat):
        if np.abs(mat.imag).max() == 0.0:
            vals, vecs = np.linalg.eigh(mat.real)
            vecs = vecs.astype(complex)
        else:
            vals, vecs = np.linalg.eigh(mat)
    else:
        vals, vecs = np.linalg.eigh(mat)
    idx = np.abs(vecs).argmax(axis=0)
    anchors = vecs[idx, np.arange(vecs.shape[1])]
    phases = anchors / np.abs(anchors)
    vecs = vecs / phases[np.newaxis, :]
    return EigenDecomposition(eigenvalues=vals, eigenvectors=vecs)


@dataclass(frozen=True)
class GroundState:
    """Lowest eigenpair; degenerate flags a gap below resolution."""

    energy: float
    vector: np.ndarray
    degenerate: bool


DEGENERACY_GAP = 1e-10


def ground_state(h) -> GroundState:
    dec = eigh(h)
    vals = dec.eigenvalues
    degenerate = len(vals) > 1 and (vals[1] - vals[0]) < DEGENERACY_GAP
    return GroundState(
        energy=float(vals[0]), vector=dec.eigenvectors[:, 0].copy(), degenerate=degenerate
    )


def ground_space_projection(h, psi: np.ndarray, tol: float = DEGENERACY_GAP) -> float:
    """Total weight of psi on the (possibly degenerate) lowest eigenspace."""
    dec = eigh(h)
    vals = dec.eigenvalues
    mask = vals - vals[0] < tol
    amps = dec.eigenvectors[:, mask].conj().T @ psi
    return float(np.sum(np.abs(amps) ** 2))


def uniform_state(n: int) -> np.ndarray:
    size = 1 << n
    return np.full(size, 1.0 / np.sqrt(size), dtype=complex)


def normalize(psi: np.ndarray) -> np.ndarray:
    nrm = float(np.linalg.norm(psi))
    if nrm == 0.0:
        raise ValueError("cannot normalize a zero state")
    return psi / nrm


def evolve_step(h, dt: float, psi: np.ndarray) -> np.ndarray:
    """Apply exp(-i H dt) through the eigenbasis of H."""
    if not np.isfinite(dt):
        raise ValueError(f"dt must be finite, got {dt}")
    dec = eigh(h)
    vecs = dec.eigenvectors
    phases = np.exp(-1j * dec.eigenvalues * dt)
    out = vecs @ (phases * (vecs.conj().T @ psi))
    nrm = float(np.linalg.norm(out))
    if abs(nrm - np.linalg.norm(psi)) > 1e-10:
        raise AssertionError(f"propagation lost norm: {nrm}")
    return out
