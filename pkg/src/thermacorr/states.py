"""Thermal states, spectra, entropies and work cost.

Density matrices are plain complex ``numpy`` arrays. Energies are
dimensionless (units of the gap ``E``) and inverse temperatures are passed as
the product ``betaE``; ``math.inf`` stands for zero temperature.

Entropies are computed with the natural log and reported in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
NEG_EIG_TOL = 1e-10


@dataclass(frozen=True)
class Hamiltonian:
    """Diagonal Hamiltonian ``H = sum_k levels[k] |k><k|`` in units of E."""

    levels: tuple[float, ...]

    def __post_init__(self):
        levels = tuple(float(x) for x in self.levels)
        if not levels:
            raise ValueError("Hamiltonian needs at least one level")
        if levels[0] != 0.0:
            raise ValueError("ground-state energy must be 0")
        if any(b < a for a, b in zip(levels, levels[1:])):
            raise ValueError("levels must be nondecreasing")
        object.__setattr__(self, "levels", levels)

    @property
    def dim(self) -> int:
        return len(self.levels)

    @classmethod
    def ladder(cls, d: int) -> "Hamiltonian":
        """Equally spaced qudit ladder ``eps_k = k``."""
        if d < 1:
            raise ValueError("dimension must be positive")
        return cls(tuple(float(k) for k in range(d)))

    def matrix(self) -> np.ndarray:
        return np.diag(np.asarray(self.levels, dtype=float))


QUBIT = Hamiltonian.ladder(2)


def ground_weight(betaE: float) -> float:
    """Ground-state population ``p = 1/(1+exp(-betaE))`` of a thermal qubit."""
    if betaE < 0:
        raise ValueError("negative temperatures are not supported")
    if math.isinf(betaE):
        return 1.0
    return 1.0 / (1.0 + math.exp(-betaE))


def excited_weight(betaE: float) -> float:
    """``1 - p`` computed without cancellation, so it stays exact at low temperature."""
    if betaE < 0:
        raise ValueError("negative temperatures are not supported")
    if math.isinf(betaE):
        return 0.0
    x = math.exp(-betaE)
    return x / (1.0 + x)


def betaE_from_weight(p: float, excited: float | None = None) -> float:
    """Inverse of :func:`ground_weight`: ``ln(p/(1-p))`` for ``p`` in [1/2, 1].

    ``p`` alone rounds to 1.0 once ``betaE`` exceeds ~37; pass the separately
    computed ``excited`` weight to invert accurately there.
    """
    if not 0.5 <= p <= 1.0:
        raise ValueError(f"ground weight {p} outside [1/2, 1]")
    if excited is None:
        excited = 1.0 - p
    if excited == 0.0:
        return math.inf
    return math.log(p) - math.log(excited)


@dataclass(frozen=True)
class ThermalQubit:
    """Two-level Gibbs state with gap E, parametrized by ``betaE``."""

    betaE: float

    def __post_init__(self):
        if self.betaE < 0 or math.isnan(self.betaE):
            raise ValueError("betaE must be >= 0")

    @classmethod
    def from_weight(cls, p: float, excited: float | None = None) -> "ThermalQubit":
        return cls(betaE_from_weight(p, excited))

    @property
    def p(self) -> float:
        return ground_weight(self.betaE)

    @property
    def excited(self) -> float:
        return excited_weight(self.betaE)

    @property
    def kT_over_E(self) -> float:
        return math.inf if self.betaE == 0 else 1.0 / self.betaE

    def state(self) -> np.ndarray:
        return thermal_state(QUBIT, self.betaE)


def thermal_state(h: Hamiltonian, betaE: float) -> np.ndarray:
    """Gibbs state ``exp(-beta H)/Z`` (diagonal in the energy basis)."""
    if betaE < 0 or math.isnan(betaE):
        raise ValueError("betaE must be >= 0")
    levels = np.asarray(h.levels)
    if math.isinf(betaE):
        weights = (levels == levels[0]).astype(float)
    else:
        weights = np.exp(-betaE * (levels - levels[0]))
    return np.diag(weights / weights.sum()).astype(complex)


def qubit_state(p: float) -> np.ndarray:
    """Diagonal qubit ``diag(p, 1-p)``; thermal whenever ``p >= 1/2``."""
    return np.diag([p, 1.0 - p]).astype(complex)


def tensor(*ops: np.ndarray) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for op in ops:
        out = np.kron(out, op)
    return out


def check_density(rho: np.ndarray) -> np.ndarray:
    """Validate a density matrix and return it as a complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise ValueError("matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > TRACE_TOL:
        raise ValueError(f"trace {np.trace(rho).real} != 1")
    if np.linalg.eigvalsh(rho)[0] < -NEG_EIG_TOL:
        raise ValueError("matrix is not positive semidefinite")
    return rho


def spectrum_of(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues in descending order, clipped to [0, 1] within tolerance."""
    rho = np.asarray(rho, dtype=complex)
    evals = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[::-1]
    return _clip_probabilities(evals)


def _clip_probabilities(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.size and (values.min() < -NEG_EIG_TOL or values.max() > 1 + NEG_EIG_TOL):
        raise ValueError("eigenvalues outside [0, 1]; not a density matrix")
    return np.clip(values, 0.0, 1.0)


def shannon_entropy(probs) -> float:
    """Entropy in bits of a probability vector, with 0 log 0 = 0."""
    probs = _clip_probabilities(np.asarray(probs, dtype=float))
    nz = probs[probs > 0]
    return float(-np.sum(nz * np.log(nz)) / math.log(2))


def von_neumann_entropy(rho: np.ndarray) -> float:
    """``S(rho)`` in bits."""
    return shannon_entropy(spectrum_of(rho))


def entropy_nats(rho: np.ndarray) -> float:
    return von_neumann_entropy(rho) * math.log(2)


def partial_trace(rho: np.ndarray, dims: tuple[int, int], keep: int) -> np.ndarray:
    """Reduced state of subsystem ``keep`` (0 for A, 1 for B)."""
    dA, dB = dims
    rho = np.asarray(rho)
    if rho.shape != (dA * dB, dA * dB):
        raise ValueError(f"state of shape {rho.shape} does not match dims {dims}")
    r = rho.reshape(dA, dB, dA, dB)
    if keep == 0:
        return np.einsum("ijkj->ik", r)
    if keep == 1:
        return np.einsum("ijil->jl", r)
    raise ValueError("keep must be 0 or 1")


def mutual_information(rho_ab: np.ndarray, dimA: int, dimB: int) -> float:
    """``S(A) + S(B) - S(AB)`` in bits."""
    rho_ab = np.asarray(rho_ab, dtype=complex)
    if rho_ab.shape != (dimA * dimB, dimA * dimB):
        raise ValueError(f"dimension mismatch: {rho_ab.shape} vs {dimA}x{dimB}")
    rho_a = partial_trace(rho_ab, (dimA, dimB), 0)
    rho_b = partial_trace(rho_ab, (dimA, dimB), 1)
    return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho_ab)


def total_hamiltonian(hA: Hamiltonian, hB: Hamiltonian) -> np.ndarray:
    return np.kron(hA.matrix(), np.eye(hB.dim)) + np.kron(np.eye(hA.dim), hB.matrix())


def energy(rho: np.ndarray, h: np.ndarray) -> float:
    return float(np.real(np.trace(h @ rho)))


def work_cost(
    h_local_A: Hamiltonian,
    h_local_B: Hamiltonian,
    rho_final: np.ndarray,
    tau1: np.ndarray,
    tau2: np.ndarray,
) -> float:
    """Energy that must be supplied to turn ``tau1 (x) tau2`` into ``rho_final``."""
    h_tot = total_hamiltonian(h_local_A, h_local_B)
    if np.shape(rho_final) != h_tot.shape:
        raise ValueError("final state does not match the local Hamiltonians")
    if np.shape(tau1) != (h_local_A.dim,) * 2 or np.shape(tau2) != (h_local_B.dim,) * 2:
        raise ValueError("initial states do not match the local Hamiltonians")
    return energy(rho_final, h_tot) - energy(tensor(tau1, tau2), h_tot)


def free_energy(rho: np.ndarray, h: np.ndarray, bath_betaE: float) -> float:
    """``F = Tr(H rho) - S_nats(rho)/betaE`` at the given bath temperature."""
    if bath_betaE <= 0:
        raise ValueError("free energy needs a finite, positive bath inverse temperature")
    return energy(rho, h) - entropy_nats(rho) / bath_betaE
