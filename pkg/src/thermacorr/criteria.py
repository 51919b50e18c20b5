"""Entanglement witnesses and spectral preparability tests."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import spectrum_of, von_neumann_entropy

FACTOR_RTOL = 1e-8
# floor for products of eigenvalues that are zero up to eigensolver noise
FACTOR_ATOL = 1e-13
ABSEP_TOL = 1e-12

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(SIGMA_Y, SIGMA_Y)


def partial_transpose(rho: np.ndarray, dimA: int, dimB: int) -> np.ndarray:
    """Transpose on subsystem B."""
    rho = np.asarray(rho)
    n = dimA * dimB
    if rho.shape[-2:] != (n, n):
        raise ValueError(f"state of shape {rho.shape} does not match {dimA}x{dimB}")
    lead = rho.shape[:-2]
    r = rho.reshape(*lead, dimA, dimB, dimA, dimB)
    return np.swapaxes(r, -3, -1).reshape(*lead, n, n)


def negativity(rho: np.ndarray, dimA: int, dimB: int) -> float:
    """Sum of the magnitudes of the negative eigenvalues of ``rho^{T_B}``.

    Zero exactly for PPT states; 1/2 for a two-qubit Bell state.
    """
    evals = np.linalg.eigvalsh(partial_transpose(rho, dimA, dimB))
    return float(-np.sum(evals[evals < 0]))


def batch_negativity(rhos: np.ndarray, dimA: int, dimB: int) -> np.ndarray:
    """Vectorised :func:`negativity` over a stack of states."""
    evals = np.linalg.eigvalsh(partial_transpose(rhos, dimA, dimB))
    return -np.sum(np.where(evals < 0, evals, 0.0), axis=-1)


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit state."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("concurrence is defined for two-qubit (4x4) states only")
    rho_tilde = _YY @ rho.conj() @ _YY
    # eigenvalues of rho * rho_tilde are the squares of the R-matrix eigenvalues
    ev = np.linalg.eigvals(rho @ rho_tilde)
    lam = np.sort(np.sqrt(np.clip(ev.real, 0.0, None)))[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def _as_spectrum(spec, length: int | None = None) -> np.ndarray:
    spec = np.asarray(spec, dtype=float)
    if spec.ndim != 1:
        raise ValueError("spectrum must be one-dimensional")
    if length is not None and spec.size != length:
        raise ValueError(f"expected a {length}-point spectrum, got {spec.size}")
    return np.sort(spec)[::-1]


def max_concurrence_on_orbit(spec) -> float:
    """Largest concurrence reachable from a two-qubit spectrum by a global unitary."""
    l1, l2, l3, l4 = _as_spectrum(spec, 4)
    return max(0.0, l1 - l3 - 2.0 * math.sqrt(max(l2 * l4, 0.0)))


def absep_margin(spec, d: int) -> float:
    """``lambda_{2d-1} + 2 sqrt(lambda_{2d-2} lambda_{2d}) - lambda_1``; >= 0 means AbSEP."""
    lam = _as_spectrum(spec, 2 * d)
    if d < 2:
        raise ValueError("need d >= 2")
    n = 2 * d
    return float(lam[n - 2] + 2.0 * math.sqrt(max(lam[n - 3] * lam[n - 1], 0.0)) - lam[0])


def is_absolutely_separable_2xd(spec, d: int, tol: float = ABSEP_TOL) -> bool:
    """Separable under every global unitary on ``C^2 (x) C^d``."""
    return absep_margin(spec, d) >= -tol


@dataclass(frozen=True)
class PreparabilityVerdict:
    preparable: bool
    s: float | None = None
    t: float | None = None
    same_temperature: bool = False
    gp_holds: bool = False
    middle_degenerate: bool = False

    def betaE_pair(self) -> tuple[float, float] | None:
        if not self.preparable:
            return None
        return (_weight_to_betaE(self.s), _weight_to_betaE(self.t))


def _weight_to_betaE(w: float) -> float:
    if w >= 1.0:
        return math.inf
    return math.log(w) - math.log1p(-w)


def _close(a: float, b: float, rtol: float) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b)) + FACTOR_ATOL


def preparable_from_thermal_pair(spec, rtol: float = FACTOR_RTOL) -> PreparabilityVerdict:
    """Decide whether a two-qubit spectrum equals that of ``tau_s (x) tau_t``.

    With ``s >= t >= 1/2`` the sorted product spectrum is
    ``(st, s(1-t), t(1-s), (1-s)(1-t))``, so ``lambda_1 lambda_4 = lambda_2 lambda_3``
    is necessary and ``s, t`` are the roots of
    ``x^2 - (1 + lambda_1 - lambda_4) x + lambda_1``.
    """
    lam = _as_spectrum(spec, 4)
    l1, l2, l3, l4 = lam
    gp = _close(l1 * l4, l2 * l2, rtol)
    middle = _close(l2, l3, rtol)
    if not _close(l1 * l4, l2 * l3, rtol):
        return PreparabilityVerdict(False, gp_holds=gp, middle_degenerate=middle)

    b = 1.0 + l1 - l4
    disc = b * b - 4.0 * l1
    if disc < -rtol * b * b:
        return PreparabilityVerdict(False, gp_holds=gp, middle_degenerate=middle)
    # b^2 - 4 lambda_1 = (s - t)^2 = (lambda_2 - lambda_3)^2 once the factorization holds;
    # the difference form avoids cancellation near a double root
    root = l2 - l3
    s = min(1.0, 0.5 * (b + root))
    t = 0.5 * (b - root)
    if t < 0.5:
        if t < 0.5 - 1e-9:
            return PreparabilityVerdict(False, gp_holds=gp, middle_degenerate=middle)
        t = 0.5

    products = np.sort([s * t, s * (1 - t), t * (1 - s), (1 - s) * (1 - t)])[::-1]
    if np.max(np.abs(products - lam)) > 1e-9:
        return PreparabilityVerdict(False, gp_holds=gp, middle_degenerate=middle)
    same = abs(s - t) < 1e-8 or root < 1e-8
    return PreparabilityVerdict(True, s, t, same, gp, middle)


def entropy_balance_holds(sigmaA: np.ndarray, sigmaB: np.ndarray, rho_f: np.ndarray,
                          tol: float = 1e-9) -> bool:
    """Whether ``S(rho_f) = S(sigmaA) + S(sigmaB)``, as any unitary image must satisfy."""
    lhs = von_neumann_entropy(sigmaA) + von_neumann_entropy(sigmaB)
    return abs(von_neumann_entropy(rho_f) - lhs) < tol


def state_preparability(rho: np.ndarray, rtol: float = FACTOR_RTOL) -> PreparabilityVerdict:
    return preparable_from_thermal_pair(spectrum_of(rho), rtol)
