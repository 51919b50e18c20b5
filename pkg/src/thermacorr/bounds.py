"""Temperature thresholds for creating entanglement from thermal qubits and qudits.

Everything here follows from the 2 x d absolute-separability inequality
``lambda_1 <= lambda_{2d-1} + 2 sqrt(lambda_{2d-2} lambda_{2d})`` applied to
product spectra of thermal states.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .criteria import is_absolutely_separable_2xd
from .states import Hamiltonian, betaE_from_weight, spectrum_of, tensor, thermal_state

XTOL = 1e-16
RTOL = 4 * np.finfo(float).eps


@dataclass(frozen=True)
class ThresholdReport:
    p_star: float
    betaE_star: float
    kT_over_E: float


@dataclass(frozen=True)
class ResourceClass:
    p: float
    is_free: bool
    radius: float

    @property
    def label(self) -> str:
        return "free" if self.is_free else "resource"


def _symmetric_boundary(p: float) -> float:
    # >0 once tau(p)^(x)2 violates the absolute-separability inequality
    return p * p - p * (1 - p) - 2 * (1 - p) * math.sqrt(p * (1 - p))


@functools.lru_cache(maxsize=1)
def symmetric_threshold() -> ThresholdReport:
    """Ground weight above which two copies of a thermal qubit can be entangled."""
    p_star = bisect(_symmetric_boundary, 0.5, 1.0, xtol=XTOL, rtol=RTOL)
    betaE_star = betaE_from_weight(p_star)
    return ThresholdReport(p_star, betaE_star, 1.0 / betaE_star)


def q_threshold_same_branch(p: float) -> float:
    """Smallest partner weight ``q <= p`` entangling ``tau(p) (x) tau(q)``.

    Only meaningful when the result is <= p, i.e. for ``p >= p_star``.
    """
    if not 0.5 <= p <= 1.0:
        raise ValueError("p must lie in [1/2, 1]")
    if p == 0.5:
        return 1.0
    r = 2.0 * math.sqrt(p * (1 - p))
    return r / (2 * p - 1 + r)


def _mixed_violation(p: float, q: float) -> float:
    # pq - p(1-q) - 2(1-p) sqrt(q(1-q)); positive means entangleable, q >= p
    return p * (2 * q - 1) - 2 * (1 - p) * math.sqrt(q * (1 - q))


def q_min_mixed_branch(p: float) -> float:
    """Smallest ``q >= p`` for which ``tau(p) (x) tau(q)`` leaves the AbSEP set."""
    if not 0.5 <= p <= 1.0:
        raise ValueError("p must lie in [1/2, 1]")
    if _mixed_violation(p, p) >= 0:
        return p
    return bisect(lambda q: _mixed_violation(p, q), p, 1.0, xtol=XTOL, rtol=RTOL)


def inverted_mixed_condition(p: float, q: float) -> bool:
    """Sign-inverted form ``(1-2q)/sqrt(q(1-q)) <= 2(1-p)/p`` of the mixed-branch condition.

    Holds for every ``q > 1/2``, so it cannot separate entangleable pairs;
    :func:`q_min_mixed_branch` uses the underlying inequality instead.
    """
    return (1 - 2 * q) / math.sqrt(q * (1 - q)) <= 2 * (1 - p) / p


def qudit_betaE_bound(d: int) -> float:
    """``ln 3 / (2d - 3)``; for qubits the symmetric two-copy threshold."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if d == 2:
        return symmetric_threshold().betaE_star
    return math.log(3) / (2 * d - 3)


def qudit_projection_state(d: int, betaE: float) -> np.ndarray:
    """``tau_beta (x) tau'`` where ``tau'`` keeps only levels 0 and d-1 of a second copy."""
    if d < 3:
        raise ValueError("the projection protocol needs d >= 3")
    if betaE <= 0:
        raise ValueError("betaE must be > 0")
    qudit = thermal_state(Hamiltonian.ladder(d), betaE)
    edge = thermal_state(Hamiltonian((0.0, float(d - 1))), betaE)
    return tensor(qudit, edge)


def projection_spectrum(d: int, betaE: float) -> np.ndarray:
    """Sorted spectrum of :func:`qudit_projection_state`, built from exponents directly."""
    if d < 3:
        raise ValueError("the projection protocol needs d >= 3")
    if math.isinf(betaE):
        out = np.zeros(2 * d)
        out[0] = 1.0
        return out
    exps = np.concatenate([np.arange(d), np.arange(d) + (d - 1)])
    w = np.exp(-betaE * exps.astype(float))
    return np.sort(w / w.sum())[::-1]


def projection_entangleable(d: int, betaE: float) -> bool:
    return not is_absolutely_separable_2xd(projection_spectrum(d, betaE), d)


def projection_chain_holds(d: int, betaE: float) -> bool:
    """Simplified form ``1 >= 3 exp(-(2d-3) betaE)`` of the violation condition."""
    return 1.0 >= 3.0 * math.exp(-(2 * d - 3) * betaE)


def classify(p: float) -> ResourceClass:
    """Free (never entangleable in pairs) or resource, by ground weight."""
    if not 0.5 <= p <= 1.0:
        raise ValueError("p must lie in [1/2, 1]")
    return ResourceClass(p, p <= symmetric_threshold().p_star, p - 0.5)


def product_spectrum(p: float, q: float) -> np.ndarray:
    return np.sort([p * q, p * (1 - q), q * (1 - p), (1 - p) * (1 - q)])[::-1]


def figure3_rows(steps: int = 101) -> list[dict]:
    ps = np.linspace(0.5, 1.0, steps)
    return [
        {
            "p": float(p),
            "q_threshold": q_threshold_same_branch(float(p)),
            "q_equals_p": float(p),
            "q_min_mixed": q_min_mixed_branch(float(p)),
        }
        for p in ps
    ]


def figure4_rows(d_max: int = 50) -> list[dict]:
    return [{"d": d, "betaE_bound": qudit_betaE_bound(d)} for d in range(3, d_max + 1)]


def numeric_projection_spectrum(d: int, betaE: float) -> np.ndarray:
    return spectrum_of(qudit_projection_state(d, betaE))
