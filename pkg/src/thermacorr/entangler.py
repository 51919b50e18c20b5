"""One-parameter entangling unitaries acting on two copies of a thermal qubit.

The family maps the product basis onto

    |phi_00> = a|00> + b|11>      |phi_01> = a|01> + b|10>
    |phi_10> = b|01> - a|10>      |phi_11> = b|00> - a|11>

with ``a = 1/sqrt(1+e^-theta)`` and ``b = e^(-theta/2)/sqrt(1+e^-theta)``.
A plan fixes ``theta`` and which input label goes to which ``|phi_k>``.
Labels are indexed 00, 01, 10, 11 -> 0, 1, 2, 3 throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .criteria import batch_negativity
from .states import partial_trace

LABELS = ("00", "01", "10", "11")

IDENTITY = (0, 1, 2, 3)
SWAP = (0, 2, 1, 3)
FLIP = (3, 2, 1, 0)
# thermal-unequal plan carrying beta' on A and beta'' on B
FIGURE_PLAN = (0, 1, 3, 2)

THETA_MAX = 50.0


def coefficients(theta: float) -> tuple[float, float]:
    """``(a, b)`` for a given ``theta``; ``theta = inf`` gives the identity limit."""
    if theta < 0:
        raise ValueError("theta must be >= 0")
    u = math.exp(-theta)
    return 1.0 / math.sqrt(1.0 + u), math.sqrt(u / (1.0 + u))


def phi_basis(theta: float) -> np.ndarray:
    """Columns are ``|phi_00>, |phi_01>, |phi_10>, |phi_11>``."""
    a, b = coefficients(theta)
    return np.array(
        [
            [a, 0, 0, b],
            [0, a, b, 0],
            [0, b, -a, 0],
            [b, 0, 0, -a],
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class UnitaryPlan:
    theta: float
    perm: tuple[int, ...] = IDENTITY

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2, 3]:
            raise ValueError(f"{self.perm} is not a permutation of 0..3")
        if self.theta < 0 or math.isnan(self.theta):
            raise ValueError("theta must be >= 0")
        object.__setattr__(self, "perm", tuple(int(k) for k in self.perm))

    def matrix(self) -> np.ndarray:
        """Unitary sending basis label ``i`` to ``|phi_{perm[i]}>``."""
        return phi_basis(self.theta)[:, list(self.perm)]

    def describe(self) -> str:
        return ", ".join(f"|{LABELS[i]}>->|phi_{LABELS[k]}>" for i, k in enumerate(self.perm))


def product_weights(p: float) -> np.ndarray:
    """Diagonal of ``tau^(x)2`` in the 00, 01, 10, 11 order."""
    q = 1.0 - p
    return np.array([p * p, p * q, p * q, q * q])


def _check_p(p: float) -> None:
    if not 0.5 <= p <= 1.0:
        raise ValueError(f"ground weight {p} outside [1/2, 1]")


def apply_entangler(plan: UnitaryPlan, p: float) -> np.ndarray:
    """``U tau^(x)2 U^dagger`` for the thermal qubit with ground weight ``p``."""
    _check_p(p)
    u = plan.matrix()
    return (u * product_weights(p)) @ u.conj().T


def marginal_ground_weights(plan: UnitaryPlan, p: float) -> tuple[float, float]:
    """Closed-form ground populations of the A and B marginals."""
    a, b = coefficients(plan.theta)
    w = np.zeros(4)
    w[list(plan.perm)] = product_weights(p)
    a2, b2 = a * a, b * b
    gA = (w[0] + w[1]) * a2 + (w[2] + w[3]) * b2
    gB = (w[0] + w[2]) * a2 + (w[1] + w[3]) * b2
    return float(gA), float(gB)


def _log_ratio(num: float, den: float) -> float:
    if den == 0.0:
        return math.inf
    return math.log(num) - math.log(den)


def beta_prime(p: float, theta: float) -> float:
    """Marginal ``betaE`` of the equal-temperature plans.

    ``ln[(p + (1-p) e^-theta) / (p e^-theta + 1 - p)]``; runs from 0 at
    ``theta = 0`` to the input ``ln(p/(1-p))`` as ``theta -> inf``.
    """
    u = math.exp(-theta)
    return _log_ratio(p + (1 - p) * u, p * u + (1 - p))


def beta_double_prime(p: float, theta: float) -> float:
    """The second marginal ``betaE`` produced by the four unequal plans."""
    u = math.exp(-theta)
    same = p * p + (1 - p) ** 2
    cross = 2 * p * (1 - p)
    return _log_ratio(same + cross * u, same * u + cross)


def beta_prime_alternative(p: float, theta: float) -> float:
    """Alternative closed form ``ln[((1-p)^2 e^-theta + p)/(p^2 e^-theta + 1 - p)]``.

    Kept for comparison only: it agrees with the partial trace at
    ``theta = 0`` and ``theta -> inf`` but not in between.
    """
    u = math.exp(-theta)
    return _log_ratio((1 - p) ** 2 * u + p, p * p * u + (1 - p))


def _lowest_target(perm: tuple[int, ...]) -> int:
    return perm[3]


def marginal_temperatures(plan: UnitaryPlan, p: float) -> tuple[float, float]:
    """``(betaE_A, betaE_B)`` of the entangled output for a thermal-marginal plan."""
    _check_p(p)
    if plan.perm[0] != 0:
        raise ValueError(f"plan {plan.describe()} does not give thermal marginals")
    bp = beta_prime(p, plan.theta)
    target = _lowest_target(plan.perm)
    if target == 3:
        return bp, bp
    bpp = beta_double_prime(p, plan.theta)
    if target == 1:
        return bpp, bp
    return bp, bpp


# sampled (p, theta) points for the numerical permutation census
_CENSUS_P = (0.55, 0.65, 0.75, 0.85, 0.95, 0.99)
_CENSUS_THETA = (0.25, 0.5, 1.0, 2.0, 5.0, 20.0)


def classify_permutation(perm: tuple[int, ...], tol: float = 1e-12) -> str:
    """``thermal-equal``, ``thermal-unequal`` or ``non-thermal``, from partial traces."""
    thermal = True
    equal = True
    for p in _CENSUS_P:
        for theta in _CENSUS_THETA:
            rho = apply_entangler(UnitaryPlan(theta, perm), p)
            gA = partial_trace(rho, (2, 2), 0)[0, 0].real
            gB = partial_trace(rho, (2, 2), 1)[0, 0].real
            if gA < 0.5 - tol or gB < 0.5 - tol:
                thermal = False
            if abs(gA - gB) > tol:
                equal = False
    if not thermal:
        return "non-thermal"
    return "thermal-equal" if equal else "thermal-unequal"


def enumerate_permutations() -> list[tuple[tuple[int, ...], str]]:
    """All 24 label permutations with their computed marginal class."""
    return [(perm, classify_permutation(perm)) for perm in itertools.permutations(range(4))]


def batch_states(plan_perm: tuple[int, ...], ps: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Output states on a (p, theta) grid, shape ``(len(ps), len(thetas), 4, 4)``."""
    us = np.stack([phi_basis(t)[:, list(plan_perm)] for t in thetas])
    weights = np.stack([product_weights(p) for p in ps])
    return np.einsum("tik,pk,tjk->ptij", us, weights, us.conj())


FIGURE1_HEADER = ("p", "theta", "betaE_A", "betaE_B", "negativity", "thermal_order", "entangled")


def figure1_grid(p_steps: int, theta_steps: int, theta_max: float = THETA_MAX,
                 neg_tol: float = 1e-12) -> list[dict]:
    """Marginal temperatures and negativity of the unequal plan over ``[1/2,1] x [0, theta_max]``."""
    if p_steps < 2 or theta_steps < 2:
        raise ValueError("need at least 2 steps per axis")
    ps = np.linspace(0.5, 1.0, p_steps)
    thetas = np.linspace(0.0, theta_max, theta_steps)
    negs = batch_negativity(batch_states(FIGURE_PLAN, ps, thetas), 2, 2)
    rows = []
    for i, p in enumerate(ps):
        for j, theta in enumerate(thetas):
            bA, bB = marginal_temperatures(UnitaryPlan(theta, FIGURE_PLAN), p)
            rows.append({
                "p": float(p),
                "theta": float(theta),
                "betaE_A": bA,
                "betaE_B": bB,
                "negativity": float(negs[i, j]),
                "thermal_order": bool(bA >= bB - 1e-10),
                "entangled": bool(negs[i, j] > neg_tol),
            })
    return rows
