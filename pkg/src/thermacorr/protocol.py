"""Cool, entangle, teleport: sharing an entangled state with locally thermal marginals.

Alice cools two qubits from her bath (``beta1E``) to ``cooled_betaE``, applies
an entangling plan so the marginals come out at ``beta1E`` and ``beta2E``, and
teleports the ``beta2E`` half to Bob over a pre-shared maximally entangled pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .criteria import negativity
from .entangler import (
    FIGURE_PLAN,
    IDENTITY,
    THETA_MAX,
    UnitaryPlan,
    apply_entangler,
    beta_double_prime,
    beta_prime,
    marginal_temperatures,
)
from .states import (
    QUBIT,
    betaE_from_weight,
    energy,
    free_energy,
    ground_weight,
    tensor,
    thermal_state,
    total_hamiltonian,
)

# plan with beta'' on A and beta' on B
_REVERSED_PLAN = (0, 3, 2, 1)


class FrontierError(ValueError):
    """Requested pair of marginal temperatures is out of reach of the entangler family."""


@dataclass(frozen=True)
class LedgerStep:
    label: str
    delta_F: float
    delta_E: float
    resources: dict = field(default_factory=dict)


@dataclass
class CostLedger:
    beta1E: float
    beta2E: float
    beta_prime_E: float
    theta: float
    perm: tuple[int, ...]
    steps: list[LedgerStep]
    final_state: np.ndarray
    achieved: tuple[float, float]
    negativity: float

    @property
    def total_delta_E(self) -> float:
        return sum(s.delta_E for s in self.steps)

    def to_dict(self) -> dict:
        return {
            "beta1E": self.beta1E,
            "beta2E": self.beta2E,
            "beta_prime_E": self.beta_prime_E,
            "theta": self.theta,
            "perm": list(self.perm),
            "achieved_marginals": list(self.achieved),
            "negativity": self.negativity,
            "entangled": self.negativity > 1e-12,
            "steps": [
                {"label": s.label, "delta_F": s.delta_F, "delta_E": s.delta_E,
                 "resources": s.resources}
                for s in self.steps
            ],
            "total_delta_E": self.total_delta_E,
        }


def max_gap(betaE_hi: float) -> float:
    """Largest ``beta' - beta''`` reachable while the colder marginal sits at ``betaE_hi``.

    Attained as ``theta -> inf`` with the input cooled exactly to ``betaE_hi``;
    tends to ``ln 2`` as ``betaE_hi`` grows.
    """
    if math.isinf(betaE_hi):
        return math.log(2)
    x2 = math.exp(-2 * betaE_hi)
    return math.log(2) - math.log1p(x2)


def _theta_for(p: float, target: float) -> float:
    """Solve ``beta_prime(p, theta) = target`` for theta in closed form."""
    e = math.exp(target)
    num = p - e * (1 - p)
    den = e * p - (1 - p)
    if den <= 0:
        return 0.0
    u = num / den
    if u <= 0:
        return math.inf
    return max(0.0, -math.log(min(u, 1.0)))


def _solve_unequal(b_hi: float, b_lo: float) -> tuple[float, float]:
    p_min = ground_weight(b_hi)

    def excess(p: float) -> float:
        return beta_double_prime(p, _theta_for(p, b_hi)) - b_lo

    lo, hi = p_min, 1.0
    if excess(lo) >= 0:
        return lo, _theta_for(lo, b_hi)
    p = brentq(excess, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    return p, _theta_for(p, b_hi)


def run_protocol(beta1E: float, beta2E: float, cooled_betaE: float | None = None) -> CostLedger:
    """Plan and cost the three protocol steps for target marginals ``(beta1E, beta2E)``.

    ``cooled_betaE`` only matters for equal targets, where the entangler leaves
    one degree of freedom; it defaults to ``beta1E + 1``.
    """
    for b in (beta1E, beta2E):
        if b < 0 or not math.isfinite(b):
            raise ValueError("target inverse temperatures must be finite and >= 0")
    b_hi, b_lo = max(beta1E, beta2E), min(beta1E, beta2E)

    if b_hi == b_lo:
        cooled = b_hi + 1.0 if cooled_betaE is None else cooled_betaE
        if cooled < b_hi:
            raise FrontierError("cooled temperature must be at least as cold as the target")
        p = ground_weight(cooled)
        theta = _theta_for(p, b_hi)
        perm = IDENTITY
    else:
        gap = b_hi - b_lo
        limit = max_gap(b_hi)
        if gap > limit:
            raise FrontierError(
                f"temperature gap {gap:.6g} exceeds the reachable {limit:.6g} "
                f"(never above ln 2 = {math.log(2):.6g})"
            )
        p, theta = _solve_unequal(b_hi, b_lo)
        cooled = betaE_from_weight(p)
        perm = FIGURE_PLAN if beta1E >= beta2E else _REVERSED_PLAN

    plan = UnitaryPlan(theta, perm)
    rho = apply_entangler(plan, p)
    achieved = marginal_temperatures(plan, p)

    h2 = total_hamiltonian(QUBIT, QUBIT)
    tau1 = thermal_state(QUBIT, beta1E)
    start = tensor(tau1, tau1)
    cooled_state = tensor(thermal_state(QUBIT, cooled), thermal_state(QUBIT, cooled))
    bath = beta1E if beta1E > 0 else 0.0

    if bath > 0:
        dF_cool = free_energy(cooled_state, h2, bath) - free_energy(start, h2, bath)
    else:
        # infinite-temperature bath: any entropy reduction costs unbounded free energy
        dF_cool = 0.0 if cooled == 0 else math.inf
    dE_cool = energy(cooled_state, h2) - energy(start, h2)
    dE_ent = energy(rho, h2) - energy(cooled_state, h2)

    steps = [
        LedgerStep("cool", dF_cool, dE_cool),
        LedgerStep("entangle", dE_ent, dE_ent),
        LedgerStep("teleport", 0.0, 0.0, {"ebits": 1, "cbits": 2}),
    ]
    return CostLedger(
        beta1E=beta1E,
        beta2E=beta2E,
        beta_prime_E=cooled,
        theta=theta,
        perm=perm,
        steps=steps,
        final_state=rho,
        achieved=achieved,
        negativity=negativity(rho, 2, 2),
    )


FRONTIER_HEADER = ("p", "theta", "beta1E", "beta2E", "gap")


def temperature_gap_frontier(p_steps: int, theta_steps: int,
                             theta_max: float = THETA_MAX) -> tuple[list[dict], float]:
    """``beta' - beta''`` over ``p in [1/2, 1]``, ``theta in [0, theta_max]``, and its sup."""
    if p_steps < 2 or theta_steps < 2:
        raise ValueError("need at least 2 steps per axis")
    rows = []
    sup = -math.inf
    for p in np.linspace(0.5, 1.0, p_steps):
        for theta in np.linspace(0.0, theta_max, theta_steps):
            b1 = beta_prime(float(p), float(theta))
            b2 = beta_double_prime(float(p), float(theta))
            gap = b1 - b2
            sup = max(sup, gap)
            rows.append({"p": float(p), "theta": float(theta), "beta1E": b1, "beta2E": b2,
                         "gap": gap})
    return rows, sup
