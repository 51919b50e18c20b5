"""Cross-check suites: analytic verdicts against oracles and closed forms against numerics."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .cases import CaseParams, analytic_spectrum, case2_marginals, case_state, case_verdict, region_grid
from .criteria import (
    entropy_balance_holds,
    is_absolutely_separable_2xd,
    preparable_from_thermal_pair,
    state_preparability,
)
from .entangler import (
    UnitaryPlan,
    apply_entangler,
    marginal_ground_weights,
    marginal_temperatures,
    product_weights,
)
from .oracle import OracleConfig, grid_preparability, oracle_entangleable
from .states import ground_weight, partial_trace, qubit_state, spectrum_of, tensor, thermal_state, QUBIT

N_SPECTRA = 1000
INVARIANT_TOL = 1e-9
SUITES = ("cases", "prep", "absep", "invariants")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "ok": self.ok,
                "failures": self.failures[:20], "failure_count": len(self.failures)}


def random_spectra(count: int, seed: int) -> np.ndarray:
    """Half Dirichlet-random 4-point spectra, half exact thermal products, shuffled."""
    rng = np.random.default_rng(seed)
    n_prod = count // 2
    st = np.sort(rng.uniform(0.5, 1.0, size=(n_prod, 2)), axis=1)[:, ::-1]
    s, t = st[:, 0], st[:, 1]
    prods = np.stack([s * t, s * (1 - t), t * (1 - s), (1 - s) * (1 - t)], axis=1)
    rand = rng.dirichlet(np.ones(4), size=count - n_prod)
    spectra = np.concatenate([prods, rand])
    return spectra[rng.permutation(count)]


def verify_cases(n: int = 50) -> SuiteResult:
    res = SuiteResult("cases")
    for cid in (1, 3, 4, 5):
        for params in region_grid(cid, n):
            res.checked += 1
            v = case_verdict(params)
            numeric = state_preparability(case_state(params))
            if v.preparable or numeric.preparable:
                res.failures.append(f"case {cid} {params}: analytic {v.kind}, numeric {numeric.preparable}")
    for params in region_grid(2, n):
        res.checked += 1
        v = case_verdict(params)
        if not v.preparable:
            res.failures.append(f"case 2 {params}: {v.kind}")
            continue
        residual = case2_reconstruction_residual(params)
        if residual >= 1e-10:
            res.failures.append(f"case 2 {params}: residual {residual:.3g}")
    return res


def case2_reconstruction_residual(params: CaseParams) -> float:
    """Spectral distance between a Case 2 state and the product of its reported thermal pair."""
    b1, b2 = case_verdict(params).betaE_pair
    product = tensor(thermal_state(QUBIT, b1), thermal_state(QUBIT, b2))
    return float(np.max(np.abs(spectrum_of(product) - spectrum_of(case_state(params)))))


def verify_prep(seed: int, count: int = N_SPECTRA, cfg: OracleConfig | None = None) -> SuiteResult:
    cfg = cfg or OracleConfig(seed=seed)
    res = SuiteResult("prep")
    for spec in random_spectra(count, seed):
        res.checked += 1
        analytic = preparable_from_thermal_pair(spec).preparable
        oracle = grid_preparability(spec, cfg)
        if analytic != oracle.preparable:
            res.failures.append(f"{spec.tolist()}: analytic {analytic}, oracle residual {oracle.residual:.3g}")
    return res


def verify_absep(seed: int, count: int = N_SPECTRA, cfg: OracleConfig | None = None) -> SuiteResult:
    cfg = cfg or OracleConfig(seed=seed)
    res = SuiteResult("absep")
    for spec in random_spectra(count, seed + 1):
        res.checked += 1
        analytic = not is_absolutely_separable_2xd(spec, 2)
        oracle = oracle_entangleable(spec, 2, 2, cfg)
        if analytic != oracle:
            res.failures.append(f"{spec.tolist()}: analytic entangleable {analytic}, oracle {oracle}")
    return res


STANDARD_P = np.linspace(0.5, 1.0, 21)
STANDARD_THETA = np.linspace(0.0, 50.0, 21)


def verify_invariants(tol: float = INVARIANT_TOL) -> SuiteResult:
    res = SuiteResult("invariants")
    for perm in itertools.permutations(range(4)):
        res.checked += 1
        u = UnitaryPlan(1.3, perm).matrix()
        if np.max(np.abs(u.conj().T @ u - np.eye(4))) > tol:
            res.failures.append(f"plan {perm} not unitary")
        for p in STANDARD_P:
            for theta in STANDARD_THETA:
                plan = UnitaryPlan(float(theta), perm)
                rho = apply_entangler(plan, float(p))
                tau = qubit_state(float(p))
                res.checked += 1
                spec_err = np.max(np.abs(spectrum_of(rho) - np.sort(product_weights(float(p)))[::-1]))
                if spec_err > tol:
                    res.failures.append(f"{perm} p={p} theta={theta}: spectrum moved by {spec_err:.3g}")
                if not entropy_balance_holds(tau, tau, rho, tol):
                    res.failures.append(f"{perm} p={p} theta={theta}: entropy balance broken")
                gA, gB = marginal_ground_weights(plan, float(p))
                tA = partial_trace(rho, (2, 2), 0)[0, 0].real
                tB = partial_trace(rho, (2, 2), 1)[0, 0].real
                if abs(gA - tA) > tol or abs(gB - tB) > tol:
                    res.failures.append(f"{perm} p={p} theta={theta}: marginal closed form off")
                if perm[0] == 0 and p < 1.0:
                    bA, bB = marginal_temperatures(plan, float(p))
                    if abs(ground_weight(bA) - tA) > tol or abs(ground_weight(bB) - tB) > tol:
                        res.failures.append(f"{perm} p={p} theta={theta}: marginal temperature off")
    return res


def run_suite(name: str, seed: int = 0, samples: int = 2000, grid: int = 50,
              match_tol: float = 1e-6) -> list[SuiteResult]:
    cfg = OracleConfig(samples=samples, seed=seed, match_tol=match_tol)
    names = SUITES if name == "all" else (name,)
    out = []
    for suite in names:
        if suite == "cases":
            out.append(verify_cases(grid))
        elif suite == "prep":
            out.append(verify_prep(seed, cfg=cfg))
        elif suite == "absep":
            out.append(verify_absep(seed, cfg=cfg))
        elif suite == "invariants":
            out.append(verify_invariants())
        else:
            raise ValueError(f"unknown suite {suite}")
    return out
