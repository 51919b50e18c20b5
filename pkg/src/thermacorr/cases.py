"""Five parametric correlated states with locally thermal marginals.

Each case mixes thermal-qubit building blocks at a common ``betaE``:

1. ``p Phi + (1-p) tau (x) tau``
2. ``p Phi + (1-p) Psi``
3. ``p Phi + q tau (x) tau + (1-p-q) |phi+><phi+|``
4. ``p |phi+><phi+| + (1-p) tau (x) tau``
5. ``p |phi+><phi+| + q |phi-><phi-| + (1-p-q) tau (x) tau``

where ``Phi = (|00><00| + y|11><11|)/Z``, ``Psi = (|01><01| + y|10><10|)/Z``,
``|phi+-> = (|00> +- sqrt(y)|11>)/sqrt(Z)``, ``y = exp(-betaE)``, ``Z = 1 + y``.

Every case has a spectrum of the form ``{top, bottom, mu, mu}`` (case 2 is a
product spectrum outright), so preparability from two thermal qubits comes
down to the position of the degenerate pair and one polynomial condition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .criteria import batch_negativity, negativity
from .states import mutual_information, partial_trace, qubit_state, tensor, ground_weight

SAME_TEMP = "preparable-same-temp"
DIFF_TEMP = "preparable-diff-temp"
ONLY_DEGENERATE = "preparable-only-degenerate"
FORBIDDEN = "forbidden"

EXACT_TOL = 1e-12


@dataclass(frozen=True)
class CaseParams:
    case_id: int
    p: float
    q: float = 0.0
    betaE: float = 0.0

    def __post_init__(self):
        if self.case_id not in (1, 2, 3, 4, 5):
            raise ValueError(f"unknown case {self.case_id}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if not 0.0 <= self.q <= 1.0:
            raise ValueError("q must lie in [0, 1]")
        if self.case_id in (3, 5):
            if self.p + self.q > 1.0 + EXACT_TOL:
                raise ValueError("p + q must not exceed 1")
        elif self.q != 0.0:
            raise ValueError(f"case {self.case_id} takes no q parameter")
        if self.betaE < 0 or math.isnan(self.betaE):
            raise ValueError("betaE must be >= 0")

    @property
    def y(self) -> float:
        return math.exp(-self.betaE)

    @property
    def rest(self) -> float:
        return max(0.0, 1.0 - self.p - self.q)


@dataclass(frozen=True)
class CaseVerdict:
    kind: str
    betaE_pair: tuple[float, float] | None = None
    note: str = ""

    @property
    def preparable(self) -> bool:
        return self.kind in (SAME_TEMP, DIFF_TEMP)


@dataclass(frozen=True)
class Region:
    ordering: str
    entangled: bool
    note: str = ""


@dataclass
class CaseReport:
    params: CaseParams
    state: np.ndarray
    analytic_spectrum: np.ndarray
    region: Region
    verdict: CaseVerdict
    mutual_information: float = field(default=0.0)

    def to_dict(self) -> dict:
        return {
            "case": self.params.case_id,
            "p": self.params.p,
            "q": self.params.q,
            "betaE": self.params.betaE,
            "analytic_spectrum": [float(x) for x in self.analytic_spectrum],
            "ordering": self.region.ordering,
            "entangled": self.region.entangled,
            "mutual_information_bits": self.mutual_information,
            "verdict": self.verdict.kind,
            "betaE_pair": None if self.verdict.betaE_pair is None else list(self.verdict.betaE_pair),
            "note": self.verdict.note or self.region.note,
        }


# -- building blocks --------------------------------------------------------

def _blocks(betaE: float):
    y = math.exp(-betaE)
    z = 1.0 + y
    phi = np.diag([1 / z, 0, 0, y / z]).astype(complex)
    psi = np.diag([0, 1 / z, y / z, 0]).astype(complex)
    tau = qubit_state(ground_weight(betaE))
    return y, phi, psi, tensor(tau, tau)


def _pure(betaE: float, sign: int) -> np.ndarray:
    y = math.exp(-betaE)
    v = np.array([1.0, 0.0, 0.0, sign * math.sqrt(y)]) / math.sqrt(1.0 + y)
    return np.outer(v, v).astype(complex)


def case_state(params: CaseParams) -> np.ndarray:
    p, q, r = params.p, params.q, params.rest
    _, phi, psi, tt = _blocks(params.betaE)
    cid = params.case_id
    if cid == 1:
        return p * phi + (1 - p) * tt
    if cid == 2:
        return p * phi + (1 - p) * psi
    if cid == 3:
        return p * phi + q * tt + r * _pure(params.betaE, +1)
    if cid == 4:
        return p * _pure(params.betaE, +1) + (1 - p) * tt
    return p * _pure(params.betaE, +1) + q * _pure(params.betaE, -1) + r * tt


def spectrum_parts(params: CaseParams) -> tuple[float, float, float]:
    """``(top, bottom, mu)`` of the closed-form spectrum ``{top, bottom, mu, mu}``.

    Not defined for case 2, whose spectrum has no degenerate pair.
    """
    p, q, r, y = params.p, params.q, params.rest, params.y
    d = (1 + y) ** 2
    cid = params.case_id
    if cid == 1:
        return (1 + p * y) / d, y * (y + p) / d, (1 - p) * y / d
    if cid == 3:
        root = (1 + y) * math.sqrt(max(0.0, 1 + (4 * r * r - 2) * y + y * y))
        mid = 1 + 2 * y * (1 - q) + y * y
        return (mid + root) / (2 * d), (mid - root) / (2 * d), q * y / d
    if cid == 4:
        root = (1 + y) * math.sqrt((y - 1) ** 2 + 4 * p * p * y)
        mid = y * y + 2 * p * y + 1
        return (mid + root) / (2 * d), (mid - root) / (2 * d), y * (1 - p) / d
    if cid == 5:
        root = (1 + y) * math.sqrt((1 - y) ** 2 + 4 * y * (p - q) ** 2)
        return (0.5 - (2 * r * y - root) / (2 * d), 0.5 - (2 * r * y + root) / (2 * d),
                r * y / d)
    raise ValueError("case 2 spectrum is not of the degenerate-pair form")


def analytic_spectrum(params: CaseParams) -> np.ndarray:
    if params.case_id == 2:
        p, y = params.p, params.y
        vals = np.array([p, 1 - p, p * y, (1 - p) * y]) / (1 + y)
    else:
        top, bottom, mu = spectrum_parts(params)
        vals = np.array([top, bottom, mu, mu])
    return np.sort(np.clip(vals, 0.0, 1.0))[::-1]


def gp_defect(params: CaseParams) -> float:
    """``lambda_top * lambda_bottom - mu^2`` in closed form (zero iff geometric progression)."""
    p, q, y = params.p, params.q, params.y
    d = (1 + y) ** 2
    cid = params.case_id
    if cid == 1:
        return p * y / d
    if cid == 3:
        return y * ((2 * p + q) - (p + q) ** 2) / d
    if cid == 4:
        return p * (1 - p) * y / d
    if cid == 5:
        return y * ((p + q) - (p - q) ** 2) / d
    raise ValueError("case 2 has no degenerate pair")


# -- regions ----------------------------------------------------------------

def werner_threshold(betaE: float) -> float:
    """Case 4 is entangled above ``1/(1 + 2 cosh(betaE/2))``."""
    if math.isinf(betaE):
        return 0.0
    return 1.0 / (1.0 + 2.0 * math.cosh(betaE / 2))


def case3_separable(p: float, q: float, betaE: float) -> bool:
    """``cosh(betaE/2) <= q / (2(1-p-q))``."""
    r = 1.0 - p - q
    if r <= EXACT_TOL or math.isinf(betaE):
        return True
    return math.cosh(betaE / 2) <= q / (2 * r)


def case5_display_entangled(p: float, q: float, betaE: float) -> bool:
    """Two-sided sign condition ``(1+p+q)e^{h} -+ p(1 +- e^h)^2 +- q(1 -+ e^h)^2 < 0``."""
    if math.isinf(betaE):
        return False
    u = math.exp(betaE / 2)
    upper = (1 + p + q) * u - p * (1 + u) ** 2 + q * (1 - u) ** 2
    lower = (1 + p + q) * u + p * (1 - u) ** 2 - q * (1 + u) ** 2
    scale = 1e-12 * (1 + u) ** 2
    return upper < -scale or lower < -scale


def _ordering_tag(params: CaseParams) -> str:
    if params.case_id == 2:
        p, y = params.p, params.y
        return "l1>=l2>=l3>=l4" if (1 - p) >= p * y else "l1>=l3>=l2>=l4"
    _, bottom, mu = spectrum_parts(params)
    return "l1>=l2=l3>=l4" if mu >= bottom else "l1>=l4>=l2=l3"


def classify_region(params: CaseParams, neg_tol: float = 1e-12) -> Region:
    cid, p, q, b = params.case_id, params.p, params.q, params.betaE
    ordering = _ordering_tag(params)
    if cid in (1, 2):
        note = ""
        if cid == 2 and p < 0.5 and b > 0:
            note = "marginal B is not thermal for p < 1/2"
        return Region(ordering, False, note)
    if cid == 3:
        sep = case3_separable(p, q, b)
        return Region(ordering, not sep, "" if sep else "outside the separable region")
    if cid == 4:
        return Region(ordering, (not math.isinf(b)) and p > werner_threshold(b))
    ent = negativity(case_state(params), 2, 2) > neg_tol
    return Region(ordering, bool(ent))


# -- verdicts ---------------------------------------------------------------

def _betaE(weight: float) -> float:
    if weight >= 1.0:
        return math.inf
    return math.log(weight) - math.log1p(-weight)


def _ratio_betaE(num: float, den: float) -> float:
    return math.inf if den <= 0 else math.log(num) - math.log(den)


def _degenerate_pair_verdict(params: CaseParams) -> CaseVerdict:
    """Spectrum ``{top, bottom, mu, mu}`` against ``{st, s(1-t), t(1-s), (1-s)(1-t)}``.

    A middle degenerate pair forces ``s = t`` and a geometric progression; a
    lowest degenerate pair forces ``s = 1`` (``mu = 0``) or ``t = 1/2``
    (``top = bottom``).
    """
    top, bottom, mu = spectrum_parts(params)
    if mu >= bottom - EXACT_TOL:
        if abs(gp_defect(params)) <= EXACT_TOL:
            s = math.sqrt(top)
            return CaseVerdict(SAME_TEMP, (_betaE(s), _betaE(s)))
        return CaseVerdict(FORBIDDEN, note="degenerate middle pair without geometric progression")
    if mu <= EXACT_TOL:
        return CaseVerdict(DIFF_TEMP, (math.inf, _ratio_betaE(top, bottom)),
                           "zero-temperature qubit plus a thermal partner")
    if abs(top - bottom) <= EXACT_TOL:
        return CaseVerdict(DIFF_TEMP, (_betaE(2 * top), 0.0),
                           "maximally mixed qubit plus a thermal partner")
    return CaseVerdict(FORBIDDEN, note="degenerate lowest pair needs a trivial initial qubit")


def case_verdict(params: CaseParams) -> CaseVerdict:
    cid, p, q, b = params.case_id, params.p, params.q, params.betaE

    if cid == 2:
        if p >= 0.5:
            pair = (_ratio_betaE(p, 1 - p), b)
        else:
            pair = (_ratio_betaE(1 - p, p), b)
        if abs(pair[0] - pair[1]) < 1e-9 or pair[0] == pair[1]:
            return CaseVerdict(SAME_TEMP, (b, b))
        note = "" if p >= 0.5 else "spectrum matches but marginal B is not thermal"
        return CaseVerdict(DIFF_TEMP, pair, note)

    if cid == 3 and p + q >= 1.0 - EXACT_TOL and q < 1.0:
        # no pure component left: identical to case 1 with the same p
        inner = case_verdict(CaseParams(1, p, 0.0, b))
        return CaseVerdict(inner.kind, inner.betaE_pair, (inner.note + "; reduces to case 1").lstrip("; "))

    verdict = _degenerate_pair_verdict(params)
    if verdict.kind != FORBIDDEN:
        return verdict

    if cid == 1:
        if _ordering_tag(params) == "l1>=l4>=l2=l3":
            return CaseVerdict(ONLY_DEGENERATE, None,
                               "beta->0 limit only: I/2 with a ln((1+p)/(1-p))-thermal qubit")
        return CaseVerdict(FORBIDDEN, None, "geometric progression would need cosh(betaE) = -1")
    if cid == 3:
        if _ordering_tag(params) == "l1>=l2=l3>=l4":
            return CaseVerdict(FORBIDDEN, None, "geometric progression only as beta->inf (trivial)")
        return CaseVerdict(FORBIDDEN, None, "lowest pair degenerate: one initial qubit would be trivial")
    if cid == 4:
        return CaseVerdict(FORBIDDEN, None, "geometric progression would need cosh(betaE) = -1")
    return CaseVerdict(FORBIDDEN, None, "geometric progression would need p + q = (p - q)^2")


def build_case(params: CaseParams) -> CaseReport:
    state = case_state(params)
    return CaseReport(
        params=params,
        state=state,
        analytic_spectrum=analytic_spectrum(params),
        region=classify_region(params),
        verdict=case_verdict(params),
        mutual_information=max(0.0, mutual_information(state, 2, 2)),
    )


def case2_marginals(params: CaseParams) -> tuple[np.ndarray, np.ndarray]:
    rho = case_state(params)
    return partial_trace(rho, (2, 2), 0), partial_trace(rho, (2, 2), 1)


# -- parameter grids inside the regions where the impossibility claims apply --

def region_grid(case_id: int, n: int = 50, betaE_range: tuple[float, float] = (0.1, 5.0)):
    """Parameter points strictly inside the forbidden region of a case.

    Case 1: ``0 < p <= (1-e^-betaE)/2``. Case 3: separable, ``p+q < 1``, ``q < 1``.
    Case 4: ``1/(1+2cosh(betaE/2)) < p < 1``. Case 5: entangled, ``p+q < 1``.
    Case 2 (always preparable): ``1/2 <= p < 1``, ``betaE`` from 0.
    """
    betas = np.linspace(*betaE_range, n)
    points: list[CaseParams] = []
    if case_id == 1:
        for b in betas:
            pmax = (1 - math.exp(-b)) / 2
            points += [CaseParams(1, float(p), 0.0, float(b)) for p in np.linspace(pmax / n, pmax, n)]
    elif case_id == 2:
        for b in np.linspace(0.0, betaE_range[1], n):
            points += [CaseParams(2, float(p), 0.0, float(b)) for p in np.linspace(0.5, 0.99, n)]
    elif case_id == 4:
        for b in betas:
            lo = werner_threshold(b)
            ps = np.linspace(lo, 1.0, n + 2)[1:-1]
            points += [CaseParams(4, float(p), 0.0, float(b)) for p in ps]
    elif case_id in (3, 5):
        axis = np.linspace(0.0, 1.0, n + 1)[:-1]
        for b in betas:
            for p in axis:
                for q in axis:
                    if p + q >= 1.0 - 1e-9 or (case_id == 3 and q == 0.0):
                        continue
                    params = CaseParams(case_id, float(p), float(q), float(b))
                    if case_id == 5 or case3_separable(p, q, b):
                        points.append(params)
        if case_id == 5:
            negs = batch_negativity(np.stack([case_state(c) for c in points]), 2, 2)
            points = [c for c, v in zip(points, negs) if v > 1e-9]
    else:
        raise ValueError(f"unknown case {case_id}")
    return points


__all__ = [
    "CaseParams", "CaseVerdict", "CaseReport", "Region",
    "SAME_TEMP", "DIFF_TEMP", "ONLY_DEGENERATE", "FORBIDDEN",
    "analytic_spectrum", "build_case", "case_state", "case_verdict", "classify_region",
    "case3_separable", "case5_display_entangled", "werner_threshold", "gp_defect",
    "region_grid", "case2_marginals", "spectrum_parts",
]
