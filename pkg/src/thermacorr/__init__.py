"""Creating and sharing correlations and entanglement between thermal qubits."""

from .bounds import classify, qudit_betaE_bound, symmetric_threshold
from .cases import CaseParams, build_case, case_verdict
from .criteria import (
    concurrence,
    is_absolutely_separable_2xd,
    negativity,
    preparable_from_thermal_pair,
)
from .entangler import UnitaryPlan, apply_entangler, enumerate_permutations, marginal_temperatures
from .protocol import FrontierError, run_protocol, temperature_gap_frontier
from .states import Hamiltonian, ThermalQubit, mutual_information, thermal_state

__version__ = "0.1.0"

__all__ = [
    "CaseParams", "FrontierError", "Hamiltonian", "ThermalQubit", "UnitaryPlan",
    "apply_entangler", "build_case", "case_verdict", "classify", "concurrence",
    "enumerate_permutations", "is_absolutely_separable_2xd", "marginal_temperatures",
    "mutual_information", "negativity", "preparable_from_thermal_pair", "qudit_betaE_bound",
    "run_protocol", "symmetric_threshold", "temperature_gap_frontier", "thermal_state",
]
