import json
import math

import numpy as np
import pytest

from thermacorr.entangler import IDENTITY, beta_double_prime, beta_prime
from thermacorr.protocol import (
    FRONTIER_HEADER,
    FrontierError,
    max_gap,
    run_protocol,
    temperature_gap_frontier,
)
from thermacorr.states import (
    QUBIT,
    energy,
    partial_trace,
    tensor,
    thermal_state,
    total_hamiltonian,
    work_cost,
)

H2 = total_hamiltonian(QUBIT, QUBIT)


def marginal_betaE(rho, keep):
    g = partial_trace(rho, (2, 2), keep)[0, 0].real
    return math.log(g) - math.log1p(-g)


def test_infinite_temperature_targets():
    ledger = run_protocol(0.0, 0.0)
    assert ledger.theta == 0.0
    assert ledger.achieved == (pytest.approx(0.0, abs=1e-14),) * 2
    rho = ledger.final_state
    np.testing.assert_allclose(partial_trace(rho, (2, 2), 0), np.eye(2) / 2, atol=1e-14)
    # Bell-diagonal: only |00>,|11> and |01>,|10> coherences survive
    assert abs(rho[0, 1]) < 1e-14 and abs(rho[0, 2]) < 1e-14


def test_equal_targets_use_equal_plan():
    for b in (0.3, 1.0, 2.5):
        ledger = run_protocol(b, b)
        assert ledger.perm == IDENTITY
        assert ledger.achieved[0] == pytest.approx(b, abs=1e-10)
        assert ledger.achieved[1] == pytest.approx(b, abs=1e-10)
        tau_c = thermal_state(QUBIT, ledger.beta_prime_E)
        step2 = ledger.steps[1].delta_E
        assert step2 == pytest.approx(work_cost(QUBIT, QUBIT, ledger.final_state, tau_c, tau_c), abs=1e-12)


def test_step_definitions():
    ledger = run_protocol(1.5, 1.2)
    b1, b2, bc = ledger.beta1E, ledger.beta2E, ledger.beta_prime_E
    t1, t2, tc = (thermal_state(QUBIT, b) for b in (b1, b2, bc))
    expected2 = energy(tensor(t1, t2), H2) - energy(tensor(tc, tc), H2)
    assert ledger.steps[1].delta_E == pytest.approx(expected2, abs=1e-12)
    labels = [s.label for s in ledger.steps]
    assert labels == ["cool", "entangle", "teleport"]
    assert ledger.steps[2].resources == {"ebits": 1, "cbits": 2}
    assert ledger.steps[0].delta_F > 0


def test_ledger_additivity():
    for b1, b2 in [(1.0, 1.0), (2.0, 1.5), (1.5, 2.0), (3.0, 2.5), (0.4, 0.2)]:
        ledger = run_protocol(b1, b2)
        tau1 = thermal_state(QUBIT, b1)
        direct = work_cost(QUBIT, QUBIT, ledger.final_state, tau1, tau1)
        total = ledger.steps[0].delta_E + ledger.steps[1].delta_E
        assert total == pytest.approx(direct, abs=1e-9)


@pytest.mark.parametrize("b1,b2", [(2.0, 1.5), (1.5, 2.0), (0.9, 0.5), (5.0, 4.4), (1.0, 1.0)])
def test_round_trip_marginals(b1, b2):
    ledger = run_protocol(b1, b2)
    rho = ledger.final_state
    assert marginal_betaE(rho, 0) == pytest.approx(b1, abs=1e-6)
    assert marginal_betaE(rho, 1) == pytest.approx(b2, abs=1e-6)
    assert ledger.negativity > 0


def test_frontier_violation():
    with pytest.raises(FrontierError):
        run_protocol(3.0, 2.3)
    with pytest.raises(FrontierError):
        run_protocol(1.0, 1.0 - max_gap(1.0) - 1e-3)
    ledger = run_protocol(1.0, 1.0 - max_gap(1.0) + 1e-3)
    assert ledger.achieved[1] == pytest.approx(1.0 - max_gap(1.0) + 1e-3, abs=1e-6)
    with pytest.raises(ValueError):
        run_protocol(-1.0, 0.0)


def test_max_gap_below_ln2():
    for b in (0.1, 1.0, 5.0, 15.0):
        assert 0.0 < max_gap(b) < math.log(2)
    assert max_gap(40.0) == pytest.approx(math.log(2), abs=1e-15)


def test_max_gap_against_grid_scan():
    # largest beta' - beta'' among grid points whose colder marginal sits near 1.0
    best = 0.0
    for p in np.linspace(0.5, 0.9999, 400):
        for theta in np.linspace(0.0, 50.0, 400):
            b1 = beta_prime(float(p), float(theta))
            if abs(b1 - 1.0) < 2e-3:
                best = max(best, b1 - beta_double_prime(float(p), float(theta)))
    assert best <= max_gap(1.0) + 5e-3
    assert best >= max_gap(1.0) - 2e-2


def test_ledger_json():
    d = run_protocol(2.0, 1.5).to_dict()
    text = json.dumps(d)
    assert '"teleport"' in text
    assert d["entangled"] is True


def test_frontier_table():
    rows, sup = temperature_gap_frontier(21, 21)
    assert len(rows) == 441
    assert tuple(rows[0]) == FRONTIER_HEADER
    for r in rows:
        if r["theta"] == 0.0:
            assert r["gap"] == pytest.approx(0.0, abs=1e-14)
        if r["theta"] == 50.0 and r["p"] < 1.0:
            assert r["beta1E"] == pytest.approx(beta_prime(r["p"], 50.0), abs=1e-15)
            assert r["beta2E"] == pytest.approx(beta_double_prime(r["p"], 50.0), abs=1e-15)
        if r["beta1E"] >= r["beta2E"]:
            assert r["gap"] >= 0
    assert sup <= math.log(2) + 1e-3
    with pytest.raises(ValueError):
        temperature_gap_frontier(1, 3)


def test_frontier_sup_approaches_ln2():
    _, sup = temperature_gap_frontier(200, 200)
    assert sup == pytest.approx(0.6931, abs=2e-3)
