import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import unitary_group

from thermacorr.criteria import (
    entropy_balance_holds,
    is_absolutely_separable_2xd,
    max_concurrence_on_orbit,
    preparable_from_thermal_pair,
)
from thermacorr.entangler import UnitaryPlan, apply_entangler, marginal_ground_weights
from thermacorr.states import (
    ThermalQubit,
    mutual_information,
    partial_trace,
    qubit_state,
    spectrum_of,
    tensor,
    von_neumann_entropy,
)

weights = st.floats(0.5, 1.0)
betas = st.floats(0.0, 700.0)
seeds = st.integers(0, 2**32 - 1)
perms = st.permutations(range(4))
thetas = st.floats(0.0, 50.0)


def random_state(seed, n=4):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


@given(betas)
def test_thermal_qubit_round_trip(b):
    q = ThermalQubit(b)
    assert abs(ThermalQubit.from_weight(q.p, q.excited).betaE - b) <= 1e-12 * max(1.0, b)


@settings(max_examples=50)
@given(seeds)
def test_spectrum_preserved_by_unitaries(seed):
    rho = random_state(seed)
    u = unitary_group.rvs(4, random_state=seed)
    np.testing.assert_allclose(spectrum_of(u @ rho @ u.conj().T), spectrum_of(rho), atol=1e-10)


@settings(max_examples=50)
@given(weights, weights, seeds)
def test_entropy_balance_for_unitary_images(p, q, seed):
    sa, sb = qubit_state(p), qubit_state(q)
    u = unitary_group.rvs(4, random_state=seed)
    rho_f = u @ tensor(sa, sb) @ u.conj().T
    assert entropy_balance_holds(sa, sb, rho_f, 1e-10)


@settings(max_examples=50)
@given(seeds)
def test_mutual_information_nonnegative(seed):
    assert mutual_information(random_state(seed), 2, 2) >= -1e-10


@given(weights, weights)
def test_products_have_no_mutual_information(p, q):
    assert abs(mutual_information(tensor(qubit_state(p), qubit_state(q)), 2, 2)) < 1e-10


@given(weights, weights)
def test_entropy_additive(p, q):
    a, b = qubit_state(p), qubit_state(q)
    assert abs(von_neumann_entropy(tensor(a, b)) - von_neumann_entropy(a) - von_neumann_entropy(b)) < 1e-10


@given(weights, weights)
def test_products_are_preparable(p, q):
    s, t = max(p, q), min(p, q)
    v = preparable_from_thermal_pair([s * t, s * (1 - t), t * (1 - s), (1 - s) * (1 - t)])
    assert v.preparable
    assert abs(v.s - s) < 1e-6 and abs(v.t - t) < 1e-6
    if v.same_temperature:
        assert v.gp_holds


@given(st.lists(st.floats(0.0, 1.0), min_size=4, max_size=4).filter(lambda x: sum(x) > 1e-3))
def test_absep_equals_zero_orbit_concurrence(raw):
    spec = np.array(raw) / sum(raw)
    assert is_absolutely_separable_2xd(spec, 2) == (max_concurrence_on_orbit(spec) == 0.0)


@given(perms, thetas, weights)
def test_marginal_closed_forms(perm, theta, p):
    plan = UnitaryPlan(theta, tuple(perm))
    rho = apply_entangler(plan, p)
    gA, gB = marginal_ground_weights(plan, p)
    assert math.isclose(gA, partial_trace(rho, (2, 2), 0)[0, 0].real, abs_tol=1e-12)
    assert math.isclose(gB, partial_trace(rho, (2, 2), 1)[0, 0].real, abs_tol=1e-12)
