import numpy as np
import pytest

from thermacorr.criteria import (
    absep_margin,
    is_absolutely_separable_2xd,
    max_concurrence_on_orbit,
    negativity,
)
from thermacorr.oracle import (
    OracleConfig,
    _sample_chunk,
    grid_preparability,
    oracle_entangleable,
    sample_max_negativity,
    witness_state,
)
from thermacorr.states import spectrum_of

FAST = OracleConfig(samples=300, seed=3)


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(grid_step=0.5)
    with pytest.raises(ValueError):
        OracleConfig(samples=0)
    with pytest.raises(ValueError):
        OracleConfig(seed=-1)


def test_grid_examples():
    v = grid_preparability([.36, .24, .24, .16])
    assert v.preparable and v.residual < 1e-9
    assert (v.s, v.t) == (pytest.approx(0.6, abs=1e-6), pytest.approx(0.6, abs=1e-6))

    v = grid_preparability([.4, .3, .2, .1])
    assert not v.preparable and v.residual >= 1e-3

    v = grid_preparability([1, 0, 0, 0])
    assert v.preparable and v.s == pytest.approx(1.0) and v.t == pytest.approx(1.0)


def test_grid_recovers_off_grid_products():
    rng = np.random.default_rng(2)
    for s, t in np.sort(rng.uniform(0.5, 1.0, size=(50, 2)), axis=1)[:, ::-1]:
        spec = [s * t, s * (1 - t), t * (1 - s), (1 - s) * (1 - t)]
        v = grid_preparability(spec)
        assert v.preparable and v.residual < 1e-9


def test_sampling_examples():
    assert sample_max_negativity([.25] * 4, 2, 2, FAST) == pytest.approx(0.0, abs=1e-10)
    assert sample_max_negativity([.5625, .1875, .1875, .0625], 2, 2, FAST) > 0
    assert sample_max_negativity([.36, .24, .24, .16], 2, 2, FAST) <= 1e-9


def test_sampling_reproducible():
    spec = [.5, .3, .15, .05]
    a = sample_max_negativity(spec, 2, 2, FAST)
    b = sample_max_negativity(spec, 2, 2, FAST)
    assert a == b


def test_sampling_alone_finds_witness_for_strong_violations():
    cfg = OracleConfig(samples=2000, seed=1)
    lam = np.array([.7, .2, .07, .03])
    best = max(_sample_chunk(lam, 250, s, 2, 2) for s in np.random.SeedSequence(cfg.seed).spawn(8))
    assert best > 1e-6


def test_witness_preserves_spectrum():
    rng = np.random.default_rng(4)
    for d in (2, 3, 5):
        spec = np.sort(rng.dirichlet(np.ones(2 * d)))[::-1]
        np.testing.assert_allclose(spectrum_of(witness_state(spec, 2, d)), spec, atol=1e-14)


def test_witness_detects_criterion_violations():
    rng = np.random.default_rng(8)
    for d in (2, 3, 4):
        for spec in rng.dirichlet(np.full(2 * d, 0.4), size=200):
            neg = negativity(witness_state(spec, 2, d), 2, d)
            assert (neg > 1e-13) == (absep_margin(spec, d) < -1e-12)


def test_witness_matches_orbit_concurrence_sign():
    rng = np.random.default_rng(9)
    for spec in rng.dirichlet(np.ones(4), size=200):
        neg = negativity(witness_state(spec), 2, 2)
        assert (neg > 1e-13) == (max_concurrence_on_orbit(spec) > 1e-12)


def test_one_sided_soundness():
    rng = np.random.default_rng(12)
    found = 0
    for spec in rng.dirichlet(np.ones(4), size=400):
        if is_absolutely_separable_2xd(spec, 2):
            continue
        found += 1
        assert oracle_entangleable(spec, 2, 2, OracleConfig(samples=50, seed=0))
        if found == 200:
            break
    assert found == 200


def test_witness_rejects_other_shapes():
    with pytest.raises(ValueError):
        witness_state([.25] * 4, 4, 1)
