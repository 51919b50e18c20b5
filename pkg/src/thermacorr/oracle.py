"""Brute-force cross-checks for the analytic preparability and separability verdicts."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares
from scipy.stats import unitary_group

from .criteria import _as_spectrum, batch_negativity, negativity

_CHUNK = 250


@dataclass(frozen=True)
class OracleConfig:
    grid_step: float = 1e-3
    samples: int = 2000
    seed: int = 0
    match_tol: float = 1e-6

    def __post_init__(self):
        if not 0 < self.grid_step <= 0.1:
            raise ValueError("grid_step must lie in (0, 0.1]")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass(frozen=True)
class GridVerdict:
    preparable: bool
    s: float
    t: float
    residual: float


def _products(s, t):
    # already in descending order whenever s >= t >= 1/2
    return np.stack([s * t, s * (1 - t), t * (1 - s), (1 - s) * (1 - t)], axis=-1)


@functools.lru_cache(maxsize=4)
def _product_grid(step: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    axis = np.linspace(0.5, 1.0, int(round(0.5 / step)) + 1)
    s, t = np.meshgrid(axis, axis, indexing="ij")
    keep = s >= t
    s, t = s[keep], t[keep]
    return s, t, _products(s, t)


def grid_preparability(spec, cfg: OracleConfig = OracleConfig()) -> GridVerdict:
    """Best ``tau_s (x) tau_t`` match for a 4-point spectrum: grid search, then local polish.

    The residual is the largest absolute gap between sorted spectra.
    """
    lam = _as_spectrum(spec, 4)
    s_grid, t_grid, prods = _product_grid(cfg.grid_step)
    err = np.max(np.abs(prods - lam), axis=1)
    k = int(np.argmin(err))
    s0, t0 = float(s_grid[k]), float(t_grid[k])

    # s = 1/2 + a, t = 1/2 + a c keeps s >= t >= 1/2 inside a box, with no kink at s = t
    a0 = s0 - 0.5
    c0 = (t0 - 0.5) / a0 if a0 > 0 else 1.0

    def to_st(x):
        return 0.5 + x[0], 0.5 + x[0] * x[1]

    fit = least_squares(
        lambda x: _products(*to_st(x)) - lam,
        x0=[a0, c0],
        bounds=([0.0, 0.0], [0.5, 1.0]),
        xtol=1e-15, ftol=1e-15, gtol=1e-15,
    )
    s, t = to_st(fit.x)
    residual = float(np.max(np.abs(_products(s, t) - lam)))
    if residual > err[k]:
        s, t, residual = s0, t0, float(err[k])
    return GridVerdict(residual < cfg.match_tol, float(s), float(t), residual)


def witness_state(spec, dimA: int = 2, dimB: int = 2) -> np.ndarray:
    """State on the spectrum's orbit whose negativity detects any AbSEP violation.

    ``lambda_1`` sits on ``|Phi+>``, ``lambda_{2d-1}`` on ``|Phi->``, ``lambda_{2d-2}``
    on ``|0,1>`` and ``lambda_{2d}`` on ``|1,0>``; the rest fill ``|a, j>`` for ``j >= 2``.
    """
    if dimA != 2 or dimB < 2:
        raise ValueError("witness is built for 2 x d systems")
    d = dimB
    lam = _as_spectrum(spec, 2 * d)
    n = 2 * d

    def ket(a, j):
        v = np.zeros(n)
        v[a * d + j] = 1.0
        return v

    r = 1.0 / math.sqrt(2.0)
    vecs = [
        r * (ket(0, 0) + ket(1, 1)),
        r * (ket(0, 0) - ket(1, 1)),
        ket(0, 1),
        ket(1, 0),
    ]
    weights = [lam[0], lam[n - 2], lam[n - 3], lam[n - 1]]
    rest = iter(lam[1:n - 3])
    for j in range(2, d):
        for a in (0, 1):
            vecs.append(ket(a, j))
            weights.append(next(rest))
    v = np.array(vecs).T
    return ((v * np.array(weights)) @ v.T).astype(complex)


def _sample_chunk(lam: np.ndarray, count: int, seed_seq: np.random.SeedSequence,
                  dimA: int, dimB: int) -> float:
    rng = np.random.default_rng(seed_seq)
    n = lam.size
    us = unitary_group.rvs(n, size=count, random_state=rng)
    if count == 1:
        us = us[None]
    rhos = np.einsum("sik,k,sjk->sij", us, lam, us.conj())
    return float(np.max(batch_negativity(rhos, dimA, dimB)))


def sample_max_negativity(spec, dimA: int, dimB: int,
                          cfg: OracleConfig = OracleConfig()) -> float:
    """Largest negativity over the witness and ``cfg.samples`` Haar-random rotations of ``diag(spec)``."""
    lam = _as_spectrum(spec, dimA * dimB)
    best = 0.0
    if dimA == 2:
        best = negativity(witness_state(lam, dimA, dimB), dimA, dimB)
    n_chunks = math.ceil(cfg.samples / _CHUNK)
    children = np.random.SeedSequence(cfg.seed).spawn(n_chunks)
    remaining = cfg.samples
    for child in children:
        count = min(_CHUNK, remaining)
        remaining -= count
        best = max(best, _sample_chunk(lam, count, child, dimA, dimB))
    return best + 0.0


def oracle_entangleable(spec, dimA: int, dimB: int, cfg: OracleConfig = OracleConfig()) -> bool:
    return sample_max_negativity(spec, dimA, dimB, cfg) > cfg.match_tol
