"""Expectation estimates of spectral moments and convergence sweeps in n.

Per realization the first moment is 0 and the second is k exactly; the
third moment converges in expectation to 3k(k-2)(1-p)^3 / 4 with an O(1/n)
finite-size correction whose constant is not known, so acceptance bands
around the limit carry an explicit allowance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _rng
from .errors import InvalidParamsError
from .graph import Params, _final_state
from .spectral import trace_power

__all__ = [
    "MomentEstimate",
    "ConvergenceRow",
    "limiting_third_moment",
    "moment_limit",
    "estimate_moment",
    "convergence_sweep",
]


@dataclass(frozen=True)
class MomentEstimate:
    order: int
    mean: float
    stderr: float
    trials: int
    params: Params


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    estimate: MomentEstimate
    limit: float
    gap: float


def limiting_third_moment(k: int, p: float) -> float:
    """Limit of the expected third spectral moment as n grows: 3k(k-2)(1-p)^3 / 4."""
    if k < 2 or k % 2 != 0:
        raise InvalidParamsError(f"k must be a positive even integer, got {k}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParamsError(f"p must lie in [0, 1], got {p}")
    return 3.0 * k * (k - 2) * (1.0 - p) ** 3 / 4.0


def moment_limit(k: int, p: float, order: int) -> float | None:
    """Known limiting value of the order-th moment, or None (no closed form)."""
    if order == 1:
        return 0.0
    if order == 2:
        return float(k)
    if order == 3:
        return limiting_third_moment(k, p)
    return None


def _sample_adjacency(n: int, k: int, p: float, seed: int) -> np.ndarray:
    """Adjacency matrix of one sample without materializing a Graph."""
    half = k // 2
    a = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n)
    for o in range(1, half + 1):
        a[idx, (idx + o) % n] = 1
        a[(idx + o) % n, idx] = 1
    state = _final_state(n, k, p, seed)
    touched = state.touched
    if touched:
        rows = list(touched)
        a[rows, :] = 0
        a[:, rows] = 0
        for v, nbrs in touched.items():
            cols = list(nbrs)
            a[v, cols] = 1
            a[cols, v] = 1
    return a


def estimate_moment(params: Params, order: int, trials: int) -> MomentEstimate:
    """Mean and stderr of the order-th moment over independent samples.

    Each trial's graph is seeded from (params.seed, trial index) and its
    moment uses the exact integer trace; accumulation runs in trial order,
    so the result is bit-identical across runs.
    """
    if order < 1:
        raise InvalidParamsError(f"order must be >= 1, got {order}")
    if trials < 1:
        raise InvalidParamsError(f"trials must be >= 1, got {trials}")
    n, k, p = params.n, params.k, params.p
    values = np.empty(trials, dtype=np.float64)
    for t in range(trials):
        a = _sample_adjacency(n, k, p, _rng.derive(params.seed, _rng.STREAM_TRIAL, t))
        values[t] = trace_power(a, order) / n
    mean = float(values.mean())
    if trials == 1 or np.all(values == values[0]):
        stderr = 0.0
    else:
        stderr = float(values.std(ddof=1) / math.sqrt(trials))
    return MomentEstimate(order=order, mean=mean, stderr=stderr, trials=trials, params=params)


def convergence_sweep(
    k: int,
    p: float,
    n_list: tuple[int, ...],
    trials: int,
    seed: int,
    order: int = 3,
) -> list[ConvergenceRow]:
    """Order-3 (by default) moment estimates against the limiting value.

    Each n gets an independent sub-seed derived from (seed, n).  Gaps to the
    limit should shrink as n grows (the finite-size term is O(1/n)).
    """
    if list(n_list) != sorted(n_list):
        raise InvalidParamsError("n_list must be ascending")
    limit = moment_limit(k, p, order)
    if limit is None:
        raise InvalidParamsError(f"no closed-form limit for moment order {order}")
    rows = []
    for n in n_list:
        params = Params(n=n, k=k, p=p, seed=_rng.derive(seed, _rng.STREAM_SWEEP, n))
        est = estimate_moment(params, order, trials)
        rows.append(ConvergenceRow(n=n, estimate=est, limit=limit, gap=est.mean - limit))
    return rows
