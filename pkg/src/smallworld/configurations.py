"""Torus distance, triple configurations, counting, and probability probes.

An ordered triple of distinct vertices is classified by how many of its
three pairwise torus distances exceed k/2: all close, one far, two far, or
all far.  This module enumerates the four counts exactly, evaluates the
closed-form expressions for them, and estimates the probability that a
triple of a given class forms a 3-cycle of edges by Monte Carlo.

Vertices in this module are 1-based, matching the vertex set {1, ..., n}
used in all file formats.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _rng
from .errors import InvalidParamsError, SizeLimitError, ZeroHitsError
from .graph import Params, _final_state

__all__ = [
    "ConfigClass",
    "ConfigCounts",
    "ClosedFormCounts",
    "ProbEstimate",
    "SlopeFit",
    "ENUMERATION_CAP",
    "torus_distance",
    "classify_triple",
    "enumerate_counts",
    "closed_form_counts",
    "canonical_triple",
    "estimate_triple_probability",
    "scaling_exponent",
]

ENUMERATION_CAP = 600


class ConfigClass(enum.Enum):
    ALL_CLOSE = "all-close"
    ONE_FAR = "one-far"
    TWO_FAR = "two-far"
    ALL_FAR = "all-far"


_BY_FAR_COUNT = (
    ConfigClass.ALL_CLOSE,
    ConfigClass.ONE_FAR,
    ConfigClass.TWO_FAR,
    ConfigClass.ALL_FAR,
)


@dataclass(frozen=True)
class ConfigCounts:
    """Exact ordered-triple counts per configuration class."""

    n: int
    k: int
    all_close: int
    one_far: int
    two_far: int
    all_far: int

    @property
    def total(self) -> int:
        return self.all_close + self.one_far + self.two_far + self.all_far

    def count(self, cls: ConfigClass) -> int:
        return {
            ConfigClass.ALL_CLOSE: self.all_close,
            ConfigClass.ONE_FAR: self.one_far,
            ConfigClass.TWO_FAR: self.two_far,
            ConfigClass.ALL_FAR: self.all_far,
        }[cls]


@dataclass(frozen=True)
class ClosedFormCounts:
    """Closed-form configuration counts.

    ``c1`` is exact for n > 3k.  ``c2`` and ``c3`` count base patterns only
    and are order-of-magnitude anchors: the exact ordered counts exceed them
    by a constant factor in [1, 6].  ``c4_bound`` is an upper-bound-style
    O(n^3) anchor (the exact count can exceed it slightly because the two
    exclusion windows around a far pair may overlap).  ``in_regime`` is
    False when n <= 3k, where the non-wrapping-window derivations fail.
    """

    n: int
    k: int
    c1: int
    c2: int
    c3: int
    c4_bound: int
    in_regime: bool


@dataclass(frozen=True)
class ProbEstimate:
    """Monte Carlo estimate that a probed triple forms a 3-cycle of edges."""

    point: float
    stderr: float
    trials: int
    triple: tuple[int, int, int]


@dataclass(frozen=True)
class SlopeFit:
    """Least-squares slope of log(estimate) vs log(n) over a sweep in n."""

    exponent: float
    points: tuple[tuple[int, float], ...]
    residual: float


def torus_distance(i: int, j: int, n: int) -> int:
    """Cycle metric min(|i - j|, n - |i - j|) for 1-based vertices."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidParamsError(f"vertices must lie in 1..{n}, got {i}, {j}")
    a = abs(i - j)
    return min(a, n - a)


def classify_triple(i1: int, i2: int, i3: int, n: int, k: int) -> ConfigClass:
    """Classify an ordered triple by the number of far pairwise distances."""
    if i1 == i2 or i2 == i3 or i3 == i1:
        raise InvalidParamsError(f"vertices must be distinct, got ({i1}, {i2}, {i3})")
    half = k // 2
    far = 0
    for a, b in ((i1, i2), (i2, i3), (i3, i1)):
        if torus_distance(a, b, n) > half:
            far += 1
    return _BY_FAR_COUNT[far]


def enumerate_counts(n: int, k: int, cap: int = ENUMERATION_CAP) -> ConfigCounts:
    """Exact counts over all n(n-1)(n-2) ordered distinct triples.

    Direct classification of every triple, vectorized over (i2, i3) for each
    i1; still O(n^3) work, hence the cap.
    """
    if n < k + 2:
        raise InvalidParamsError(f"need n >= k + 2, got n={n}, k={k}")
    if n > cap:
        raise SizeLimitError(f"n={n} exceeds the enumeration cap {cap}")
    half = k // 2
    diff = np.abs(np.arange(n)[:, None] - np.arange(n)[None, :])
    far = (np.minimum(diff, n - diff) > half).astype(np.int8)
    counts = np.zeros(4, dtype=np.int64)
    idx = np.arange(n)
    for i1 in range(n):
        far_total = far[i1][:, None] + far + far[:, i1][None, :]
        far_total[idx == i1, :] = -1
        far_total[:, idx == i1] = -1
        far_total[idx, idx] = -1
        counts += np.bincount(far_total[far_total >= 0], minlength=4)
    return ConfigCounts(
        n=n,
        k=k,
        all_close=int(counts[0]),
        one_far=int(counts[1]),
        two_far=int(counts[2]),
        all_far=int(counts[3]),
    )


def closed_form_counts(n: int, k: int) -> ClosedFormCounts:
    """Closed-form expressions for the configuration counts (see class doc)."""
    c1 = 3 * n * k * (k - 2) // 4
    c2 = n * k * (k + 2) // 4
    c3 = n * k * (4 * n - 5 * k - 6) // 4  # nk(n - 5k/4 - 3/2)
    c4_bound = n * (n - k - 1) * (n - 2 * k - 2)
    return ClosedFormCounts(
        n=n, k=k, c1=c1, c2=c2, c3=c3, c4_bound=c4_bound, in_regime=(n > 3 * k)
    )


def canonical_triple(cls: ConfigClass, n: int, k: int) -> tuple[int, int, int]:
    """A fixed representative triple of the requested class (1-based).

    Any fixed representative of a class exhibits the class's decay order in
    n, which is what the scaling probes measure.
    """
    half = k // 2
    if cls is ConfigClass.ALL_CLOSE:
        if k < 4:
            raise InvalidParamsError("no all-close triple of distinct vertices exists for k=2")
        triple = (1, 2, 3)
    elif cls is ConfigClass.ONE_FAR:
        triple = (1, 2, 2 + half)  # distances (1, k/2, k/2 + 1): exactly one far
    elif cls is ConfigClass.TWO_FAR:
        triple = (1, 2, 2 + math.ceil(n / 2))  # one close pair, third vertex far from both
    else:
        triple = (1, 1 + math.ceil(n / 3), 1 + math.ceil(2 * n / 3))
    if classify_triple(*triple, n, k) is not cls:
        raise InvalidParamsError(
            f"no canonical {cls.value} triple at n={n}, k={k} (n too small)"
        )
    return triple


def estimate_triple_probability(
    params: Params, triple: tuple[int, int, int], trials: int
) -> ProbEstimate:
    """Fraction of independent graphs in which all three triple edges exist.

    Trial t uses the seed derived from (params.seed, t); the estimate is a
    pure function of (params, triple, trials).
    """
    i1, i2, i3 = triple
    if i1 == i2 or i2 == i3 or i3 == i1:
        raise InvalidParamsError("triple vertices must be distinct")
    for v in triple:
        if not 1 <= v <= params.n:
            raise InvalidParamsError(f"vertex {v} outside 1..{params.n}")
    if trials < 100:
        raise InvalidParamsError(f"need trials >= 100, got {trials}")
    # 0-based pairs probed against each sampled graph.
    pairs = [(i1 - 1, i2 - 1), (i2 - 1, i3 - 1), (i3 - 1, i1 - 1)]
    n, k, p = params.n, params.k, params.p
    hits = 0
    for t in range(trials):
        state = _final_state(n, k, p, _rng.derive(params.seed, _rng.STREAM_TRIAL, t))
        if all(state.has_edge(u, v) for u, v in pairs):
            hits += 1
    point = hits / trials
    stderr = math.sqrt(point * (1.0 - point) / trials)
    return ProbEstimate(point=point, stderr=stderr, trials=trials, triple=triple)


def scaling_exponent(
    k: int,
    p: float,
    config_class: ConfigClass,
    n_list: tuple[int, ...],
    trials: int,
    seed: int,
) -> SlopeFit:
    """Fit the decay exponent of a class's cycle probability against n.

    Probes the canonical triple of the class at each n, then fits the slope
    of log(estimate) vs log(n) by unweighted least squares.  Raises
    ZeroHitsError if any n records zero successes.
    """
    if config_class is ConfigClass.ALL_CLOSE:
        raise InvalidParamsError("all-close probability does not decay in n; probe it directly")
    if len(n_list) < 3:
        raise InvalidParamsError("need at least 3 values of n for a slope fit")
    if list(n_list) != sorted(n_list):
        raise InvalidParamsError("n_list must be ascending")
    points = []
    for n in n_list:
        if n <= 3 * k:
            raise InvalidParamsError(f"need n > 3k for scaling probes, got n={n}")
        triple = canonical_triple(config_class, n, k)
        params = Params(n=n, k=k, p=p, seed=_rng.derive(seed, _rng.STREAM_SWEEP, n))
        est = estimate_triple_probability(params, triple, trials)
        if est.point == 0.0:
            raise ZeroHitsError(
                f"zero successes at n={n} with {trials} trials; "
                "raise trials or shrink n"
            )
        points.append((n, est.point))
    log_n = np.log([n for n, _ in points])
    log_p = np.log([e for _, e in points])
    slope, intercept = np.polyfit(log_n, log_p, 1)
    resid = log_p - (slope * log_n + intercept)
    return SlopeFit(
        exponent=float(slope),
        points=tuple(points),
        residual=float(np.sqrt(np.mean(resid**2))),
    )
