"""Ring-lattice construction and the sequential edge-rewiring pass.

Vertices are 0-based internally with arithmetic mod n; all file formats and
CLI output use 1-based labels.  The generator is a pure function of
``Params``: the keep/rewire decision for edge (i, d) and the choice of a
rewiring target are derived from (seed, i, d) alone (see ``_rng``), so the
same parameters always reproduce the same graph bit for bit.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import _rng
from .errors import InvalidParamsError, LatticeScaleWarning

__all__ = [
    "Params",
    "Graph",
    "RewireEvent",
    "RewireLog",
    "ValidationReport",
    "KEPT",
    "REWIRED",
    "EXHAUSTED",
    "build_ring_lattice",
    "rewire",
    "generate",
    "validate",
]

# Rewiring outcomes. EXHAUSTED means the candidate pool was empty and the
# original edge was kept so that the total edge count stays nk/2.
KEPT = "kept"
REWIRED = "rewired"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Params:
    """Generation parameters (n, k, p) plus the deterministic seed.

    Invariants: k even and >= 2; 0 <= p <= 1; n >= 2k + 2 whenever p > 0
    (this guarantees a nonempty candidate pool at the start of every
    rewiring step).  For p == 0 no rewiring draw ever happens and n >= k + 1
    suffices, which admits small deterministic lattices such as the complete
    graph at n = k + 1.
    """

    n: int
    k: int
    p: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise InvalidParamsError("n and k must be integers")
        if self.k < 2 or self.k % 2 != 0:
            raise InvalidParamsError(f"k must be a positive even integer, got {self.k}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidParamsError(f"p must lie in [0, 1], got {self.p}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise InvalidParamsError(f"seed must be a non-negative integer, got {self.seed}")
        if self.p > 0.0:
            if self.n < 2 * self.k + 2:
                raise InvalidParamsError(
                    f"n must be at least 2k + 2 = {2 * self.k + 2} when p > 0, got n={self.n}"
                )
        elif self.n < self.k + 1:
            raise InvalidParamsError(
                f"n must be at least k + 1 = {self.k + 1}, got n={self.n}"
            )
        if self.n < 10 * self.k:
            warnings.warn(
                f"n={self.n} < 10k={10 * self.k}: asymptotic moment results assume n >> k",
                LatticeScaleWarning,
                stacklevel=2,
            )


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph as per-vertex sorted neighbor tuples (0-based)."""

    n: int
    k: int
    neighbors: tuple[tuple[int, ...], ...]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.neighbors) // 2


@dataclass(frozen=True)
class RewireEvent:
    """One decision of the rewiring pass, for edge {source, source + offset}.

    ``candidate_pool_size`` is the number of eligible targets at decision
    time (vertices outside the exclusion window and outside the current
    neighborhood of ``source``), recorded for kept edges too.
    """

    source: int
    offset: int
    outcome: str  # KEPT | REWIRED | EXHAUSTED
    target: int | None
    candidate_pool_size: int


@dataclass(frozen=True)
class RewireLog:
    """Audit trail of a full rewiring pass, in (i, d) lexicographic order.

    ``in_rewirings[v]`` counts edges rewired into v by sources processed
    before v's own pass began.
    """

    events: tuple[RewireEvent, ...]
    in_rewirings: tuple[int, ...]
    exhausted_count: int

    @property
    def rewired_count(self) -> int:
        return sum(1 for e in self.events if e.outcome == REWIRED)


@dataclass(frozen=True)
class ValidationReport:
    symmetric: bool
    no_self_loops: bool
    edge_count_ok: bool
    edge_count: int
    expected_edge_count: int

    @property
    def ok(self) -> bool:
        return self.symmetric and self.no_self_loops and self.edge_count_ok


def _lattice_neighbors(v: int, n: int, half: int) -> set[int]:
    return {(v + o) % n for o in range(-half, half + 1) if o != 0}


def build_ring_lattice(n: int, k: int) -> Graph:
    """Regular ring lattice: vertex i adjacent to i +- 1, ..., i +- k/2 (mod n).

    Requires k even >= 2 and n >= k + 1 so all k neighbors are distinct
    (n = k + 1 yields the complete graph).
    """
    if not isinstance(n, int) or not isinstance(k, int):
        raise InvalidParamsError("n and k must be integers")
    if k < 2 or k % 2 != 0:
        raise InvalidParamsError(f"k must be a positive even integer, got {k}")
    if n < k + 1:
        raise InvalidParamsError(f"n must be at least k + 1 = {k + 1}, got {n}")
    half = k // 2
    neighbors = tuple(
        tuple(sorted(_lattice_neighbors(v, n, half))) for v in range(n)
    )
    return Graph(n=n, k=k, neighbors=neighbors)


class _PassState:
    """Mutable neighbor sets during a rewiring pass, materialized lazily.

    A vertex absent from ``touched`` still has its original lattice
    neighborhood: every rewiring materializes the sets of all vertices it
    modifies, so untouched vertices are provably unchanged.
    """

    __slots__ = ("n", "half", "touched")

    def __init__(self, n: int, half: int):
        self.n = n
        self.half = half
        self.touched: dict[int, set[int]] = {}

    def neighbors(self, v: int) -> set[int]:
        s = self.touched.get(v)
        if s is None:
            s = _lattice_neighbors(v, self.n, self.half)
            self.touched[v] = s
        return s

    def has_edge(self, u: int, v: int) -> bool:
        s = self.touched.get(u)
        if s is not None:
            return v in s
        a = (v - u) % self.n
        return min(a, self.n - a) <= self.half


def _decision_uniforms(n: int, half: int, seed: int) -> np.ndarray:
    """Keep/rewire uniforms for all n*k/2 decisions in (i, d) lex order."""
    i_idx = np.repeat(np.arange(n, dtype=np.uint64), half)
    d_idx = np.tile(np.arange(1, half + 1, dtype=np.uint64), n)
    return _rng.uniform_array(seed, _rng.STREAM_KEEP, i_idx, d_idx)


def _apply_rewire(
    state: _PassState, i: int, d: int, u_target: float
) -> tuple[int | None, int]:
    """Attempt to rewire edge {i, i+d}; returns (target or None, pool size).

    The candidate pool is {0..n-1} minus the exclusion window
    {i-k/2, ..., i+k/2} minus the current neighborhood of i.  Selection is
    by index into the sorted pool, computed without materializing it.
    """
    n, half = state.n, state.half
    ni = state.neighbors(i)
    # Neighbors outside the window; window members are excluded regardless.
    extra = []
    for v in ni:
        a = (v - i) % n
        if half < a < n - half:
            extra.append(v)
    pool_size = n - (2 * half + 1) - len(extra)
    if pool_size <= 0:
        return None, 0
    m = int(u_target * pool_size)
    blocked = sorted([(i + o) % n for o in range(-half, half + 1)] + extra)
    target = m
    for b in blocked:
        if b <= target:
            target += 1
        else:
            break
    j = (i + d) % n
    ni.discard(j)
    state.neighbors(j).discard(i)
    ni.add(target)
    state.neighbors(target).add(i)
    return target, pool_size


def _pool_size(state: _PassState, i: int) -> int:
    n, half = state.n, state.half
    extra = 0
    for v in state.neighbors(i):
        a = (v - i) % n
        if half < a < n - half:
            extra += 1
    return n - (2 * half + 1) - extra


def _run_pass(n: int, k: int, p: float, seed: int, log: bool):
    """Sequential rewiring pass.  Returns (_PassState, RewireLog | None).

    The logged and unlogged paths consume identical derived uniforms and
    therefore produce identical graphs.
    """
    half = k // 2
    state = _PassState(n, half)
    if not log and p == 0.0:
        return state, None

    uniforms = _decision_uniforms(n, half, seed)

    if not log:
        hits = np.flatnonzero(uniforms < p)
        if hits.size:
            i_arr = (hits // half).astype(np.uint64)
            d_arr = (hits % half + 1).astype(np.uint64)
            u_targets = _rng.uniform_array(seed, _rng.STREAM_TARGET, i_arr, d_arr)
            for i, d, u_t in zip(i_arr.tolist(), d_arr.tolist(), u_targets.tolist()):
                _apply_rewire(state, i, d, u_t)
        return state, None

    events: list[RewireEvent] = []
    in_rewirings = [0] * n
    exhausted = 0
    rewire_mask = uniforms < p
    idx = 0
    for i in range(n):
        for d in range(1, half + 1):
            if rewire_mask[idx]:
                u_t = _rng.uniform(seed, _rng.STREAM_TARGET, i, d)
                target, pool = _apply_rewire(state, i, d, u_t)
                if target is None:
                    exhausted += 1
                    events.append(RewireEvent(i, d, EXHAUSTED, None, 0))
                else:
                    if target > i:  # before the target's own pass
                        in_rewirings[target] += 1
                    events.append(RewireEvent(i, d, REWIRED, target, pool))
            else:
                events.append(RewireEvent(i, d, KEPT, None, _pool_size(state, i)))
            idx += 1
    rewire_log = RewireLog(
        events=tuple(events),
        in_rewirings=tuple(in_rewirings),
        exhausted_count=exhausted,
    )
    return state, rewire_log


def _materialize(n: int, k: int, state: _PassState) -> Graph:
    half = k // 2
    touched = state.touched
    neighbors = tuple(
        tuple(sorted(touched[v])) if v in touched
        else tuple(sorted(_lattice_neighbors(v, n, half)))
        for v in range(n)
    )
    return Graph(n=n, k=k, neighbors=neighbors)


def _final_state(n: int, k: int, p: float, seed: int) -> _PassState:
    """Unlogged pass for Monte Carlo inner loops (same graph as `generate`)."""
    state, _ = _run_pass(n, k, p, seed, log=False)
    return state


def rewire(lattice: Graph, p: float, seed: int) -> tuple[Graph, RewireLog]:
    """Run the sequential rewiring pass over an unmodified ring lattice.

    For i = 0..n-1 and d = 1..k/2 in order, edge {i, i+d} is kept with
    probability 1-p; otherwise it is replaced by {i, j'} with j' uniform
    over the vertices outside the exclusion window and outside the current
    neighborhood of i.  An empty pool keeps the edge (outcome EXHAUSTED), so
    the edge count is always nk/2.
    """
    n, k = lattice.n, lattice.k
    expected = build_ring_lattice(n, k)
    if lattice.neighbors != expected.neighbors:
        raise InvalidParamsError("rewire() requires an unmodified ring lattice")
    # Same admissibility rules as Params (p > 0 needs the pool guarantee).
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LatticeScaleWarning)
        Params(n=n, k=k, p=p, seed=seed)
    state, rewire_log = _run_pass(n, k, p, seed, log=True)
    assert rewire_log is not None
    return _materialize(n, k, state), rewire_log


def generate(params: Params) -> tuple[Graph, RewireLog]:
    """Sample one graph from the (n, k, p) law; pure function of ``params``."""
    state, rewire_log = _run_pass(params.n, params.k, params.p, params.seed, log=True)
    assert rewire_log is not None
    return _materialize(params.n, params.k, state), rewire_log


def validate(graph: Graph) -> ValidationReport:
    """Check symmetry, absence of self-loops, and the nk/2 edge count."""
    symmetric = True
    no_self_loops = True
    half_edges = 0
    for u, nbrs in enumerate(graph.neighbors):
        half_edges += len(nbrs)
        if u in nbrs:
            no_self_loops = False
        for v in nbrs:
            if u not in graph.neighbors[v]:
                symmetric = False
    edge_count = half_edges // 2
    expected = graph.n * graph.k // 2
    return ValidationReport(
        symmetric=symmetric,
        no_self_loops=no_self_loops,
        edge_count_ok=(half_edges == graph.n * graph.k and half_edges % 2 == 0),
        edge_count=edge_count,
        expected_edge_count=expected,
    )
