"""File formats: edge lists, rewire logs, and CSV/JSON result tables.

All vertex labels in emitted files are 1-based.  Output is a pure function
of its inputs (stable ordering, repr-based float formatting), so identical
runs produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import asdict

import numpy as np

from .configurations import ClosedFormCounts, ConfigCounts, ProbEstimate
from .graph import Graph, Params, RewireLog
from .montecarlo import ConvergenceRow
from .spectral import Histogram

__all__ = [
    "format_edge_list",
    "write_edge_list",
    "format_rewire_log",
    "write_rewire_log",
    "spectrum_csv",
    "spectrum_json",
    "histogram_csv",
    "histogram_json",
    "moments_csv",
    "moments_json",
    "configs_json",
    "probe_csv",
]


def format_edge_list(graph: Graph, params: Params, log: RewireLog) -> str:
    lines = [
        f"# n={params.n} k={params.k} p={params.p!r} seed={params.seed} "
        f"exhausted={log.exhausted_count}"
    ]
    for u, v in sorted(graph.edges()):
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def write_edge_list(path: str, graph: Graph, params: Params, log: RewireLog) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(graph, params, log))


def format_rewire_log(log: RewireLog) -> str:
    """One JSON object per decision, in algorithm order, 1-based vertices."""
    lines = []
    for e in log.events:
        lines.append(
            json.dumps(
                {
                    "i": e.source + 1,
                    "d": e.offset,
                    "outcome": e.outcome,
                    "target": None if e.target is None else e.target + 1,
                    "pool": e.candidate_pool_size,
                },
                separators=(",", ":"),
            )
        )
    return "\n".join(lines) + "\n"


def write_rewire_log(path: str, log: RewireLog) -> None:
    with open(path, "w") as fh:
        fh.write(format_rewire_log(log))


def spectrum_csv(spectrum: np.ndarray) -> str:
    lines = ["index,eigenvalue"]
    for i, ev in enumerate(spectrum):
        lines.append(f"{i},{float(ev)!r}")
    return "\n".join(lines) + "\n"


def spectrum_json(spectrum: np.ndarray) -> str:
    return json.dumps(
        [{"index": i, "eigenvalue": float(ev)} for i, ev in enumerate(spectrum)]
    ) + "\n"


def histogram_csv(hist: Histogram) -> str:
    lines = ["bin_lo,bin_hi,count"]
    for i, count in enumerate(hist.counts):
        lines.append(f"{hist.bin_edges[i]!r},{hist.bin_edges[i + 1]!r},{count}")
    return "\n".join(lines) + "\n"


def histogram_json(hist: Histogram) -> str:
    return json.dumps(
        [
            {"bin_lo": hist.bin_edges[i], "bin_hi": hist.bin_edges[i + 1], "count": c}
            for i, c in enumerate(hist.counts)
        ]
    ) + "\n"


def moments_csv(rows: list[ConvergenceRow]) -> str:
    lines = ["n,k,p,order,trials,mean,stderr,limit,gap"]
    for r in rows:
        e = r.estimate
        lines.append(
            f"{r.n},{e.params.k},{e.params.p!r},{e.order},{e.trials},"
            f"{e.mean!r},{e.stderr!r},{r.limit!r},{r.gap!r}"
        )
    return "\n".join(lines) + "\n"


def moments_json(rows: list[ConvergenceRow]) -> str:
    return json.dumps(
        [
            {
                "n": r.n,
                "k": r.estimate.params.k,
                "p": r.estimate.params.p,
                "order": r.estimate.order,
                "trials": r.estimate.trials,
                "mean": r.estimate.mean,
                "stderr": r.estimate.stderr,
                "limit": r.limit,
                "gap": r.gap,
            }
            for r in rows
        ]
    ) + "\n"


def configs_json(counts: ConfigCounts, closed: ClosedFormCounts) -> str:
    ratios = {}
    for name, form in (("one_far", closed.c2), ("two_far", closed.c3)):
        ratios[name] = getattr(counts, name) / form if form else None
    payload = {
        "n": counts.n,
        "k": counts.k,
        "all_close": counts.all_close,
        "one_far": counts.one_far,
        "two_far": counts.two_far,
        "all_far": counts.all_far,
        "total": counts.total,
        "closed_form": asdict(closed),
        "ratios": ratios,
    }
    return json.dumps(payload, indent=2) + "\n"


def probe_csv(rows: list[tuple[int, str, ProbEstimate]]) -> str:
    lines = ["n,class,estimate,stderr,trials"]
    for n, cls, est in rows:
        lines.append(f"{n},{cls},{est.point!r},{est.stderr!r},{est.trials}")
    return "\n".join(lines) + "\n"
