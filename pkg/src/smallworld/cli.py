"""Command-line interface: generate | spectrum | moments | configs | probe.

Every command is reproducible: identical flags and seed produce
byte-identical output files.  The seed defaults to 0 (with a note) rather
than to entropy, so runs are reproducible by default.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import io
from .configurations import (
    ConfigClass,
    ProbEstimate,
    canonical_triple,
    closed_form_counts,
    enumerate_counts,
    estimate_triple_probability,
    scaling_exponent,
)
from .errors import InvalidParamsError, SmallWorldError, ZeroHitsError
from .graph import Params, generate
from .montecarlo import convergence_sweep
from .spectral import DEFAULT_BINS, adjacency_matrix, eigenvalues, spectral_histogram

# |gap| allowance around the limiting third moment in --check mode.  The
# finite-size correction is O(1/n) with an unknown constant; this band is an
# engineering choice, not a proven rate.
CHECK_BAND_STDERRS = 5.0
CHECK_BAND_FLOOR = 0.15


def _parse_n_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidParamsError(f"--n-list must be comma-separated integers, got {text!r}")
    return values


def _resolve_seed(args) -> int:
    if args.seed is None:
        print("note: seed defaulted to 0 (pass --seed to vary runs)", file=sys.stderr)
        return 0
    return args.seed


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_generate(args) -> int:
    params = Params(n=args.n, k=args.k, p=args.p, seed=_resolve_seed(args))
    graph, log = generate(params)
    _emit(io.format_edge_list(graph, params, log), args.out)
    if args.out is not None:
        log_path = args.out + ".log.jsonl"
        with open(log_path, "w") as fh:
            fh.write(io.format_rewire_log(log))
    print(
        f"generated n={params.n} k={params.k} p={params.p} seed={params.seed} "
        f"edges={graph.edge_count} exhausted={log.exhausted_count}",
        file=sys.stderr,
    )
    return 0


def cmd_spectrum(args) -> int:
    params = Params(n=args.n, k=args.k, p=args.p, seed=_resolve_seed(args))
    graph, _ = generate(params)
    spectrum = eigenvalues(adjacency_matrix(graph))
    hist = spectral_histogram(spectrum, args.bins)
    if args.format == "json":
        spec_text = io.spectrum_json(spectrum)
        hist_text = io.histogram_json(hist)
        hist_suffix = ".hist.json"
    else:
        spec_text = io.spectrum_csv(spectrum)
        hist_text = io.histogram_csv(hist)
        hist_suffix = ".hist.csv"
    _emit(spec_text, args.out)
    if args.out is None:
        sys.stdout.write(hist_text)
    else:
        with open(args.out + hist_suffix, "w") as fh:
            fh.write(hist_text)
    return 0


def cmd_moments(args) -> int:
    n_list = _parse_n_list(args.n_list)
    rows = convergence_sweep(
        k=args.k,
        p=args.p,
        n_list=n_list,
        trials=args.trials,
        seed=_resolve_seed(args),
        order=args.order,
    )
    text = io.moments_json(rows) if args.format == "json" else io.moments_csv(rows)
    _emit(text, args.out)
    if args.check:
        ok = True
        for r in rows:
            band = max(CHECK_BAND_STDERRS * r.estimate.stderr, CHECK_BAND_FLOOR)
            if abs(r.gap) > band:
                ok = False
                print(
                    f"check failed at n={r.n}: |gap|={abs(r.gap):.4f} > band={band:.4f}",
                    file=sys.stderr,
                )
        if not ok:
            return 1
        print("check passed", file=sys.stderr)
    return 0


def cmd_configs(args) -> int:
    counts = enumerate_counts(args.n, args.k)
    closed = closed_form_counts(args.n, args.k)
    _emit(io.configs_json(counts, closed), args.out)
    return 0


def cmd_probe(args) -> int:
    cls = ConfigClass(getattr(args, "config_class"))
    seed = _resolve_seed(args)
    if args.n_list is not None:
        n_list = _parse_n_list(args.n_list)
        fit = scaling_exponent(args.k, args.p, cls, n_list, args.trials, seed)
        rows = []
        for n, point in fit.points:
            stderr = math.sqrt(point * (1.0 - point) / args.trials)
            triple = canonical_triple(cls, n, args.k)
            rows.append((n, cls.value, ProbEstimate(point, stderr, args.trials, triple)))
        _emit(io.probe_csv(rows), args.out)
        print(f"fitted exponent={fit.exponent:.4f} residual={fit.residual:.4f}", file=sys.stderr)
        return 0
    if args.n is None:
        raise InvalidParamsError("probe needs --n (single estimate) or --n-list (scaling fit)")
    params = Params(n=args.n, k=args.k, p=args.p, seed=seed)
    triple = canonical_triple(cls, args.n, args.k)
    est = estimate_triple_probability(params, triple, args.trials)
    _emit(io.probe_csv([(args.n, cls.value, est)]), args.out)
    print(
        f"triple={triple} estimate={est.point:.6f} stderr={est.stderr:.6f}",
        file=sys.stderr,
    )
    return 0


def _add_common(sub, *, n=False, k=True, p=False):
    if n:
        sub.add_argument("--n", type=int, required=True, help="vertex count")
    if k:
        sub.add_argument("--k", type=int, required=True, help="even degree")
    if p:
        sub.add_argument("--p", type=float, required=True, help="rewiring probability")
    sub.add_argument("--seed", type=int, default=None, help="random seed (default 0)")
    sub.add_argument("--out", type=str, default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swspec",
        description="Small-world random graphs and their spectral moments",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    g = subs.add_parser("generate", help="emit an edge list and rewire log")
    _add_common(g, n=True, p=True)
    g.set_defaults(func=cmd_generate)

    s = subs.add_parser("spectrum", help="eigenvalues and their histogram")
    _add_common(s, n=True, p=True)
    s.add_argument("--bins", type=int, default=DEFAULT_BINS)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_spectrum)

    m = subs.add_parser("moments", help="moment convergence sweep over n")
    _add_common(m, p=True)
    m.add_argument("--n-list", type=str, required=True, help="comma-separated n values")
    m.add_argument("--order", type=int, default=3)
    m.add_argument("--trials", type=int, default=300)
    m.add_argument("--format", choices=("csv", "json"), default="csv")
    m.add_argument("--check", action="store_true", help="exit nonzero outside the gap band")
    m.set_defaults(func=cmd_moments)

    c = subs.add_parser("configs", help="triple-configuration counts vs closed forms")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--out", type=str, default=None)
    c.set_defaults(func=cmd_configs)

    pr = subs.add_parser("probe", help="cycle-probability estimates and scaling fits")
    _add_common(pr, p=True)
    pr.add_argument("--n", type=int, default=None, help="single-n estimate")
    pr.add_argument("--n-list", type=str, default=None, help="scaling fit over these n")
    pr.add_argument(
        "--class",
        dest="config_class",
        choices=[c.value for c in ConfigClass],
        required=True,
    )
    pr.add_argument("--trials", type=int, default=10000)
    pr.set_defaults(func=cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidParamsError as exc:
        print(f"error: invalid parameters: {exc}", file=sys.stderr)
        return 2
    except ZeroHitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SmallWorldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
