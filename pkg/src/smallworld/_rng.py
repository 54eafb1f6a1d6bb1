"""Deterministic, splittable random streams.

Every random decision in the package is a pure function of a 64-bit seed and
a small tuple of integer coordinates (a stream tag plus indices such as the
source vertex and edge offset, or a trial number).  The value is produced by
chaining a splitmix64-style finalizer over the coordinates, so

  * the same seed always reproduces the same decision sequence, and
  * decisions are independent of evaluation order or batching, which keeps
    results identical whether draws are made one at a time or vectorized.

The stream derivation below is a compatibility contract: golden files and
stored expected values depend on it.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB
_INIT = 0x853C49E6748FEA9B

# Stream tags. Each independent family of draws gets its own tag so streams
# never collide even when their remaining coordinates do.
STREAM_KEEP = 0     # keep-vs-rewire decision for edge (i, d)
STREAM_TARGET = 1   # pool index for the rewiring target of edge (i, d)
STREAM_TRIAL = 2    # per-trial sub-seed in Monte Carlo loops
STREAM_SWEEP = 3    # per-n sub-seed in convergence / scaling sweeps

_U64_30 = np.uint64(30)
_U64_27 = np.uint64(27)
_U64_31 = np.uint64(31)
_NP_GOLDEN = np.uint64(_GOLDEN)
_NP_MUL1 = np.uint64(_MUL1)
_NP_MUL2 = np.uint64(_MUL2)


def _mix(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MUL1) & _MASK64
    z = ((z ^ (z >> 27)) * _MUL2) & _MASK64
    return z ^ (z >> 31)


def derive(*parts: int) -> int:
    """Collapse integer coordinates into a 64-bit value (scalar path)."""
    h = _INIT
    for p in parts:
        h = _mix((h + _GOLDEN) ^ (int(p) & _MASK64))
    return h


def uniform(*parts: int) -> float:
    """Uniform in [0, 1) derived from the given coordinates."""
    return derive(*parts) * 2.0**-64


def _mix_np(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> _U64_30)) * _NP_MUL1
    z = (z ^ (z >> _U64_27)) * _NP_MUL2
    return z ^ (z >> _U64_31)


def uniform_array(*parts) -> np.ndarray:
    """Vectorized `uniform`: scalar parts broadcast against uint64 arrays.

    Bit-identical to calling `uniform` element by element.
    """
    with np.errstate(over="ignore"):
        h = np.uint64(_INIT)
        for p in parts:
            if isinstance(p, np.ndarray):
                part = p.astype(np.uint64, copy=False)
            else:
                part = np.uint64(int(p) & _MASK64)
            h = _mix_np((h + _NP_GOLDEN) ^ part)
    return h.astype(np.float64) * 2.0**-64
