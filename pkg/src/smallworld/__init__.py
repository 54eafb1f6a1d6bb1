"""Small-world random graphs with exact sequential rewiring semantics,
spectral-moment machinery, triple-configuration counting, and Monte Carlo
verification of the limiting third-moment formula."""

from .configurations import (
    ClosedFormCounts,
    ConfigClass,
    ConfigCounts,
    ProbEstimate,
    SlopeFit,
    canonical_triple,
    classify_triple,
    closed_form_counts,
    enumerate_counts,
    estimate_triple_probability,
    scaling_exponent,
    torus_distance,
)
from .errors import (
    InvalidParamsError,
    LatticeScaleWarning,
    NoConvergenceError,
    OrderTooLargeError,
    SizeLimitError,
    SmallWorldError,
    ZeroHitsError,
)
from .graph import (
    EXHAUSTED,
    KEPT,
    REWIRED,
    Graph,
    Params,
    RewireEvent,
    RewireLog,
    ValidationReport,
    build_ring_lattice,
    generate,
    rewire,
    validate,
)
from .montecarlo import (
    ConvergenceRow,
    MomentEstimate,
    convergence_sweep,
    estimate_moment,
    limiting_third_moment,
    moment_limit,
)
from .spectral import (
    Histogram,
    adjacency_matrix,
    eigenvalues,
    moment,
    spectral_histogram,
    trace_power,
    triangle_count,
)

__version__ = "0.1.0"

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
    "adjacency_matrix",
    "trace_power",
    "moment",
    "eigenvalues",
    "spectral_histogram",
    "triangle_count",
    "Histogram",
    "ConfigClass",
    "ConfigCounts",
    "ClosedFormCounts",
    "ProbEstimate",
    "SlopeFit",
    "torus_distance",
    "classify_triple",
    "enumerate_counts",
    "closed_form_counts",
    "canonical_triple",
    "estimate_triple_probability",
    "scaling_exponent",
    "MomentEstimate",
    "ConvergenceRow",
    "limiting_third_moment",
    "moment_limit",
    "estimate_moment",
    "convergence_sweep",
    "SmallWorldError",
    "InvalidParamsError",
    "SizeLimitError",
    "OrderTooLargeError",
    "NoConvergenceError",
    "ZeroHitsError",
    "LatticeScaleWarning",
]
