"""Exception and warning types shared across the package."""


class SmallWorldError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParamsError(SmallWorldError, ValueError):
    """Parameters violate a documented precondition (caller misuse)."""


class SizeLimitError(SmallWorldError):
    """Input exceeds a configured enumeration or size cap."""


class OrderTooLargeError(SmallWorldError):
    """Exact integer trace computation would overflow the widest fast path."""


class NoConvergenceError(SmallWorldError):
    """Eigensolver exhausted its sweep budget without converging."""


class ZeroHitsError(SmallWorldError):
    """A Monte Carlo probe recorded zero successes; raise trials or shrink n."""


class LatticeScaleWarning(UserWarning):
    """n is small relative to k; asymptotic results assume n >> k."""
