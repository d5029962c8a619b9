"""Exception taxonomy shared by all steinerlab modules."""


class SteinerError(Exception):
    """Base class for all steinerlab errors."""


class DegenerateInput(SteinerError, ValueError):
    """Input violates a nondegeneracy precondition (coincident points, zero vectors, NaN)."""


class NotRealizable(SteinerError):
    """The combinatorial type has no valid embedding for this configuration."""


class LimitExceeded(SteinerError):
    """Requested terminal count is above the configured enumeration cap."""


class NoConvergence(SteinerError):
    """Fixed-point relaxation did not settle within the iteration budget."""


class NoWall(SteinerError):
    """Both path endpoints are won by the same combinatorial type."""


class BracketLost(SteinerError):
    """Wall bisection lost realizability of both types inside the bracket."""

    def __init__(self, lo: float, hi: float, message: str = ""):
        self.bracket = (lo, hi)
        super().__init__(message or f"both types unrealizable inside bracket [{lo}, {hi}]")


class DegeneratePath(SteinerError):
    """An interpolated configuration along the path left the configuration space."""
