class FlexconnError(Exception):
    """Base class for all library errors."""


class InputError(FlexconnError, ValueError):
    """Malformed input: bad vertex ids, unknown edge ids, parse failures."""


class InfeasibleInstanceError(FlexconnError):
    """The instance admits no feasible solution (even taking all edges)."""


class InvariantViolation(FlexconnError, RuntimeError):
    """An internal invariant that should hold by construction failed."""


def require(condition: bool, message: str) -> None:
    """Check an internal invariant; raise unconditionally (independent of -O)."""
    if not condition:
        raise InvariantViolation(message)
