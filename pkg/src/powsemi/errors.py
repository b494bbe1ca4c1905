"""Exception types raised across the package."""


class PowsemiError(Exception):
    """Base class for all library errors."""


class IndeterminateOrder(PowsemiError):
    """Every known coefficient of a truncated series vanishes."""


class CompositionUndefined(PowsemiError):
    """The inner series of a composition has a nonzero constant term."""


class NotInvertible(PowsemiError):
    """Only series of order one have a compositional inverse."""


class RootUnavailable(PowsemiError):
    """The linear part of a true Boettcher function is not cyclotomically representable."""


class NotInZU(PowsemiError):
    """A monomial coefficient is not a root of unity."""


class ResourceLimit(PowsemiError):
    """An enumeration exceeded its configured size caps."""


class ParseError(PowsemiError, ValueError):
    """Malformed series or coefficient literal."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}")


class SemanticError(PowsemiError, ValueError):
    """A well-formed literal that is not a valid semigroup element."""
