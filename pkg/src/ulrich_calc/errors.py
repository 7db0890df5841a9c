"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class UlrichCalcError(Exception):
    exit_code = 2


class ParseError(UlrichCalcError, ValueError):
    """Malformed surface descriptor, divisor class or range string."""

    exit_code = 1


class SurfaceRangeError(UlrichCalcError, ValueError):
    """Well-formed descriptor outside the supported parameter range (e.g. dP9)."""

    exit_code = 2


class DimensionMismatchError(UlrichCalcError, ValueError):
    exit_code = 1


class ParityError(UlrichCalcError, ArithmeticError):
    """A quantity that must be an integer came out as a half-integer."""

    exit_code = 2


class PreconditionError(UlrichCalcError, ValueError):
    exit_code = 2


class ConsistencyError(UlrichCalcError, AssertionError):
    """Two independent routes to the same number disagree. Always a bug."""

    exit_code = 2


class UnboundedSearchError(UlrichCalcError, RuntimeError):
    exit_code = 2


class UnsupportedSurfaceError(UlrichCalcError, NotImplementedError):
    """Exact cohomology requested on a surface where it is not modelled."""

    exit_code = 3
