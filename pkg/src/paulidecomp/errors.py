"""Exception types raised across the package.

Every error derives from :class:`DecompositionError` so callers can catch the
whole family at once. The CLI maps each subclass to a stable exit code.
"""


class DecompositionError(ValueError):
    exit_code = 1


class ParseError(DecompositionError):
    """Malformed Pauli string, graph file, circuit file or problem file."""

    exit_code = 3


class DimensionError(DecompositionError):
    exit_code = 3


class InvalidOperatorError(DecompositionError):
    """A non-Hermitian operator was passed where a generator is required."""

    exit_code = 3


class InvalidDecompositionError(DecompositionError):
    exit_code = 5


class ConnectivityError(DecompositionError):
    exit_code = 4


class SupportError(DecompositionError):
    exit_code = 5


class ShapeError(DecompositionError):
    """Circuit is not in nested conjugation form."""

    exit_code = 6


class VerificationFailed(DecompositionError):
    exit_code = 6


class ScheduleStateError(DecompositionError):
    exit_code = 7


class UnsupportedError(DecompositionError):
    exit_code = 7
