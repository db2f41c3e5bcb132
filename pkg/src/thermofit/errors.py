"""Exception hierarchy shared by all thermofit modules.

Every error carries a stable machine-greppable ``code`` (``E_*``) which the
CLI prints as a one-line prefix before exiting nonzero.
"""

from __future__ import annotations


class ThermofitError(Exception):
    """Base class for all thermofit errors."""

    code = "E_THERMOFIT"


class MalformedRow(ThermofitError):
    """A CSV row could not be parsed (wrong arity, non-numeric field, bad header)."""

    code = "E_MALFORMED_ROW"


class NonIncreasingTime(ThermofitError):
    """Sample timestamps are not strictly increasing."""

    code = "E_NON_INCREASING_TIME"


class EmptySeries(ThermofitError):
    """A series contains no data rows."""

    code = "E_EMPTY_SERIES"


class OutOfRange(ThermofitError):
    """A value lies outside its sanity bounds (or is not finite)."""

    code = "E_OUT_OF_RANGE"


class EmptyInput(ThermofitError):
    """An operation received an empty point list."""

    code = "E_EMPTY_INPUT"


class InsufficientData(ThermofitError):
    """Too few points for the requested operation."""

    code = "E_INSUFFICIENT_DATA"


class DegenerateVariance(ThermofitError):
    """All x (or all y) values are equal; no unique line exists."""

    code = "E_DEGENERATE_VARIANCE"


class LengthMismatch(ThermofitError):
    """Weights and points differ in length."""

    code = "E_LENGTH_MISMATCH"


class NonPositiveWeight(ThermofitError):
    """A weight is zero, negative, or not finite."""

    code = "E_NON_POSITIVE_WEIGHT"


class SingularNormalMatrix(ThermofitError):
    """The Gauss-Newton normal matrix is rank-deficient; parameters unidentifiable."""

    code = "E_SINGULAR_NORMAL_MATRIX"


class InvalidInit(ThermofitError):
    """Solver initial parameters are invalid (non-finite, or tau <= 0)."""

    code = "E_INVALID_INIT"


class NonPositiveResistance(ThermofitError):
    """A thermal resistance must be strictly positive."""

    code = "E_NON_POSITIVE_RESISTANCE"


class NegativePower(ThermofitError):
    """Dissipated power cannot be negative."""

    code = "E_NEGATIVE_POWER"


class InvertedTemperatures(ThermofitError):
    """The junction temperature limit does not exceed ambient."""

    code = "E_INVERTED_TEMPERATURES"
