"""Exceptions shared across the package.

Every exact integer division performed inside a recurrence is checked;
a nonzero remainder can only come from a wrong formula, wrong seeds or
corrupted input, so InexactDivision is always a bug signal, never a
rounding concern.
"""


class TrinomError(Exception):
    """Base class for all package errors."""


class InexactDivision(TrinomError):
    """An integer division inside a recurrence left a remainder."""

    def __init__(self, numerator, denominator, context=""):
        self.numerator = numerator
        self.denominator = denominator
        self.context = context
        msg = f"{numerator} not divisible by {denominator}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class UnsupportedK(TrinomError):
    """Asked for a k outside the range a formula is stated for."""


class InvalidRange(TrinomError):
    """A recurrence was asked to step where its leading coefficient vanishes."""


class NonInvertible(TrinomError):
    """Power series inversion requires a nonzero constant term."""


class NonSquareLeadingTerm(TrinomError):
    """Power series square root requires the constant term to be a rational square."""


class NonIntegerResult(TrinomError):
    """A value that must be an exact integer came out fractional."""


class UnknownRoute(TrinomError):
    """Route id not present in the route registry."""
