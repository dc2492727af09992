"""Exception types raised across legendrify.

Every error carries the data needed to reproduce it; the CLI turns these into
witnesses and exit codes.
"""

from __future__ import annotations


class LegendrifyError(Exception):
    """Base class for all library errors."""


class DivisionByZero(LegendrifyError, ZeroDivisionError):
    pass


class NonzeroResidue(LegendrifyError):
    def __init__(self, pole, residue):
        self.pole = pole
        self.residue = residue
        super().__init__(f"nonzero residue {residue} at pole {pole}")


class BadFactorization(LegendrifyError):
    pass


class IndeterminateWinding(LegendrifyError):
    def __init__(self, message, winding=None):
        self.winding = winding
        super().__init__(message)


class DomainMismatch(LegendrifyError):
    pass


class ZeroVector(LegendrifyError):
    pass


class UnsupportedDimension(LegendrifyError):
    pass


class VerticalInput(LegendrifyError):
    pass


class NotACriticalPoint(LegendrifyError):
    pass


class OrderingViolated(LegendrifyError):
    pass


class AllZero(LegendrifyError):
    pass


class ConstantG(LegendrifyError):
    pass


class PoleInDomain(LegendrifyError):
    def __init__(self, pole):
        self.pole = pole
        super().__init__(f"pole {pole} lies in the closed domain")


class UnfactoredPoleInHole(LegendrifyError, UserWarning):
    """A pole inside a hole belongs to a factor that could not be split over Q(i).

    Issued as a warning by default (the period falls back to quadrature);
    raised when exact periods are demanded.
    """


class NonzeroPeriods(LegendrifyError):
    def __init__(self, periods):
        self.periods = periods
        super().__init__(f"nonzero periods {periods}")


class SingularPeriodMatrix(LegendrifyError):
    pass


class DegenerateSeed(LegendrifyError):
    pass


class DegenerateVerticalMember(LegendrifyError):
    def __init__(self, index, covector):
        self.index = index
        self.covector = covector
        super().__init__(
            f"vertical member {index} is degenerate (lies in ker {covector})")


class TooFewTestPoints(LegendrifyError):
    pass
