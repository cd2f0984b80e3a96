"""Exception hierarchy shared by all planarop modules."""


class PlanarOpError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PlanarOpError):
    """Malformed user input (weight files, CLI arguments, serialized data)."""


class ArithmeticBugError(PlanarOpError):
    """An exact identity that must hold by theory failed; signals a bug."""


class TruncationTooShort(PlanarOpError):
    """A truncated series was too short for the requested operation."""


class DenominatorVanishesAtZero(PlanarOpError):
    """Principal-part extraction needs the denominator nonzero at the origin."""


class EvaluationAtPole(PlanarOpError):
    """Numeric evaluation was requested at (or too close to) a pole."""


class SingularSystemError(ArithmeticBugError):
    """An exact linear system that must be nonsingular turned out singular."""


class NonzeroRemainderError(ArithmeticBugError):
    """An exact polynomial division that must be exact left a remainder."""


class IdentityViolationError(ArithmeticBugError):
    """A constructive identity check (computed both ways) failed exactly."""


class NodeAtOriginError(PlanarOpError):
    """Operation requires every insertion point to be nonzero."""


class RadiusTooSmall(PlanarOpError):
    """Quadrature radius below the documented tail-error bound."""


class RootFindingError(PlanarOpError):
    """Root refinement did not converge; partial results attached."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
