"""Exception hierarchy. Everything raised on bad domain input derives
from TwistorLatticeError so the CLI can map it to exit code 1."""


class TwistorLatticeError(Exception):
    pass


class DimensionMismatch(TwistorLatticeError):
    pass


class NotSymmetric(TwistorLatticeError):
    pass


class InvalidTriple(TwistorLatticeError):
    pass


class InvalidSignature(TwistorLatticeError):
    pass


class NotPositive(TwistorLatticeError):
    pass


class IrrationalPoint(TwistorLatticeError):
    pass


class InvalidBound(TwistorLatticeError):
    pass


class EmptyCloud(TwistorLatticeError):
    pass


class NotUnitImaginary(TwistorLatticeError):
    pass


class Unsupported(TwistorLatticeError):
    pass


class InvariantViolation(TwistorLatticeError):
    """A mathematically-guaranteed condition failed; indicates a bug or
    corrupted input rather than a user error."""
