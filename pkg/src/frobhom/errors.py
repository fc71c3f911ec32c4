"""Exception hierarchy.  Every error can carry a JSON-serialisable ``witness``."""
from __future__ import annotations


class FrobError(Exception):
    """Base class; ``witness`` pins down what failed."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InputError(FrobError, ValueError):
    """Malformed input (bad shapes, unknown labels, out-of-range sizes)."""


class MathError(FrobError):
    """A mathematical condition failed on well-formed input."""


# algebra
class NonAssociative(MathError):
    pass


class BadUnit(MathError):
    pass


class Degenerate(MathError):
    pass


class NotTracial(MathError):
    pass


# partitions / symprod
class NotSurjective(InputError):
    pass


class UnknownPoint(InputError):
    pass


class NotAnNHomomorphism(MathError):
    pass


# groups
class GroupAxiomError(MathError):
    pass


class NotAssociative(GroupAxiomError):
    pass


class NoIdentity(GroupAxiomError):
    pass


class NoInverse(GroupAxiomError):
    pass


class NotLatin(GroupAxiomError):
    pass


class OrderTooLarge(InputError):
    pass


class BadCharacterTable(InputError):
    pass


class MalformedData(MathError):
    pass


class Inconsistent(MathError):
    pass


# multisym
class NotMultiSymmetric(MathError):
    pass


class NoSolution(MathError):
    pass


class WeightZeroIndex(InputError):
    pass
