"""Exception types shared across the package.

Every failure that corresponds to a violated algebraic law carries the
offending elements in ``witness`` so callers can report it verbatim.
"""

from __future__ import annotations


class AlgebraError(ValueError):
    """Base class for structural failures with an optional witness tuple."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class MalformedTable(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    pass


class NoInverse(AlgebraError):
    pass


class NonUniqueInverse(AlgebraError):
    pass


class UnsupportedKind(AlgebraError):
    pass


class ActionNotAutomorphism(AlgebraError):
    pass


class NotAHomomorphism(AlgebraError):
    pass


class OrderMismatch(AlgebraError):
    pass


class OrderTooLarge(AlgebraError):
    pass


class AddNotInverse(AlgebraError):
    pass


class MulNotInverse(AlgebraError):
    pass


class DistributivityFails(AlgebraError):
    pass


class InverseLinkFails(AlgebraError):
    pass


class InvariantViolation(AlgebraError):
    """A consequence that must hold for every valid input did not.

    Seeing this means a bug in this package, not bad input.
    """


class MismatchWithOpposite(InvariantViolation):
    pass


class NotClifford(AlgebraError):
    pass


class PreconditionFailed(AlgebraError):
    pass


class SystemViolation(AlgebraError):
    """A matched or double system fails one of its side conditions."""

    def __init__(self, condition: str, message: str, witness: tuple | None = None):
        super().__init__(f"{condition}: {message}", witness)
        self.condition = condition


class CarrierTooLarge(AlgebraError):
    pass


class FactorNotClifford(AlgebraError):
    pass


class SwappedNotExact(AlgebraError):
    pass


class MalformedDocument(AlgebraError):
    pass
