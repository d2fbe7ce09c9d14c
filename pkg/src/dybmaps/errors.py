"""Exception types shared across the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all structural and precondition errors."""


class NotLeftQuasigroup(AlgebraError):
    """A row of the table repeats a value, so left translation is not bijective."""

    def __init__(self, row: int, value: int):
        self.row = row
        self.value = value
        super().__init__(f"row {row} repeats value {value}")


class NotAPermutation(AlgebraError):
    pass


class IndexOutOfRange(AlgebraError, IndexError):
    pass


class PreconditionFailed(AlgebraError):
    """A required identity fails on the input; carries the first witness."""

    def __init__(self, condition: str, witness=None):
        self.condition = condition
        self.witness = witness
        super().__init__(f"condition {condition} fails at {witness}")


class IdempotenceRequired(AlgebraError):
    pass


class OrderMismatch(AlgebraError):
    pass


class M1M2Violation(PreconditionFailed):
    """The ternary table fails one of the two defining compatibility identities."""


class ShapeMismatch(AlgebraError):
    pass


class InvarianceViolated(AlgebraError):
    pass


class ClassViolation(PreconditionFailed):
    """The ternary table fails a membership identity of the requested class."""


class NotALoop(AlgebraError):
    pass


class NotAGroup(AlgebraError):
    pass


class UnitNotPreserved(AlgebraError):
    pass


class LQ1Violation(PreconditionFailed):
    pass


class NotQuasigroup(AlgebraError):
    pass


class OrderTooLarge(AlgebraError):
    pass
