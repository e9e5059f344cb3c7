"""Exception hierarchy.

Every error raised by the library derives from :class:`TeccError`. The CLI maps
:class:`ValidationError` subclasses to exit code 1 and :class:`BudgetError`
subclasses to exit code 2.
"""


class TeccError(Exception):
    pass


class ValidationError(TeccError, ValueError):
    pass


class BudgetError(TeccError):
    pass


# gf
class NotPrime(ValidationError):
    pass


class Reducible(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class FieldMismatch(ValidationError):
    pass


class DivideByZero(TeccError, ZeroDivisionError):
    pass


# curve
class BadCurve(ValidationError):
    pass


class OffCurve(ValidationError):
    pass


class Insufficient(ValidationError):
    pass


class CapExceeded(BudgetError):
    pass


# rrspace / differential
class BadK(ValidationError):
    pass


class BadRange(ValidationError):
    pass


class BadTwist(ValidationError):
    pass


class PoleAtPoint(ValidationError):
    pass


class DuplicateX(ValidationError):
    pass


# lincode / teccbuild
class BudgetExceeded(BudgetError):
    pass


class BadShape(ValidationError):
    pass


class RamifiedPoint(ValidationError):
    pass


class DegenerateRecursion(TeccError):
    """A recursion denominator vanished; the nullspace route must be used."""

    def __init__(self, msg: str, trace=None):
        super().__init__(msg)
        self.trace = trace or []
