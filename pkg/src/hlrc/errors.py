"""Exception hierarchy.

Validation errors (bad inputs, impossible parameter combinations) derive from
``ValidationError``; failures that happen while operating on valid inputs
(too many erasures, inconsistent words, enumeration caps) derive from
``HlrcRuntimeError``. The CLI maps the two families to distinct exit codes.
"""

from __future__ import annotations


class HlrcError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(HlrcError, ValueError):
    pass


class HlrcRuntimeError(HlrcError, RuntimeError):
    pass


# gf
class NotPrimeError(ValidationError):
    pass


class ReducibleError(ValidationError):
    pass


class CapacityExceededError(ValidationError):
    pass


class DivisionByZeroError(HlrcError, ZeroDivisionError):
    pass


# poly
class FieldMismatchError(ValidationError):
    pass


class DuplicateAbscissaError(ValidationError):
    pass


class EmptyInputError(ValidationError):
    pass


class ZeroPolynomialError(ValidationError):
    pass


# nests
class ConstantPolynomialError(ValidationError):
    pass


class NotEnoughNestsError(ValidationError):
    def __init__(self, requested: int, available: int):
        super().__init__(f"requested {requested} nests but only {available} available")
        self.requested = requested
        self.available = available


# bounds / code
class InvalidParamsError(ValidationError):
    pass


class InvalidPlanError(ValidationError):
    pass


class LengthMismatchError(ValidationError):
    pass


class RankDeficientGeneratorError(ValidationError):
    pass


# repair / oracle
class TooManyErasuresError(HlrcRuntimeError):
    pass


class InconsistentWordError(HlrcRuntimeError):
    pass


class TooLargeError(HlrcRuntimeError):
    pass
