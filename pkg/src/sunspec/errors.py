"""Exception types shared across the package."""


class SunspecError(Exception):
    """Base class for all errors raised by sunspec."""


class InvalidParams(SunspecError, ValueError):
    """Sunflower parameters or operation inputs outside their domain."""


class NotRational(SunspecError, ArithmeticError):
    """A cyclotomic element expected to be rational is not."""


class IntegralityViolation(SunspecError, ArithmeticError):
    """An exact quantity that must be a (non-negative) integer is not."""


class DegreeCapExceeded(SunspecError):
    """Polynomial expansion would exceed the configured degree cap."""


class SizeCapExceeded(SunspecError):
    """Enumeration would visit more sequences than the configured cap."""


class ZeroSum(SunspecError, ValueError):
    """The coordinate sum of xi vanishes; no eigenvector can be built."""


class XiNotAdmissible(SunspecError, ValueError):
    """xi has mixed support while s = k - 1."""


class VerificationError(SunspecError, AssertionError):
    """A cross-check between independent computations failed."""
