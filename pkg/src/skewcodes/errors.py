"""Exception hierarchy shared by every module of the package."""


class SkewCodesError(Exception):
    """Base class for all errors raised by skewcodes."""


class FieldError(SkewCodesError, ValueError):
    pass


class NotPrime(FieldError):
    pass


class EvenPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class DegreeMismatch(SkewCodesError, ValueError):
    pass


class ContextMismatch(SkewCodesError, ValueError):
    pass


class DomainMismatch(SkewCodesError, ValueError):
    pass


class DivisionByZero(SkewCodesError, ZeroDivisionError):
    pass


class DivisorZero(DivisionByZero):
    pass


class NonInvertibleLead(SkewCodesError, ValueError):
    """Leading coefficient of a divisor is not a unit of the coefficient ring."""


class LengthMismatch(SkewCodesError, ValueError):
    pass


class NotRightDivisor(SkewCodesError, ValueError):
    pass


class NotMonic(SkewCodesError, ValueError):
    pass


class CapExceeded(SkewCodesError, RuntimeError):
    pass


class EvenLength(SkewCodesError, ValueError):
    pass


class OutOfEnvelope(SkewCodesError, ValueError):
    pass


class SearchFailed(SkewCodesError, RuntimeError):
    pass


class SpecFileError(SkewCodesError, ValueError):
    """A code-spec file failed to parse; ``field`` names the offending key."""

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field
