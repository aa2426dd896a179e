"""Exception hierarchy shared by every module of the package."""


class BSymbolError(ValueError):
    """Base class; the CLI maps every subclass to a usage error (exit 2)."""


class NonPrime(BSymbolError):
    pass


class EvenCharacteristic(BSymbolError):
    pass


class OddExtension(BSymbolError):
    pass


class ReducibleModulus(BSymbolError):
    pass


class DivisionByZero(BSymbolError, ZeroDivisionError):
    pass


class NotInSubfield(BSymbolError):
    pass


class ZeroInput(BSymbolError):
    pass


class NotDivisor(BSymbolError):
    pass


class GcdNotTwo(BSymbolError):
    def __init__(self, gcd_value: int, message: str | None = None):
        self.gcd_value = gcd_value
        super().__init__(message or f"gcd((q^r-1)/(q-1), N) = {gcd_value}, expected 2")


class LengthTooShort(BSymbolError):
    pass


class BOutOfRange(BSymbolError):
    pass


class LengthMismatch(BSymbolError):
    pass


class NonIntegralResult(BSymbolError):
    pass
