"""Exception types shared across the package."""


class PrimdivError(Exception):
    """Base class for all errors raised by primdiv."""


class DivisionByZero(PrimdivError, ZeroDivisionError):
    pass


class RingMismatch(PrimdivError):
    pass


class InvalidRing(PrimdivError, ValueError):
    pass


class NotDivisible(PrimdivError, ArithmeticError):
    """Exact division had a nonzero remainder."""


class BothZero(PrimdivError, ValueError):
    pass


class ZeroInput(PrimdivError, ValueError):
    pass


class ArityMismatch(PrimdivError, ValueError):
    pass


class WrongArity(ArityMismatch):
    """A univariate-only routine was handed a multivariate ring."""


class TermLimitExceeded(PrimdivError, MemoryError):
    pass


class OutOfRange(PrimdivError, ValueError):
    pass


class IndexOutOfRange(OutOfRange):
    pass


class ParityViolation(PrimdivError, ValueError):
    pass


class KindMismatch(PrimdivError, ValueError):
    pass


class NotSymmetric(PrimdivError, ValueError):
    pass


class ConstantInput(PrimdivError, ValueError):
    pass


class PreconditionViolation(PrimdivError, ValueError):
    pass


class InvalidSeed(PrimdivError, ValueError):
    pass


class DeletedIndex(PrimdivError, ValueError):
    """The index is divisible by the ring characteristic."""


class CharZero(PrimdivError, ValueError):
    pass


class SplitBudgetExhausted(PrimdivError, RuntimeError):
    pass


class PolySyntaxError(PrimdivError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(PrimdivError, ValueError):
    pass


class CoefficientNotInField(PrimdivError, ValueError):
    pass


class ConfigError(PrimdivError, ValueError):
    pass
