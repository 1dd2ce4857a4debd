"""Exception hierarchy shared by all modules."""


class QsemError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(QsemError, ValueError):
    pass


class ZeroVectorError(QsemError, ValueError):
    """A state or ket was the zero vector."""


class NotAProjectorError(QsemError, ValueError):
    pass


class NonCommutingError(QsemError, ValueError):
    """The product of two projectors is only a projector when they commute."""


class UndefinedWeakValueError(QsemError, ZeroDivisionError):
    """Pre- and post-selected states are orthogonal, so the weak value has no denominator."""


class BivalenceError(QsemError):
    """A proposition has no classical truth value in the given state."""
