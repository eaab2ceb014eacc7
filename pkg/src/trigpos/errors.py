"""Exception types shared across the package."""


class TrigPosError(Exception):
    """Base class for all package errors."""


class PoleError(TrigPosError, ZeroDivisionError):
    """A Pochhammer factor in a denominator vanished."""


class PreconditionError(TrigPosError, ValueError):
    """Inputs violate a documented precondition (e.g. ``|M - N| <= k``)."""


class BudgetExceeded(TrigPosError):
    """An enumeration would exceed the configured :class:`CountBudget`."""


class NoCrossingError(TrigPosError, ValueError):
    """The involution was applied to a bi-word whose prefix diffs never reach +-k."""
