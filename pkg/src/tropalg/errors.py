"""Exception hierarchy.

Every error raised on purpose by the package derives from ``TropAlgError``.
The CLI maps ``BudgetError`` subclasses to exit status 2 and every other
``TropAlgError`` to exit status 1.
"""


class TropAlgError(Exception):
    pass


class DomainMismatchError(TropAlgError, TypeError):
    """Operands come from different semifield instances."""


class NoInverseError(TropAlgError, ZeroDivisionError):
    pass


class UnsupportedSemifieldError(TropAlgError):
    pass


class ConstructionError(TropAlgError, ValueError):
    """A semifield or finite table failed its axiom validation."""


class DimensionError(TropAlgError, ValueError):
    pass


class NotApplicableError(TropAlgError):
    pass


class NotInvertibleError(TropAlgError):
    pass


class NotSingularError(TropAlgError):
    """Asked for a singularity witness of a regular matrix."""


class PreconditionError(TropAlgError, ValueError):
    pass


class UndefinedRootsError(TropAlgError):
    pass


class InvariantViolation(TropAlgError, AssertionError):
    """A mathematically guaranteed relation failed; indicates a bug."""


class BudgetError(TropAlgError):
    pass


class SizeLimitError(BudgetError):
    pass


class SearchExhaustedError(BudgetError):
    """A bounded search ran out of candidates without deciding anything."""
