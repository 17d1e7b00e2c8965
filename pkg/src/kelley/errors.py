"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`KelleyError`.
Errors that describe a bad argument also derive from :class:`ValueError`.
"""


class KelleyError(Exception):
    """Base class for library errors."""


class GroundSetMismatch(KelleyError, ValueError):
    pass


class EmptyFamily(KelleyError, ValueError):
    pass


class EmptySetInFamily(KelleyError, ValueError):
    pass


class EmptySequence(KelleyError, ValueError):
    pass


class ZeroConditioningSet(KelleyError, ValueError):
    pass


class BadThreshold(KelleyError, ValueError):
    pass


class InvalidDecomposition(KelleyError, ValueError):
    pass


class NormalizationImpossible(KelleyError, ValueError):
    pass


class DegenerateFunctional(KelleyError, ValueError):
    pass


class BudgetTooLarge(KelleyError, RuntimeError):
    pass


class ImproperIdeal(KelleyError, ValueError):
    pass


class NotAnIdeal(KelleyError, ValueError):
    """A collection of sets failed one of the ideal axioms.

    ``witness`` is a tuple of bitmasks naming the offending sets.
    """

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class NotDownClosed(NotAnIdeal):
    """``witness == (A, B)``: A is a member, B is a subset of A that is not."""


class NotUnionClosed(NotAnIdeal):
    """``witness == (A, B)``: both are members, their union is not."""


class NotPrincipalComplete(NotAnIdeal):
    """``witness == (A,)``: A lies below the union of the members but is missing."""


class NotProper(NotAnIdeal, ImproperIdeal):
    """The collection contains the whole ground set; ``witness == (full,)``."""


class Infeasible(KelleyError, ArithmeticError):
    pass


class Unbounded(KelleyError, ArithmeticError):
    pass
