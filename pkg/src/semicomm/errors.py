"""Exception hierarchy.

Budget failures derive from :class:`BudgetExceeded` so that callers (the CLI
in particular) can tell "not computed" apart from a mathematical negative.
"""


class SemicommError(Exception):
    pass


class InputError(SemicommError, ValueError):
    """Malformed or inconsistent user input."""


class BudgetExceeded(SemicommError):
    """A configurable resource cap was hit."""


class NotAssociative(InputError):
    def __init__(self, a, b, c, left, right):
        self.witness = (a, b, c)
        super().__init__(
            f"not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"
        )


class OutOfRangeEntry(InputError):
    pass


class NotIdempotent(InputError):
    pass


class NotNormalized(InputError):
    def __init__(self, msg, index=None):
        self.index = index
        super().__init__(msg)


class InvalidGroup(InputError):
    pass


class UnknownGroupName(InputError):
    pass


class MalformedPartition(InputError):
    pass


class AlgebraMismatch(InputError):
    pass


class NotACongruence(InputError):
    pass


class NotLinked(InputError):
    pass


class NotCompletelySimple(InputError):
    pass


class NotOrthodox(InputError):
    def __init__(self, msg, pair=None):
        self.pair = pair
        super().__init__(msg)


class NotRegular(InputError):
    pass


class NotInverse(InputError):
    pass


class FormatError(InputError):
    pass


class LatticeTooLarge(BudgetExceeded):
    pass


class CubeSetTooLarge(BudgetExceeded):
    pass


class OracleBudgetExceeded(BudgetExceeded):
    pass


class CapExceeded(BudgetExceeded):
    pass
