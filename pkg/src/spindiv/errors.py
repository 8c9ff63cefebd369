"""Exception hierarchy.

Every error raised on bad input derives from :class:`SpinDivError` so the
CLI can map it to exit code 2 and a machine-readable error object.
"""


class SpinDivError(ValueError):
    """Base class for all input and precondition errors."""


class NotPrime(SpinDivError):
    pass


class DuplicateLabel(SpinDivError):
    pass


class BadBranchCount(SpinDivError):
    pass


class TooFewPoints(SpinDivError):
    pass


class UnknownLabel(SpinDivError):
    pass


class CurveMismatch(SpinDivError):
    pass


class GroupMismatch(SpinDivError):
    pass


class InadmissibleM(SpinDivError):
    pass


class BadLength(SpinDivError):
    pass


class NotHyperelliptic(SpinDivError):
    pass


class NotSpin(SpinDivError):
    pass


class BadDivisibility(SpinDivError):
    pass


class BadPermutation(SpinDivError):
    pass


class BadProfile(SpinDivError):
    pass


class NotStable(SpinDivError):
    pass


class SingularMap(SpinDivError):
    pass


class BudgetExceeded(SpinDivError):
    pass


class UnknownTheorem(SpinDivError):
    pass


class ParseError(SpinDivError):
    pass
