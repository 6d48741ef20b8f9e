"""Exception types raised across the package."""


class EqlocError(Exception):
    """Base class for every error raised by eqloc."""


class NotAPermutation(EqlocError, ValueError):
    pass


class GroupTooLarge(EqlocError):
    pass


class NotASubgroup(EqlocError, ValueError):
    pass


class GroupMismatch(EqlocError, ValueError):
    """Operands live over different groups."""


class SizeExceeded(EqlocError):
    pass


class NotInLattice(EqlocError, ArithmeticError):
    """A marks vector is not the ghost image of any virtual G-set."""


class IntegralityViolation(EqlocError, ArithmeticError):
    """A norm failed to land in the Burnside ring.

    This never happens for valid input; seeing it means a bug.
    """


class ParseError(EqlocError, ValueError):
    pass


class UnsupportedDegree(ParseError):
    pass
