"""Exception hierarchy shared by all modules."""


class AegelfandError(Exception):
    """Base class for library errors."""


class ZeroPolynomial(AegelfandError, ValueError):
    """A nonzero polynomial was required."""


class UnresolvedInterval(AegelfandError, ArithmeticError):
    """Interval refinement hit its budget without certifying a sign."""


class ParseError(AegelfandError, ValueError):
    pass


class MixedRings(AegelfandError, TypeError):
    """Operands belong to different ring instances."""


class BudgetExceeded(AegelfandError):
    pass


class PreconditionFailed(AegelfandError, ValueError):
    pass


class UnsupportedInstance(AegelfandError):
    """No decision procedure for this ring instance."""


class NotLocalizable(PreconditionFailed):
    pass


class NotOpen(PreconditionFailed):
    pass


class DomainNotInFamily(PreconditionFailed):
    pass


class NotSubfamily(PreconditionFailed):
    pass


class DegreeTooSmall(PreconditionFailed):
    pass


class ApproximationUnachievable(AegelfandError):
    pass
