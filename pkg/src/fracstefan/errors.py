"""Exception hierarchy shared by all fracstefan modules."""


class FracStefanError(Exception):
    """Base class for every error raised by the package."""


class ValidationError(FracStefanError, ValueError):
    """Input data violates a documented precondition."""


class DomainError(FracStefanError, ValueError):
    """Argument outside the region where a result is defined or accurate.

    Raised for Gamma poles, for special-function arguments beyond the
    series accuracy domain, and when a root bracket would have to leave it.
    """


class ConvergenceError(FracStefanError, ArithmeticError):
    """A series or iterative solver did not reach its tolerance."""


class RestrictionError(FracStefanError):
    """Data fail the solvability restriction of an inverse case.

    Attributes
    ----------
    case : str
        Name of the unknown coefficient.
    margin : float
        Value of the restriction expression; solvable cases need ``margin < 1``.
    """

    def __init__(self, case, margin):
        self.case = case
        self.margin = margin
        super().__init__(
            f"no solution for unknown '{case}': restriction margin "
            f"{margin!r} is not < 1"
        )
