"""Exception hierarchy shared by every module in the package."""


class EntropyError(Exception):
    """Base class for all errors raised by :mod:`tsallis_cond`."""


class NotSquare(EntropyError, ValueError):
    pass


class NotHermitian(EntropyError, ValueError):
    pass


class NoConvergence(EntropyError, ArithmeticError):
    pass


class DimensionMismatch(EntropyError, ValueError):
    pass


class InvalidQ(EntropyError, ValueError):
    pass


class InvalidAlpha(EntropyError, ValueError):
    pass


class InvalidDistribution(EntropyError, ValueError):
    """A probability vector or joint table violates its invariants."""


class DegenerateDenominator(EntropyError, ArithmeticError):
    pass


class NotNormalized(EntropyError, ValueError):
    pass


class NotDensityMatrix(EntropyError, ValueError):
    """Raised with the name of the violated invariant in the message."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        msg = f"{invariant} invariant violated"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotBipartite(EntropyError, ValueError):
    pass


class OutOfRange(EntropyError, ValueError):
    pass


class RootBracketFailure(EntropyError, ArithmeticError):
    pass
