"""Exception hierarchy shared by every module of the package."""


class XYChainError(Exception):
    """Base class for all errors raised by xychain."""


class NonHermitian(XYChainError, ValueError):
    pass


class NoConvergence(XYChainError, ArithmeticError):
    pass


class BadDims(XYChainError, ValueError):
    pass


class BadSites(XYChainError, ValueError):
    pass


class UnsupportedCombination(XYChainError, ValueError):
    """Parameter combination the model does not define (e.g. a field for N > 2)."""


class NotAState(XYChainError, ValueError):
    """Matrix fails the density-matrix checks (Hermitian, unit trace, PSD)."""


class NegativeSpectrum(XYChainError, ArithmeticError):
    pass


class NotAWState(XYChainError, ValueError):
    pass


class BadTemperature(XYChainError, ValueError):
    pass


class BadGamma(XYChainError, ValueError):
    pass


class ZeroCoupling(XYChainError, ValueError):
    pass


class NoRoot(XYChainError, ArithmeticError):
    pass


class BadFigureId(XYChainError, ValueError):
    pass


class BadOverride(XYChainError, ValueError):
    pass
