"""Exception types raised across the package."""


class FiniteSeriesError(Exception):
    """Base class for every error raised by this package."""


class ParseError(FiniteSeriesError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class NotDivisible(FiniteSeriesError, ArithmeticError):
    pass


class ZeroConstantTerm(FiniteSeriesError, ValueError):
    pass


class ZeroPolynomial(FiniteSeriesError, ValueError):
    pass


class LeadingZero(FiniteSeriesError):
    def __init__(self, index):
        super().__init__(f"leading coefficient vanishes at n={index} and no initial value covers it")
        self.index = index


class BoxTooSmall(FiniteSeriesError, ValueError):
    pass


class IndexOutOfBox(FiniteSeriesError, IndexError):
    pass


class DimMismatch(FiniteSeriesError, ValueError):
    pass


class NotFree(FiniteSeriesError, ValueError):
    pass


class NoPeriodFound(FiniteSeriesError):
    pass


class NoFit(FiniteSeriesError):
    pass


class ZeroElement(FiniteSeriesError, ValueError):
    pass


class PipelineUnsound(FiniteSeriesError):
    """The reassembled generating function disagrees with the input prefix."""
