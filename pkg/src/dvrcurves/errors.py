"""Exception types shared across the package."""


class DvrCurvesError(Exception):
    """Base class for all package-specific errors."""


class NegativeValuationError(DvrCurvesError, ArithmeticError):
    """Residue requested for an element outside the valuation ring."""


class NotUnitError(DvrCurvesError, ArithmeticError):
    """An O-inverse was requested for an element of positive valuation."""


class NamespaceMismatchError(DvrCurvesError, ValueError):
    """Operands live over different variable namespaces or coefficient rings."""


class PolySyntaxError(DvrCurvesError, ValueError):
    """Polynomial text failed to parse; carries the offending offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
        self.bare_message = message


class UnknownVariableError(PolySyntaxError):
    """A name in polynomial text is not part of the target namespace."""


class InvalidSeriesError(DvrCurvesError, ValueError):
    """The additive series does not satisfy s(T+U) = s(T) + s(U)."""


class InvalidExponentError(DvrCurvesError, ValueError):
    """Series extension exponent is not an admissible Frobenius power."""


class NotZeroDimensionalError(DvrCurvesError, ValueError):
    """Operation requires a zero-dimensional quotient."""


class DimensionMismatchError(DvrCurvesError, ValueError):
    """Matrix/vector shapes do not line up."""


class BoundExceededError(DvrCurvesError, RuntimeError):
    """A configured search bound (size cap, valuation depth) was overflowed."""


class SeriesFormError(DvrCurvesError, ValueError):
    """Series is not in the pure t-power normal form required here."""


class InputError(DvrCurvesError, ValueError):
    """Malformed input file or flag value (CLI layer)."""
