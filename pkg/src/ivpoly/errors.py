"""Exception hierarchy shared by all ivpoly modules."""


class IvpolyError(Exception):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "error"


class ZeroDenominator(IvpolyError, ZeroDivisionError):
    code = "zero_denominator"


class NonMonicDivisor(IvpolyError, ValueError):
    code = "non_monic_divisor"


class NonMonic(IvpolyError, ValueError):
    code = "non_monic"


class DegreeZero(IvpolyError, ValueError):
    code = "degree_zero"


class BadModulus(IvpolyError, ValueError):
    code = "bad_modulus"


class NonCoprimeModuli(IvpolyError, ValueError):
    code = "non_coprime_moduli"


class CompositeModulus(IvpolyError, ValueError):
    code = "composite_modulus"


class DegreeDrop(IvpolyError, ValueError):
    code = "degree_drop"


class DimensionMismatch(IvpolyError, ValueError):
    code = "dimension_mismatch"


class IndexOutOfRange(IvpolyError, IndexError):
    code = "index_out_of_range"


class ParseError(IvpolyError, ValueError):
    code = "parse_error"


class BudgetExceeded(IvpolyError):
    code = "budget_exceeded"

    def __init__(self, cases, max_cases):
        super().__init__(f"enumeration needs {cases} cases, budget is {max_cases}")
        self.cases = cases
        self.max_cases = max_cases


class InsufficientPrecision(IvpolyError, ValueError):
    code = "insufficient_precision"


class NotIntegerValuedAtMatrix(IvpolyError, ArithmeticError):
    """Raised when g mod chi_C is not divisible by d.

    Carries the offending matrix and its characteristic polynomial; their
    presence certifies that g/d is not integer-valued on M_n(Z).
    """

    code = "not_integer_valued"

    def __init__(self, matrix, char_poly, remainder, den):
        super().__init__(
            f"remainder {remainder} of numerator by {char_poly} is not divisible by {den}"
        )
        self.matrix = matrix
        self.char_poly = char_poly
        self.remainder = remainder
        self.den = den


class NonMemberGenerator(IvpolyError, ValueError):
    code = "non_member_generator"


class NonMemberElement(IvpolyError, ValueError):
    code = "non_member_element"


class InternalAssertionFailure(IvpolyError, AssertionError):
    """An arithmetic self-check failed; indicates a bug, not bad input."""

    code = "internal_assertion"
