"""Exception types shared across the package."""


class KantorError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(KantorError):
    """Operands live in spaces of different dimensions."""

    @classmethod
    def of(cls, expected, got):
        return cls(f"dimension mismatch: expected {expected}, got {got}")


class NotClosedError(KantorError):
    """A subspace claimed to be a subalgebra is not closed under the product.

    Carries the violating pair of basis indices and the offending product
    vector (in ambient coordinates).
    """

    def __init__(self, i, j, product):
        self.i = i
        self.j = j
        self.product = product
        super().__init__(f"basis product ({i},{j}) leaves the subspace: {product}")


class AlgebraFormatError(KantorError):
    """An algebra (or involution) file violates the documented JSON schema."""

    def __init__(self, message, where=None):
        self.where = where
        if where is not None:
            message = f"{message} (at {where})"
        super().__init__(message)


class ExprSyntaxError(KantorError):
    """Identity-language syntax error, with the byte offset of the problem."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (byte {offset})")


class MissingBracketError(KantorError):
    """An identity uses the second product {,} but no bracket table was given."""


class BudgetExceededError(KantorError):
    """The polynomial engine hit its reduction-count or degree guardrail."""

    def __init__(self, message, reductions=None, degree=None):
        self.reductions = reductions
        self.degree = degree
        super().__init__(message)


class GateError(KantorError):
    """A constructor's validating precondition failed (named check included)."""

    def __init__(self, check, detail=""):
        self.check = check
        msg = f"precondition '{check}' failed"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
