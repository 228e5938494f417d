"""Exception types shared across the package.

Every error raised by the library derives from RingLabError so callers
(and the command line driver) can distinguish bad input from bugs.
"""


class RingLabError(Exception):
    """Base class for all library errors."""


class ValidationError(RingLabError):
    """Input data failed a structural validity check."""


class NotPrime(ValidationError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class DegreeOutOfRange(ValidationError):
    def __init__(self, k):
        super().__init__(f"extension degree {k} out of range (need k >= 1)")
        self.k = k


class FieldTooLarge(ValidationError):
    def __init__(self, q, bound):
        super().__init__(f"field size {q} exceeds bound {bound}")
        self.q = q
        self.bound = bound


class DivisionByZero(RingLabError, ZeroDivisionError):
    def __init__(self, msg="division by zero"):
        super().__init__(msg)


class ShapeMismatch(ValidationError):
    """Structure data has the wrong shape or out-of-range entries."""


class NotAssociative(ValidationError):
    def __init__(self, i, j, k):
        super().__init__(f"associativity fails on basis triple ({i}, {j}, {k})")
        self.triple = (i, j, k)


class NotUnital(ValidationError):
    def __init__(self, i):
        super().__init__(f"designated unity fails on basis element {i}")
        self.index = i


class BilinearityViolation(ValidationError):
    def __init__(self, i, j, k):
        super().__init__(
            f"structure constant ({i}, {j}, {k}) incompatible with the additive orders"
        )
        self.triple = (i, j, k)


class AlgebraMismatch(RingLabError):
    """Operands live over different fields or have incompatible shapes."""


class DimensionTooLarge(ValidationError):
    def __init__(self, dim, reason=""):
        super().__init__(f"dimension {dim} too large{': ' + reason if reason else ''}")
        self.dim = dim


class BudgetExceeded(RingLabError):
    def __init__(self, needed, budget):
        super().__init__(f"operation needs {needed} steps, budget is {budget}")
        self.needed = needed
        self.budget = budget


class NotAnIdeal(ValidationError):
    """The given subset is not a two-sided ideal."""


class NotPrimePower(RingLabError):
    def __init__(self, n):
        super().__init__(f"{n} is not a prime power")
        self.n = n


class NotDividing(RingLabError):
    def __init__(self, p, n):
        super().__init__(f"{p} does not divide {n}")
        self.p = p
        self.n = n


class DegreeMismatch(RingLabError):
    def __init__(self, got, want):
        super().__init__(f"polynomial degree {got}, expected {want}")
        self.got = got
        self.want = want


class UnknownBuiltin(RingLabError):
    def __init__(self, name):
        super().__init__(f"unknown builtin {name!r}")
        self.name = name


class BadParams(RingLabError):
    """Builtin constructor parameters are malformed."""


class ParseError(RingLabError):
    """A ring or algebra description file could not be parsed."""
