"""Exception hierarchy shared by every module in the package."""


class SemigroupError(ValueError):
    """Base class for invalid input to a semigroup construction or query."""


class EntryOutOfRange(SemigroupError):
    def __init__(self, x, y, value, n):
        self.x, self.y, self.value, self.n = x, y, value, n
        super().__init__(f"table[{x}][{y}] = {value} is not an element id < {n}")


class NotAssociative(SemigroupError):
    def __init__(self, x, y, z):
        self.witness = (x, y, z)
        super().__init__(f"associativity fails at (x, y, z) = ({x}, {y}, {z})")


class InvalidParams(SemigroupError):
    pass


class NotAGroup(SemigroupError):
    pass


class IrregularMatrix(SemigroupError):
    def __init__(self, kind, index):
        self.kind, self.index = kind, index
        super().__init__(f"sandwich matrix {kind} {index} consists entirely of zeros")


class EmptyGeneratingSet(SemigroupError):
    pass


class NotASubsemigroup(SemigroupError):
    pass


class OutOfRange(SemigroupError):
    pass


class SameVertex(SemigroupError):
    pass


class NotIdempotent(SemigroupError):
    pass


class InvalidK(SemigroupError):
    pass


class NotReesConstructed(SemigroupError):
    pass


class SizeCapExceeded(SemigroupError):
    def __init__(self, size, cap):
        self.size, self.cap = size, cap
        super().__init__(
            f"component with {size} vertices exceeds the exact-solver cap {cap}; "
            f"raise it with --cap or MONOGENIC_CAP"
        )


class SpecParseError(SemigroupError):
    pass


class TheoremViolation(AssertionError):
    """A checked identity did not hold; ``witness`` pins the failing instance."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message} (witness: {witness})")
