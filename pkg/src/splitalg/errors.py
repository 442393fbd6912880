"""Exception hierarchy.

Three families map onto the CLI exit codes: ``UsageError`` (1),
``PreconditionError`` (2) and ``FatalInconsistency`` (3).
"""


class SplitAlgError(Exception):
    exit_code = 2


class UsageError(SplitAlgError, ValueError):
    exit_code = 1


class MalformedSpec(UsageError):
    pass


class PreconditionError(SplitAlgError, ValueError):
    exit_code = 2


class NonPrimeModulus(PreconditionError):
    pass


class ReducibleModulus(PreconditionError):
    pass


class ElementRingMismatch(PreconditionError):
    pass


class UndecidableForRing(PreconditionError):
    pass


class InfiniteRing(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError, IndexError):
    pass


class NotAField(PreconditionError):
    pass


class NotFiniteField(PreconditionError):
    pass


class NonMonicInput(PreconditionError):
    pass


class AlgebraMismatch(PreconditionError):
    pass


class DegreeMismatch(PreconditionError):
    pass


class DegreeTooLarge(PreconditionError):
    pass


class NotACompleteFactorization(PreconditionError):
    pass


class RingMismatch(PreconditionError):
    pass


class NotAHomomorphism(PreconditionError):
    pass


class UnsupportedBaseRing(PreconditionError):
    pass


class UnsupportedRing(PreconditionError):
    pass


class SearchSpaceTooLarge(PreconditionError):
    def __init__(self, message, cardinality=None):
        super().__init__(message)
        self.cardinality = cardinality


class NotSymmetric(PreconditionError):
    def __init__(self, message, transposition=None):
        super().__init__(message)
        self.transposition = transposition


class EmptyBlock(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ProductMismatch(PreconditionError):
    pass


class NotSeparable(PreconditionError):
    pass


class FatalInconsistency(SplitAlgError, AssertionError):
    """A computed result contradicts a theorem; always a bug."""

    exit_code = 3


class InternalInvariantViolation(FatalInconsistency):
    pass


class NonInvertibleResult(FatalInconsistency):
    pass
