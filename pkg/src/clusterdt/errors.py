"""Exception types shared across the package."""


class ClusterDTError(Exception):
    """Base class for all errors raised by this package."""


class NonReducedWord(ClusterDTError):
    """A letter sequence is not a reduced word of the claimed element."""


class InapplicableMove(ClusterDTError):
    """A word move does not match the letter pattern at its position."""


class IndexOutOfRange(ClusterDTError):
    """A generator or wire index lies outside its legal range."""


class SingularMatrix(ClusterDTError):
    """A matrix required to be invertible has zero determinant."""


class NotGaussianDecomposable(ClusterDTError):
    """A leading principal minor vanishes, so no LDU factorisation exists."""

    def __init__(self, order: int):
        self.order = order
        super().__init__(f"leading principal minor of order {order} vanishes")


class ZeroFunction(ClusterDTError):
    """The zero rational function was passed where nonzero is required."""


class ZeroFaceValue(ClusterDTError):
    """A face variable was assigned the value zero."""


class NonGenericPoint(ClusterDTError):
    """A face minor vanishes at the given matrix."""

    def __init__(self, face_id: int):
        self.face_id = face_id
        super().__init__(f"face minor {face_id} vanishes at this point")


class FrozenVertex(ClusterDTError):
    """Mutation was requested at a frozen vertex."""


class UnknownVertex(ClusterDTError):
    """A vertex id is not part of the seed."""


class NotSeedIsomorphism(ClusterDTError):
    """A vertex bijection does not preserve the exchange matrix."""


class SeedMismatch(ClusterDTError):
    """An assignment's seed differs from the one a plan expects."""


class PlanVerificationFailed(ClusterDTError):
    """A mutation plan does not reproduce the transformation it claims."""


class NotGreedyWord(ClusterDTError):
    """No unique degree-maximizing disjoint path family exists."""
