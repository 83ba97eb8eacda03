"""Exception hierarchy shared by every module of the package."""


class LocalDimError(Exception):
    """Base class for all errors raised by localdim."""


class CycleError(LocalDimError):
    """The transitive closure of a relation set contains a cycle."""


class IdRangeError(LocalDimError):
    """An element id (or vertex index) lies outside its valid range."""


class ParamError(LocalDimError):
    """A generator or construction received an invalid parameter."""


class SizeError(LocalDimError):
    """An object would exceed a configured size cap, or is too small."""


class HeightError(LocalDimError):
    """An operation restricted to posets of height at most two got a taller one."""


class PartitionError(LocalDimError):
    """A sequence is not a partition (non-increasing positive integers)."""


class NotPleError(LocalDimError):
    """A sequence is not a partial linear extension of its host poset."""


class ChainError(LocalDimError):
    """Chains handed to a Bogart extension are not chains or not mutually incomparable."""


class InternalCycle(LocalDimError):
    """An augmented order that must be acyclic turned out cyclic (a bug)."""


class PreconditionError(LocalDimError):
    """A construction's hypothesis does not hold for the given input."""


class ParseError(LocalDimError):
    """A text file does not follow the expected format."""


class BudgetExceeded(LocalDimError):
    """An exact solver refused an instance larger than its budget, or ran out of time."""


class NodeLimit(BudgetExceeded):
    """An exact solver explored more search nodes than its budget allows."""


class VerificationError(LocalDimError):
    """A certificate failed verification; carries the offending violation."""

    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation


class ShapeError(VerificationError):
    """A cover member is not a biclique / not a nested-neighbourhood graph."""


class UncoveredEdge(VerificationError):
    """A host edge is covered by no member of a cover family."""


class ForeignEdge(VerificationError):
    """A cover member uses an edge that the host graph does not have."""
