"""Exception types shared across the package."""


class PolyweightError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatch(PolyweightError, ValueError):
    """Operands live in ambient lattices of different dimensions."""


class DomainError(PolyweightError, ValueError):
    """The requested operation is undefined for this group datum."""


class HypothesisFailure(DomainError):
    """A construction hypothesis fails for the datum.

    The even orthogonal similitude family is the standing example: its Weyl
    group only contains even products of block swaps, so single within-block
    transpositions are missing and the blockwise witness machinery is not
    available.
    """


class CapExceeded(DomainError):
    """A group enumeration exceeded the configured element cap."""


class PreconditionError(PolyweightError, ValueError):
    """Caller violated a documented operation precondition."""


class DecompositionUnavailable(PreconditionError):
    """The weight class has no restricted digit decomposition.

    Raised when no restricted weight is congruent to the input modulo the
    requested power of p times the full character lattice.  For the odd
    orthogonal similitude family the short simple coroot pairs evenly with
    every character, so roughly half of all residue classes are affected.
    """


class ShiftRangeError(PreconditionError):
    """Shift index outside the admissible range for the orbit check."""
