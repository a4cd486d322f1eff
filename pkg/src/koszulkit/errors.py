"""Exception types shared across the package."""

from __future__ import annotations


class KoszulkitError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(KoszulkitError):
    """Operands live over different numbers of variables."""


class NotPrimeError(KoszulkitError):
    """A base that must be prime is not."""


class NonDivisibleError(KoszulkitError):
    """Exact monomial division requested where it does not exist."""


class NotBorelTypeError(KoszulkitError):
    """Ideal fails the Borel-type saturation condition.

    ``index`` names the first variable index where the two saturations differ.
    """

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"ideal is not of Borel type: saturations differ at j={index}")


class NotPrincipalBorelError(KoszulkitError):
    """Ideal is not the smallest p-Borel ideal of a single monomial."""


class DigitBoundError(KoszulkitError):
    """A base-p digit violates the bound required by a basis construction."""

    def __init__(self, layer: int, digit: int, bound: int):
        self.layer = layer
        self.digit = digit
        self.bound = bound
        super().__init__(
            f"digit {digit} at layer {layer} is >= {bound}; "
            "the monomial cycle basis construction does not apply"
        )


class ShapeError(KoszulkitError):
    """Input ideal does not have the required product shape."""


class NonCycleError(KoszulkitError):
    """Operation requires a cycle (or a multigraded cycle) and got something else."""


class CycleSplitsError(KoszulkitError):
    """Top-degree reduction found a decomposable cycle.

    ``pieces`` are sub-chains, each itself a cycle, summing to the input.
    """

    def __init__(self, pieces):
        self.pieces = list(pieces)
        super().__init__(
            f"cycle splits into {len(self.pieces)} shorter cycles; reduce each piece"
        )


class BoundExceeded(KoszulkitError):
    """An exhaustive search refused to run past its configured bounds."""

    def __init__(self, message: str, *, strand_dim: int | None = None, k: int | None = None):
        self.strand_dim = strand_dim
        self.k = k
        super().__init__(message)


class BasisVerificationError(KoszulkitError):
    """A candidate cycle family failed verification; message names the failing check."""
