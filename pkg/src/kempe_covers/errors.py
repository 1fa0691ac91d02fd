"""Exception types shared across the package."""


class KempeCoversError(Exception):
    """Base class for all errors raised by this package."""


class GraphStructureError(KempeCoversError):
    """Invalid graph construction or query."""


class LoopEdgeError(GraphStructureError):
    """An edge with equal endpoints was requested; loops are not supported."""


class UnknownVertexError(GraphStructureError):
    """A vertex id outside the graph was referenced."""


class UnknownEdgeError(GraphStructureError):
    """An edge id outside the graph was referenced."""


class ColoringError(KempeCoversError):
    """Malformed edge coloring (bad color range, not total on the carrier)."""


class IllegalColoringError(ColoringError):
    """A coloring violates adjacency-distinctness where legality is required."""


class RegularityError(KempeCoversError):
    """An operation needs a d-regular graph and the input is not one."""


class StaleSwitchError(KempeCoversError):
    """A switch is not bi-chromatic for the coloring it was applied to."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CoveringError(KempeCoversError):
    """Covering-map construction or precondition failure."""


class EnumerationLimitError(KempeCoversError):
    """Brute-force enumeration refused: the instance exceeds the size bound."""


class FormatError(KempeCoversError):
    """A JSON document does not match the instance or witness schema."""
