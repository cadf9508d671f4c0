"""Exception types shared across the package."""


class KconnseqError(Exception):
    """Base class for all errors raised by this package."""


class EmptySequence(KconnseqError, ValueError):
    """A degree sequence must contain at least one term."""


class NonPositiveTerm(KconnseqError, ValueError):
    """Degree sequences are restricted to positive integers."""


class MapNotInjective(KconnseqError, ValueError):
    """A vertex relabeling collapsed two distinct vertices."""


class SelfLoop(KconnseqError, ValueError):
    """Simple graphs contain no loops."""


class DuplicateEdge(KconnseqError, ValueError):
    """Simple graphs contain no parallel edges."""


class VertexOutOfRange(KconnseqError, ValueError):
    """A vertex label fell outside 0..n-1."""


class SameVertex(KconnseqError, ValueError):
    """Path queries need two distinct endpoints."""


class KOutOfRange(KconnseqError, ValueError):
    """Connectivity targets must satisfy 1 <= k <= n-1."""


class NTooSmall(KconnseqError, ValueError):
    """Witness constructions need n >= k+3."""


class TargetOutOfRange(KconnseqError, ValueError):
    """An augmentation target lies outside the feasible edge-count range."""


class AugmentationStuck(KconnseqError, RuntimeError):
    """An augmentation chain violated an invariant it was meant to keep.

    Raised instead of silently repairing: either no complement edge was
    available below the target, or a chain graph failed its k-connectivity
    verification.
    """


class TooLarge(KconnseqError, ValueError):
    """Exhaustive enumeration was requested beyond the configured limit."""


class EdgeListParseError(KconnseqError, ValueError):
    """An edge-list file violated the format grammar.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"{message} at line {line_number}")
