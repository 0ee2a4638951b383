"""Exception types shared across the package."""


class OddFerrersError(Exception):
    """Base class for all domain errors."""


class NotSelfConjugate(OddFerrersError):
    """Operation requires a self-conjugate partition or shape."""


class InvalidHookList(OddFerrersError):
    """Hook arms are not strictly decreasing positive integers."""


class NotDistinctOdd(OddFerrersError):
    """Operation requires distinct odd parts."""


class MalformedSClass(OddFerrersError):
    """Input violates the structure of the odd self-conjugate class."""


class MalformedDClass(OddFerrersError):
    """Input violates the structure of the distinct-parts class."""


class MalformedDOClass(OddFerrersError):
    """Input violates the structure of the distinct-odd-parts class."""


class SeriesError(OddFerrersError):
    """Base class for truncated-series errors."""


class TruncationMismatch(SeriesError):
    """Mixed truncation orders in a series operation."""


class NonUnitConstantTerm(SeriesError):
    """Series inversion requires constant term +1 or -1."""
