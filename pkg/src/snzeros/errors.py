"""Exception types shared across the package."""


class SnZerosError(Exception):
    """Base class for all errors raised by this package."""


class NonPositivePart(SnZerosError):
    """A partition part was zero or negative."""


class NotWeaklyDecreasing(SnZerosError):
    """Partition parts were not given in weakly decreasing order."""


class WeightMismatch(SnZerosError):
    """Two partitions expected to have the same weight do not."""


class ResourceLimit(SnZerosError):
    """A configured size cap was exceeded."""


class InvalidMode(SnZerosError):
    """An unknown estimation mode was requested."""
