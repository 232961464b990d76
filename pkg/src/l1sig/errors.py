"""Exception types shared across the package."""


class L1SigError(Exception):
    """Base class for errors raised by l1sig."""


class MetricError(L1SigError, ValueError):
    """A matrix is not an admissible (semi)metric for the requested operation."""


class FormatError(L1SigError, ValueError):
    """A text file does not follow the expected format."""


class ResourceLimitError(L1SigError, RuntimeError):
    """An exponential-size computation was refused or cut short."""


class StructuralError(L1SigError, ValueError):
    """An input can be rejected without any search, e.g. duplicate points."""
