"""Exception types shared by every module in the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured resource guard.

    Distinct from DomainError on purpose: the input is legal, but the
    requested computation is not affordable at the current guard settings.
    """
