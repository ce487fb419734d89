"""Exception hierarchy shared by all modules."""


class TorelliError(Exception):
    """Base class; ``kind`` is the short tag reported by the CLI."""

    kind = "error"


class DimensionError(TorelliError, ValueError):
    kind = "dimension"


class PreconditionError(TorelliError, ValueError):
    kind = "precondition"


class DomainError(TorelliError, ValueError):
    kind = "domain"


class NotFoundError(TorelliError, LookupError):
    kind = "not-found"


class ResourceError(TorelliError):
    kind = "resource"


class CacheError(TorelliError):
    kind = "cache"
