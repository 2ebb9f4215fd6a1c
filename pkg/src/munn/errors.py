"""Exception hierarchy shared across the package."""


class MunnError(Exception):
    """Base class for all domain errors raised by this package."""


class FlavorError(MunnError):
    """An operation was applied to an element outside its flavor's domain."""


class PreconditionError(MunnError):
    """A stated precondition of an operation was violated."""


class ResourceCapError(MunnError):
    """A bounded search exceeded its configured resource cap."""


class ParseError(MunnError):
    """A word or element literal could not be parsed."""
