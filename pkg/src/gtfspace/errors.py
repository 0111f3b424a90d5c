"""Exception hierarchy shared by every module of the package."""


class GtfError(Exception):
    """Base class for all errors raised by :mod:`gtfspace`."""


class MalformedInputError(GtfError, ValueError):
    """Input does not describe a well-formed structure (bad labels, indices, JSON)."""


class DomainError(GtfError, ValueError):
    """An operation was called outside its precondition."""


class ResourceError(GtfError):
    """An enumeration would exceed the configured size cap."""


class InvalidSpaceError(GtfError):
    """A space failed validation and cannot be used by the operators."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid gtf-structure: " + "; ".join(report.messages()))
