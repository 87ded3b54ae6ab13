"""Exception types with a fixed CLI exit-code contract."""


class TorusDivError(Exception):
    """Base class for package errors."""

    exit_code = 1


class ParseError(TorusDivError):
    """Malformed polynomial or subgroup text."""

    exit_code = 2


class ResourceCapError(TorusDivError):
    """An enumeration or product exceeded a configured resource cap."""

    exit_code = 3


class InternalInvariantError(TorusDivError):
    """A mathematical invariant the code relies on failed to hold."""

    exit_code = 4
