"""Exception types shared across the library and mapped to CLI exit codes."""


class DomainError(ValueError):
    """An argument is outside an operation's mathematical domain."""


class ParseError(ValueError):
    """Malformed partition / tuple text.  Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EnumerationCapExceeded(RuntimeError):
    """An enumeration would produce more terms than the configured cap."""
