"""
Exception hierarchy for semitop
All library errors derive from ValueError so callers can catch bad input broadly
"""

from typing import Optional


class SemiTopologyError(ValueError):
    """Base class for every error raised by the library."""


class BadParams(SemiTopologyError):
    """Parameters are outside the range a constructor or setting accepts."""


class UnknownFixture(SemiTopologyError):
    """Requested gallery fixture does not exist."""


class CapExceeded(SemiTopologyError):
    """Open-set enumeration would exceed the configured cap."""


class FamilyTruncated(CapExceeded):
    """An exact answer was requested from a truncated open family."""


class NotTopen(SemiTopologyError):
    """A set required to be topen is not."""


class SeedNotOpen(SemiTopologyError):
    """Propagation seed is not an open set."""


class SeedEmpty(SemiTopologyError):
    """Propagation seed is empty."""


class DocumentError(SemiTopologyError):
    """
    Problem with a semitopology document.

    Carries the field path and (for JSON syntax errors) line number so the
    CLI can point at the offending input.
    """

    def __init__(self, message: str, field: Optional[str] = None,
                 line: Optional[int] = None) -> None:
        super().__init__(message)
        self.field = field
        self.line = line

    def to_dict(self) -> dict:
        return {
            'type': type(self).__name__,
            'message': str(self),
            'field': self.field,
            'line': self.line,
        }


class ParseError(DocumentError):
    """Document is not well-formed JSON/YAML."""


class SchemaError(DocumentError):
    """Document parsed but violates the schema (unknown label, duplicates)."""
