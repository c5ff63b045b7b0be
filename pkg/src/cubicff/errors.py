"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes: parse errors exit 2, applicability
errors exit 3, domain errors exit 4, invariant violations exit 5.
"""


class ParseError(ValueError):
    """Malformed textual input; carries (line, column) when known."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class ApplicabilityError(Exception):
    """Operation requested outside its guaranteed range (e.g. the class-group
    reduction on a curve without the distinguished-ideal property)."""


class DomainError(Exception):
    """Input violates a stated precondition (containment failure, reducible
    curve, division by the zero polynomial, ...)."""


class InvariantError(Exception):
    """An internal consistency check failed.  Always indicates a bug, never a
    bad input."""
