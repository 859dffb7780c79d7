"""Error types shared across the toolkit.

Every exception carries the process exit code the command line maps it
to: 2 for input syntax problems, 3 for ring or parameter problems, 4
for exceeded enumeration budgets, 5 for internal invariant violations.
"""

from __future__ import annotations


class DisckitError(Exception):
    """Base class for all structured errors raised by this package."""

    exit_code = 5


class InputSyntaxError(DisckitError):
    """Malformed source text; carries a 1-based line and column."""

    exit_code = 2

    def __init__(self, message: str, line: int, column: int, source: str | None = None):
        super().__init__(message)
        self.line = line
        self.column = column
        self.source = source

    def caret_diagnostic(self) -> str:
        """Multi-line message pointing at the offending column."""
        lines = [f"error: {self.args[0]} (line {self.line}, column {self.column})"]
        if self.source is not None:
            src_lines = self.source.splitlines() or [""]
            if 1 <= self.line <= len(src_lines):
                bad = src_lines[self.line - 1]
                lines.append("  " + bad)
                lines.append("  " + " " * (self.column - 1) + "^")
        return "\n".join(lines)


class RingMismatchError(DisckitError):
    """Operands live in different rings."""

    exit_code = 3


class UnsupportedRingError(DisckitError):
    """The requested ring or ring operation is outside the supported tower."""

    exit_code = 3


class ParameterError(DisckitError):
    """A parameter is out of the documented range."""

    exit_code = 3


class BudgetError(DisckitError):
    """An enumeration would exceed the configured budget."""

    exit_code = 4


class ExactDivisionError(DisckitError):
    """An exact division left a remainder; internal invariant violation."""

    exit_code = 5
