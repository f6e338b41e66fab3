"""Exception types raised by the library; the CLI turns them into exit status 1."""

from __future__ import annotations


class GclabError(ValueError):
    """Base class for every validation failure gclab reports."""


class GraphError(GclabError):
    """A graph violates connectivity, valence or index constraints."""


class ChainError(GclabError):
    """A chain has the wrong grading, directedness or coefficient ring."""


class FormatError(GclabError):
    def __init__(self, message: str, line: int | None = None, source: str = "") -> None:
        self.line = line
        self.source = source
        where = f"{source}:" if source else ""
        if line is not None:
            message = f"{where}{line}: {message}"
        elif where:
            message = f"{where} {message}"
        super().__init__(message)


class LinkTypeError(GclabError):
    """A suspension or delooping left some component outside 1 <= a_i <= N-2."""


class InfeasibleError(GclabError):
    """No admissible parameters exist for the requested family."""


class LedgerError(GclabError):
    """Multiplicity parameters must be positive integers."""
