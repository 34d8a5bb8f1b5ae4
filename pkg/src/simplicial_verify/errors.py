"""
Exception hierarchy for simplicial-verify.

Refuted properties are never signalled through exceptions: verifiers return a
result object with ``holds=False``. Exceptions are reserved for malformed input
and for searches that could not finish.
"""

from typing import Any


class SimplicialVerifyError(Exception):
    """Base class for every error raised by this package."""


class InvalidFaceError(SimplicialVerifyError):
    """
    Raised for malformed faces: negative vertex indices, unsorted or repeated
    vertices, and vertex labels that do not form a bijection.
    """


class NotSubcomplexError(SimplicialVerifyError):
    """Raised when a claimed subcomplex is not contained in its parent."""


class NotPureError(SimplicialVerifyError):
    """Raised when an operation defined only for pure complexes gets a non-pure one."""


class PermutationError(SimplicialVerifyError):
    """Raised when a vertex permutation is not a bijection on its domain."""


class MalformedCertificateError(SimplicialVerifyError):
    """
    Raised for certificates that cannot even be checked: an interval whose bottom
    is not contained in its top, a facet order that is not a permutation of the
    facets, or a constructibility tree with missing children.
    """


class SearchBudgetExceededError(SimplicialVerifyError):
    """
    Raised when an exhaustive search hits its time budget.

    A budget overrun is never reported as UNSAT; the partial report is attached.
    """

    def __init__(self, msg: str, report: Any) -> None:
        super().__init__(msg)
        self.report = report


class DocumentParseError(SimplicialVerifyError):
    """Raised when a complex or certificate document cannot be parsed."""

    def __init__(self, msg: str, line: int | None = None, column: int | None = None) -> None:
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{msg}{location}")
        self.line = line
        self.column = column


class UnknownCorpusEntryError(SimplicialVerifyError, KeyError):
    """Raised when a corpus name is not known."""


class GlueSpecError(SimplicialVerifyError, ValueError):
    """Raised for a gluing request with fewer than one copy."""


class SearchCancelledError(SimplicialVerifyError):
    """Raised inside a worker when a sibling branch has already settled the search."""
