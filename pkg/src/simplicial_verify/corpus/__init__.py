from .library import CorpusLibrary, complex_from_strings, corpus_get, default_library
from .schemas import CorpusEntry, CorpusObject, Expectation
from .verify import CheckRow, CheckStatus, CorpusReport, CorpusVerifier, corpus_verify

__all__ = [
    "CheckRow",
    "CheckStatus",
    "CorpusEntry",
    "CorpusLibrary",
    "CorpusObject",
    "CorpusReport",
    "CorpusVerifier",
    "Expectation",
    "complex_from_strings",
    "corpus_get",
    "corpus_verify",
    "default_library",
]
