"""Exception types shared across the package.

Every failure the engine can produce is one of these; parsers never raise
bare ValueError/KeyError at their public boundary.
"""

from __future__ import annotations


class VerbalizerError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(VerbalizerError):
    """Malformed input. Carries a 1-based source location."""

    def __init__(self, line: int, column: int, expected: str, found: str):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        super().__init__(f"line {line}, column {column}: expected {expected}, found {found}")


class UnsupportedError(VerbalizerError):
    """Input is well-formed but uses a construct outside the supported subset.

    The supported subsets are frozen in docs/grammar.ebnf; anything beyond
    them is reported through this error rather than guessed at.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        self.message = message
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class UnknownPrefixError(VerbalizerError):
    """A prefixed name uses a prefix that was never declared."""

    def __init__(self, prefix: str):
        self.prefix = prefix
        super().__init__(f"unknown prefix {prefix!r}")


class LexicalizationError(VerbalizerError):
    """An atom could not be mapped to words."""


class EmptyNameError(LexicalizationError):
    """An IRI yields no usable name (no label, empty fragment and path)."""


class UnknownWordError(LexicalizationError):
    """The frequency lexicon has no entry for a word we must classify."""

    def __init__(self, word: str):
        self.word = word
        super().__init__(f"word {word!r} not in frequency lexicon")


class MalformedTreeError(VerbalizerError):
    """A dependency tree violates its structural invariants."""


class ExpressionTooDeepError(VerbalizerError):
    """Class expression nesting exceeds the recursion guard."""


class MultiProjectionUnsupported(UnsupportedError):
    """SELECT queries with more than one projection variable are rejected
    outright rather than half-verbalized."""

    def __init__(self, count: int):
        super().__init__(f"cannot verbalize a query with {count} projection variables")
        self.count = count
