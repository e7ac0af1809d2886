"""Hand-written tokenizer shared by the Turtle, Manchester and SPARQL parsers.

The three languages share most of their token shapes (IRI references,
prefixed names, literals, punctuation); language-specific meaning is
assigned by the parsers, which also reject tokens that have no place in
their grammar (e.g. variables outside SPARQL).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError

# Token kinds
IRIREF = "IRIREF"        # <http://...>
PNAME = "PNAME"          # prefix:local, :local, prefix:
WORD = "WORD"            # bare name: Person, SELECT, a, AND
STRING = "STRING"        # "..." with escapes resolved
LANGTAG = "LANGTAG"      # @en
DIRECTIVE = "DIRECTIVE"  # @prefix / @base
INTEGER = "INTEGER"
DECIMAL = "DECIMAL"
VAR = "VAR"              # ?name
BLANK = "BLANK"          # _:b0 (recognized so parsers can reject it cleanly)
PUNCT = "PUNCT"          # . ; , ( ) { } [ ] ^^ * =
EOF = "EOF"

_NAME_CHARS = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-"
)
_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t", "r": "\r"}


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int
    # Prefixed names keep their two halves for the parser.
    prefix: str | None = None
    local: str | None = None

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        if self.kind == PUNCT:
            return f"'{self.value}'"
        return f"{self.kind} {self.value!r}"


def tokenize(text: str) -> list[Token]:
    """Lex `text` into tokens; raises ParseError with a 1-based location."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    line = 1
    col = 1

    def error(expected: str, found: str, at_line: int | None = None, at_col: int | None = None):
        raise ParseError(at_line or line, at_col or col, expected, found)

    def advance(k: int = 1):
        nonlocal i, line, col
        for _ in range(k):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    def read_name() -> str:
        start = i
        while i < n and text[i] in _NAME_CHARS:
            advance()
        return text[start:i]

    while i < n:
        c = text[i]
        if c in " \t\r\n":
            advance()
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                advance()
            continue

        tline, tcol = line, col

        if c == "<":
            advance()
            start = i
            while i < n and text[i] not in ">\n":
                advance()
            if i >= n or text[i] != ">":
                error("closing '>'", "end of line", tline, tcol)
            value = text[start:i]
            advance()
            tokens.append(Token(IRIREF, value, tline, tcol))
            continue

        if c == '"':
            advance()
            chars: list[str] = []
            while True:
                if i >= n or text[i] == "\n":
                    error("closing '\"'", "end of line", tline, tcol)
                ch = text[i]
                if ch == "\\":
                    advance()
                    if i >= n:
                        error("escape character", "end of input", tline, tcol)
                    esc = text[i]
                    if esc not in _ESCAPES:
                        error("valid escape sequence", f"'\\{esc}'")
                    chars.append(_ESCAPES[esc])
                    advance()
                    continue
                if ch == '"':
                    advance()
                    break
                chars.append(ch)
                advance()
            tokens.append(Token(STRING, "".join(chars), tline, tcol))
            continue

        if c == "@":
            advance()
            word = read_name()
            if not word:
                error("language tag or directive", "'@'", tline, tcol)
            if word in ("prefix", "base"):
                tokens.append(Token(DIRECTIVE, word, tline, tcol))
            else:
                tokens.append(Token(LANGTAG, word, tline, tcol))
            continue

        if c == "?" or c == "$":
            advance()
            name = read_name()
            if not name:
                error("variable name", repr(c), tline, tcol)
            tokens.append(Token(VAR, name, tline, tcol))
            continue

        if c == "_" and i + 1 < n and text[i + 1] == ":":
            advance(2)
            label = read_name()
            tokens.append(Token(BLANK, label, tline, tcol))
            continue

        if c.isdigit() or (c in "+-" and i + 1 < n and text[i + 1].isdigit()):
            start = i
            if c in "+-":
                advance()
            while i < n and text[i].isdigit():
                advance()
            kind = INTEGER
            if i + 1 < n and text[i] == "." and text[i + 1].isdigit():
                kind = DECIMAL
                advance()
                while i < n and text[i].isdigit():
                    advance()
            tokens.append(Token(kind, text[start:i], tline, tcol))
            continue

        if c == "^":
            if i + 1 < n and text[i + 1] == "^":
                advance(2)
                tokens.append(Token(PUNCT, "^^", tline, tcol))
                continue
            error("'^^'", "'^'", tline, tcol)

        if c in ".;,(){}[]*=":
            advance()
            tokens.append(Token(PUNCT, c, tline, tcol))
            continue

        if c == ":":
            # empty-prefix name, e.g. :Person or bare ':'
            advance()
            local = read_name()
            tokens.append(Token(PNAME, ":" + local, tline, tcol, prefix="", local=local))
            continue

        if c in _NAME_CHARS:
            name = read_name()
            if i < n and text[i] == ":":
                advance()
                local = read_name()
                tokens.append(Token(PNAME, f"{name}:{local}", tline, tcol, prefix=name, local=local))
            else:
                tokens.append(Token(WORD, name, tline, tcol))
            continue

        error("a token", repr(c), tline, tcol)

    tokens.append(Token(EOF, "", line, col))
    return tokens


class TokenStream:
    """Cursor over a token list with the error helpers the parsers share."""

    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._pos = 0

    def peek(self, ahead: int = 0) -> Token:
        j = min(self._pos + ahead, len(self._tokens) - 1)
        return self._tokens[j]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != EOF:
            self._pos += 1
        return tok

    def at_end(self) -> bool:
        return self.peek().kind == EOF

    def error(self, expected: str, token: Token | None = None):
        tok = token or self.peek()
        raise ParseError(tok.line, tok.column, expected, tok.describe())

    def expect_punct(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind != PUNCT or tok.value != value:
            self.error(f"'{value}'")
        return self.next()

    def match_punct(self, value: str) -> bool:
        tok = self.peek()
        if tok.kind == PUNCT and tok.value == value:
            self.next()
            return True
        return False

    def match_word(self, *words: str, case_insensitive: bool = True) -> Token | None:
        """Consume the next token if it is a WORD matching one of `words`."""
        tok = self.peek()
        if tok.kind != WORD:
            return None
        value = tok.value.lower() if case_insensitive else tok.value
        targets = {w.lower() for w in words} if case_insensitive else set(words)
        if value in targets:
            return self.next()
        return None
