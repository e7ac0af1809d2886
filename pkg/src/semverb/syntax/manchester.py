"""Manchester-syntax subset parser.

Frames: Class: (SubClassOf:), Individual: (Types:, Facts:). Expressions:
AND / OR / NOT / SOME / ONLY / MIN / MAX / EXACTLY / VALUE with
parentheses and {a1, ..., am} enumerations. Keywords are matched
case-insensitively; a class whose name collides with a keyword must be
written as a prefixed name.
"""

from __future__ import annotations

from typing import Mapping, Union

from ..errors import ParseError, UnsupportedError
from ..model import (
    Atomic,
    Axiom,
    ClassAssertion,
    ClassExpression,
    DEFAULT_PREFIXES,
    Exactly,
    Iri,
    Literal,
    Max,
    Min,
    Not,
    OneOf,
    Only,
    PropertyAssertion,
    Some,
    SubClassOf,
    Value,
    conjunction,
    disjunction,
    expand_prefixed_name,
)
from . import lexer
from .lexer import Token, TokenStream
from .terms import parse_literal, resolve_iri_token

_CE_KEYWORDS = frozenset({"and", "or", "not", "some", "only", "min", "max", "exactly", "value"})
_FRAME_KEYWORDS = frozenset({"Class", "Individual"})
_SECTION_KEYWORDS = frozenset({"SubClassOf", "Types", "Facts"})
_KNOWN_UNSUPPORTED = frozenset({
    "EquivalentTo", "DisjointWith", "DisjointUnionOf", "ObjectProperty", "DataProperty",
    "AnnotationProperty", "Annotations", "Domain", "Range", "SubPropertyOf",
    "Characteristics", "InverseOf", "Datatype", "DifferentFrom", "SameAs", "HasKey",
})

_MAX_NESTING = 128


def parse_manchester(text: str, prefixes: Mapping[str, str] | None = None) -> list[Axiom]:
    """Parse a sequence of Class:/Individual: frames into axioms."""
    table = dict(DEFAULT_PREFIXES)
    if prefixes:
        table.update(prefixes)
    ts = TokenStream(lexer.tokenize(text))
    axioms: list[Axiom] = []
    if ts.at_end():
        return axioms
    while not ts.at_end():
        keyword = _frame_keyword(ts)
        if keyword == "Class":
            axioms.extend(_parse_class_frame(ts, table))
        else:
            axioms.extend(_parse_individual_frame(ts, table))
    return axioms


def parse_class_expression(text: str, prefixes: Mapping[str, str] | None = None) -> ClassExpression:
    """Parse a bare class expression (no frame keywords)."""
    table = dict(DEFAULT_PREFIXES)
    if prefixes:
        table.update(prefixes)
    ts = TokenStream(lexer.tokenize(text))
    ce = _parse_ce(ts, table, 0)
    if not ts.at_end():
        ts.error("end of expression")
    return ce


def parse_owl_document(text: str,
                       prefixes: Mapping[str, str] | None = None,
                       ) -> Union[list[Axiom], ClassExpression]:
    """Dispatch owl input: frame documents parse to axioms, anything else
    parses as one bare class expression."""
    if starts_with_frame(text):
        return parse_manchester(text, prefixes)
    return parse_class_expression(text, prefixes)


def starts_with_frame(text: str) -> bool:
    try:
        first = lexer.tokenize(text)[0]
    except ParseError:
        return True  # let the frame parser report the lexical error
    if first.kind == lexer.EOF:
        return True  # empty document parses as zero frames
    return first.kind == lexer.PNAME and not first.local


def _frame_keyword(ts: TokenStream) -> str:
    tok = ts.peek()
    if tok.kind == lexer.PNAME and not tok.local:
        if tok.prefix in _FRAME_KEYWORDS:
            ts.next()
            return tok.prefix  # type: ignore[return-value]
        if tok.prefix in _KNOWN_UNSUPPORTED:
            raise UnsupportedError(f"frame '{tok.prefix}:' is not supported", tok.line, tok.column)
    ts.error("'Class:' or 'Individual:'")
    raise AssertionError  # unreachable


def _section_keyword(ts: TokenStream) -> str | None:
    """Consume and return the next section keyword, None at a frame boundary."""
    tok = ts.peek()
    if tok.kind != lexer.PNAME or tok.local:
        return None
    if tok.prefix in _FRAME_KEYWORDS:
        return None
    if tok.prefix in _SECTION_KEYWORDS:
        ts.next()
        return tok.prefix
    if tok.prefix in _KNOWN_UNSUPPORTED:
        raise UnsupportedError(f"section '{tok.prefix}:' is not supported", tok.line, tok.column)
    ts.error("a section keyword such as 'SubClassOf:'")
    raise AssertionError  # unreachable


def _parse_name(ts: TokenStream, prefixes: Mapping[str, str]) -> Iri:
    """A class/property/individual name: bare word, prefixed name or IRI.

    Bare words that collide with expression keywords are rejected; such
    names must be written as prefixed names.
    """
    tok = ts.peek()
    if tok.kind == lexer.WORD:
        if tok.value.lower() in _CE_KEYWORDS:
            ts.error("a name (keywords must be written as prefixed names)")
        ts.next()
        return expand_prefixed_name(":" + tok.value, prefixes)
    if tok.kind in (lexer.PNAME, lexer.IRIREF):
        return resolve_iri_token(ts.next(), prefixes)
    ts.error("a name")
    raise AssertionError  # unreachable


def _parse_class_frame(ts: TokenStream, prefixes: Mapping[str, str]) -> list[Axiom]:
    cls = Atomic(_parse_name(ts, prefixes))
    axioms: list[Axiom] = []
    while True:
        section = _section_keyword(ts)
        if section is None:
            break
        if section != "SubClassOf":
            tok = ts.peek()
            raise UnsupportedError(
                f"section '{section}:' is not valid in a Class frame", tok.line, tok.column
            )
        while True:
            axioms.append(SubClassOf(cls, _parse_ce(ts, prefixes, 0)))
            if not ts.match_punct(","):
                break
    return axioms


def _parse_individual_frame(ts: TokenStream, prefixes: Mapping[str, str]) -> list[Axiom]:
    individual = _parse_name(ts, prefixes)
    axioms: list[Axiom] = []
    while True:
        section = _section_keyword(ts)
        if section is None:
            break
        if section == "Types":
            while True:
                axioms.append(ClassAssertion(individual, _parse_ce(ts, prefixes, 0)))
                if not ts.match_punct(","):
                    break
        elif section == "Facts":
            while True:
                prop = _parse_name(ts, prefixes)
                obj = _parse_fact_object(ts, prefixes)
                axioms.append(PropertyAssertion(individual, prop, obj))
                if not ts.match_punct(","):
                    break
        else:
            tok = ts.peek()
            raise UnsupportedError(
                f"section '{section}:' is not valid in an Individual frame", tok.line, tok.column
            )
    return axioms


def _parse_fact_object(ts: TokenStream, prefixes: Mapping[str, str]) -> Union[Iri, Literal]:
    tok = ts.peek()
    if tok.kind in (lexer.STRING, lexer.INTEGER, lexer.DECIMAL):
        return parse_literal(ts, prefixes)
    return _parse_name(ts, prefixes)


# --- class expressions ------------------------------------------------------

def _parse_ce(ts: TokenStream, prefixes: Mapping[str, str], depth: int) -> ClassExpression:
    if depth > _MAX_NESTING:
        tok = ts.peek()
        raise ParseError(tok.line, tok.column, "shallower nesting", f"depth > {_MAX_NESTING}")
    operands = [_parse_conjunction(ts, prefixes, depth)]
    while ts.match_word("OR"):
        operands.append(_parse_conjunction(ts, prefixes, depth))
    return disjunction(operands)


def _parse_conjunction(ts: TokenStream, prefixes: Mapping[str, str], depth: int) -> ClassExpression:
    operands = [_parse_primary(ts, prefixes, depth)]
    while ts.match_word("AND"):
        operands.append(_parse_primary(ts, prefixes, depth))
    return conjunction(operands)


def _parse_primary(ts: TokenStream, prefixes: Mapping[str, str], depth: int) -> ClassExpression:
    if ts.match_word("NOT"):
        return Not(_parse_primary(ts, prefixes, depth + 1))
    tok = ts.peek()
    if tok.kind == lexer.PUNCT and tok.value == "(":
        ts.next()
        ce = _parse_ce(ts, prefixes, depth + 1)
        ts.expect_punct(")")
        return ce
    if tok.kind == lexer.PUNCT and tok.value == "{":
        ts.next()
        individuals = [_parse_name(ts, prefixes)]
        while ts.match_punct(","):
            individuals.append(_parse_name(ts, prefixes))
        ts.expect_punct("}")
        return OneOf(tuple(individuals))
    name = _parse_name(ts, prefixes)
    keyword = _restriction_keyword(ts)
    if keyword is None:
        return Atomic(name)
    if keyword in ("some", "only"):
        filler = _parse_primary(ts, prefixes, depth + 1)
        return Some(name, filler) if keyword == "some" else Only(name, filler)
    if keyword == "value":
        return Value(name, _parse_fact_object(ts, prefixes))
    # min / max / exactly
    num_tok = ts.peek()
    if num_tok.kind != lexer.INTEGER or int(num_tok.value) < 0:
        ts.error("a non-negative integer")
    ts.next()
    n = int(num_tok.value)
    return {"min": Min, "max": Max, "exactly": Exactly}[keyword](name, n)


def _restriction_keyword(ts: TokenStream) -> str | None:
    tok = ts.peek()
    if tok.kind == lexer.WORD and tok.value.lower() in _CE_KEYWORDS - {"and", "or", "not"}:
        ts.next()
        return tok.value.lower()
    return None
