"""Term-level parsing shared by the Turtle and SPARQL parsers."""

from __future__ import annotations

from typing import Mapping, Union

from ..errors import ParseError, UnknownPrefixError, UnsupportedError
from ..model import (
    Iri,
    Literal,
    RDF_LANG_STRING,
    RDF_TYPE,
    Term,
    Variable,
    XSD_DECIMAL,
    XSD_INTEGER,
    XSD_STRING,
    expand_prefixed_name,
)
from . import lexer
from .lexer import Token, TokenStream


def resolve_iri_token(tok: Token, prefixes: Mapping[str, str]) -> Iri:
    if tok.kind == lexer.IRIREF:
        try:
            return Iri(tok.value)
        except ValueError:
            raise ParseError(tok.line, tok.column, "an absolute IRI", f"<{tok.value}>") from None
    if tok.kind == lexer.PNAME:
        try:
            return expand_prefixed_name(f"{tok.prefix}:{tok.local}", prefixes)
        except UnknownPrefixError:
            raise ParseError(
                tok.line, tok.column, "a declared prefix", f"{tok.prefix!r} in {tok.value!r}"
            ) from None
    raise ParseError(tok.line, tok.column, "an IRI", tok.describe())


def parse_iri(ts: TokenStream, prefixes: Mapping[str, str]) -> Iri:
    tok = ts.peek()
    if tok.kind in (lexer.IRIREF, lexer.PNAME):
        return resolve_iri_token(ts.next(), prefixes)
    if tok.kind == lexer.BLANK:
        raise UnsupportedError("blank nodes are not supported", tok.line, tok.column)
    ts.error("an IRI")


def parse_literal(ts: TokenStream, prefixes: Mapping[str, str]) -> Literal:
    tok = ts.next()
    if tok.kind == lexer.STRING:
        nxt = ts.peek()
        if nxt.kind == lexer.LANGTAG:
            ts.next()
            return Literal(tok.value, RDF_LANG_STRING, nxt.value.lower())
        if nxt.kind == lexer.PUNCT and nxt.value == "^^":
            ts.next()
            datatype = parse_iri(ts, prefixes)
            try:
                return Literal(tok.value, datatype)
            except ValueError as exc:
                raise ParseError(tok.line, tok.column, "a valid lexical form", str(exc)) from None
        return Literal(tok.value, XSD_STRING)
    if tok.kind == lexer.INTEGER:
        return Literal(tok.value, XSD_INTEGER)
    if tok.kind == lexer.DECIMAL:
        return Literal(tok.value, XSD_DECIMAL)
    raise ParseError(tok.line, tok.column, "a literal", tok.describe())


def parse_object(ts: TokenStream, prefixes: Mapping[str, str], allow_vars: bool) -> Term:
    tok = ts.peek()
    if tok.kind == lexer.VAR:
        if not allow_vars:
            ts.error("an IRI or literal")
        ts.next()
        try:
            return Variable(tok.value)
        except ValueError:
            raise ParseError(tok.line, tok.column, "a valid variable name", f"?{tok.value}") from None
    if tok.kind in (lexer.STRING, lexer.INTEGER, lexer.DECIMAL):
        return parse_literal(ts, prefixes)
    if tok.kind in (lexer.IRIREF, lexer.PNAME):
        return parse_iri(ts, prefixes)
    if tok.kind == lexer.BLANK:
        raise UnsupportedError("blank nodes are not supported", tok.line, tok.column)
    if tok.kind == lexer.PUNCT and tok.value in ("(", "["):
        raise UnsupportedError(
            "collections and blank node property lists are not supported", tok.line, tok.column
        )
    ts.error("an IRI, literal or variable" if allow_vars else "an IRI or literal")


def parse_verb(ts: TokenStream, prefixes: Mapping[str, str], allow_vars: bool) -> Union[Iri, Variable]:
    tok = ts.peek()
    if tok.kind == lexer.WORD and tok.value == "a":
        ts.next()
        return RDF_TYPE
    if tok.kind == lexer.VAR:
        if not allow_vars:
            ts.error("a predicate IRI or 'a'")
        ts.next()
        return Variable(tok.value)
    if tok.kind in (lexer.IRIREF, lexer.PNAME):
        return parse_iri(ts, prefixes)
    ts.error("a predicate IRI or 'a'" + (" or variable" if allow_vars else ""))
