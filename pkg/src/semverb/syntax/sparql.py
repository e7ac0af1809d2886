"""SPARQL SELECT subset parser.

Supported: PREFIX declarations, a single basic graph pattern with ';' and
',' abbreviations, OPTIONAL blocks, LIMIT and ORDER BY. Everything else
(CONSTRUCT/ASK/DESCRIBE, FILTER, UNION, DISTINCT, aggregates, ...) raises
UnsupportedError.
"""

from __future__ import annotations

from typing import Mapping, Union

from ..errors import ParseError, UnsupportedError
from ..model import (
    DEFAULT_PREFIXES,
    Iri,
    Modifiers,
    OrderBy,
    SparqlSelect,
    TriplePattern,
    Variable,
)
from . import lexer
from .lexer import TokenStream
from .terms import parse_object, parse_verb, resolve_iri_token

_UNSUPPORTED_FORMS = ("construct", "ask", "describe")
_UNSUPPORTED_IN_GROUP = ("filter", "union", "bind", "minus", "graph", "service", "values")
_UNSUPPORTED_MODIFIERS = ("group", "having", "offset", "union")


def parse_sparql(text: str) -> SparqlSelect:
    ts = TokenStream(lexer.tokenize(text))
    prefixes: dict[str, str] = dict(DEFAULT_PREFIXES)

    while ts.match_word("PREFIX"):
        name = ts.peek()
        if name.kind != lexer.PNAME or name.local:
            ts.error("a prefix declaration like 'p:'")
        ts.next()
        iri_tok = ts.peek()
        if iri_tok.kind != lexer.IRIREF:
            ts.error("a namespace IRI in angle brackets")
        ts.next()
        prefixes[name.prefix or ""] = iri_tok.value

    form = ts.peek()
    if form.kind == lexer.WORD and form.value.lower() in _UNSUPPORTED_FORMS:
        raise UnsupportedError(
            f"{form.value.upper()} queries are not supported, only SELECT", form.line, form.column
        )
    if not ts.match_word("SELECT"):
        ts.error("'SELECT'")

    star = ts.peek()
    if star.kind == lexer.PUNCT and star.value == "*":
        raise UnsupportedError("SELECT * is not supported; project explicit variables",
                               star.line, star.column)
    if star.kind == lexer.WORD and star.value.lower() in ("distinct", "reduced"):
        raise UnsupportedError("DISTINCT/REDUCED are not supported", star.line, star.column)

    projection: list[Variable] = []
    proj_tokens = []
    while ts.peek().kind == lexer.VAR:
        tok = ts.next()
        try:
            projection.append(Variable(tok.value))
        except ValueError:
            raise ParseError(tok.line, tok.column, "a valid variable name", f"?{tok.value}") from None
        proj_tokens.append(tok)
    if not projection:
        agg = ts.peek()
        if agg.kind == lexer.PUNCT and agg.value == "(":
            raise UnsupportedError("expressions and aggregates in SELECT are not supported",
                                   agg.line, agg.column)
        ts.error("a projection variable")

    ts.match_word("WHERE")
    ts.expect_punct("{")
    body, optionals = _parse_group(ts, prefixes)
    ts.expect_punct("}")
    modifiers = _parse_modifiers(ts)
    if not ts.at_end():
        ts.error("end of query")

    bound = {v for p in body for v in p.variables()}
    for group in optionals:
        bound |= {v for p in group for v in p.variables()}
    for var, tok in zip(projection, proj_tokens):
        if var not in bound:
            raise ParseError(tok.line, tok.column,
                             "a projection variable bound in the pattern", f"?{var.name}")

    return SparqlSelect(tuple(projection), tuple(body), tuple(optionals), modifiers)


def _parse_group(ts: TokenStream, prefixes: Mapping[str, str]):
    body: list[TriplePattern] = []
    optionals: list[tuple[TriplePattern, ...]] = []
    while True:
        tok = ts.peek()
        if tok.kind == lexer.PUNCT and tok.value == "}":
            return body, optionals
        if tok.kind == lexer.EOF:
            ts.error("'}'")
        if tok.kind == lexer.WORD and tok.value.lower() in _UNSUPPORTED_IN_GROUP:
            raise UnsupportedError(f"{tok.value.upper()} is not supported", tok.line, tok.column)
        if tok.kind == lexer.PUNCT and tok.value == "{":
            raise UnsupportedError("nested group patterns (UNION, subqueries) are not supported",
                                   tok.line, tok.column)
        if tok.kind == lexer.WORD and tok.value.lower() == "optional":
            ts.next()
            ts.expect_punct("{")
            inner: list[TriplePattern] = []
            while not (ts.peek().kind == lexer.PUNCT and ts.peek().value == "}"):
                itok = ts.peek()
                if itok.kind == lexer.EOF:
                    ts.error("'}'")
                if itok.kind == lexer.WORD and itok.value.lower() in _UNSUPPORTED_IN_GROUP + ("optional",):
                    raise UnsupportedError(f"nested {itok.value.upper()} is not supported",
                                           itok.line, itok.column)
                _parse_triples_same_subject(ts, prefixes, inner)
                if not ts.match_punct("."):
                    break
            ts.expect_punct("}")
            optionals.append(tuple(inner))
            continue
        _parse_triples_same_subject(ts, prefixes, body)
        # '.' separates groups; it is optional before '}'
        if not ts.match_punct("."):
            nxt = ts.peek()
            if not (nxt.kind == lexer.PUNCT and nxt.value == "}"):
                if nxt.kind == lexer.WORD and nxt.value.lower() == "optional":
                    continue
                if nxt.kind == lexer.WORD and nxt.value.lower() in _UNSUPPORTED_IN_GROUP:
                    raise UnsupportedError(f"{nxt.value.upper()} is not supported",
                                           nxt.line, nxt.column)
                ts.error("'.' or '}'")


def _parse_triples_same_subject(ts: TokenStream, prefixes, out: list[TriplePattern]) -> None:
    subject = _parse_subject(ts, prefixes)
    while True:
        predicate = parse_verb(ts, prefixes, allow_vars=True)
        while True:
            obj = parse_object(ts, prefixes, allow_vars=True)
            out.append(TriplePattern(subject, predicate, obj))
            if not ts.match_punct(","):
                break
        if not ts.match_punct(";"):
            break
        nxt = ts.peek()
        if nxt.kind == lexer.PUNCT and nxt.value in (".", "}"):
            break


def _parse_subject(ts: TokenStream, prefixes) -> Union[Variable, Iri]:
    tok = ts.peek()
    if tok.kind == lexer.VAR:
        ts.next()
        try:
            return Variable(tok.value)
        except ValueError:
            raise ParseError(tok.line, tok.column, "a valid variable name", f"?{tok.value}") from None
    if tok.kind in (lexer.IRIREF, lexer.PNAME):
        return resolve_iri_token(ts.next(), prefixes)
    if tok.kind == lexer.BLANK:
        raise UnsupportedError("blank nodes are not supported", tok.line, tok.column)
    ts.error("a subject variable or IRI")
    raise AssertionError  # unreachable


def _parse_modifiers(ts: TokenStream) -> Modifiers:
    order_by = None
    limit = None
    tok = ts.peek()
    if tok.kind == lexer.WORD and tok.value.lower() in _UNSUPPORTED_MODIFIERS:
        raise UnsupportedError(f"{tok.value.upper()} clauses are not supported", tok.line, tok.column)
    if ts.match_word("ORDER"):
        if not ts.match_word("BY"):
            ts.error("'BY'")
        descending = False
        wrapped = False
        if ts.match_word("DESC"):
            descending = True
            wrapped = True
        elif ts.match_word("ASC"):
            wrapped = True
        if wrapped:
            ts.expect_punct("(")
        var_tok = ts.peek()
        if var_tok.kind != lexer.VAR:
            ts.error("a variable to order by")
        ts.next()
        if wrapped:
            ts.expect_punct(")")
        order_by = OrderBy(Variable(var_tok.value), descending)
    if ts.match_word("LIMIT"):
        num = ts.peek()
        if num.kind != lexer.INTEGER or int(num.value) < 0:
            ts.error("a non-negative integer")
        ts.next()
        limit = int(num.value)
    tok = ts.peek()
    if tok.kind == lexer.WORD and tok.value.lower() in _UNSUPPORTED_MODIFIERS + ("order",):
        raise UnsupportedError(f"{tok.value.upper()} clauses are not supported here",
                               tok.line, tok.column)
    return Modifiers(limit, order_by)
