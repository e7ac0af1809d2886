"""Turtle-subset parser and serializer.

Supported: @prefix, prefixed names, absolute IRIs in angle brackets, 'a'
for rdf:type, ';' and ',' abbreviations, plain / typed / language-tagged
literals, bare integers and decimals, comments. Blank nodes and
collections raise UnsupportedError per the data model.
"""

from __future__ import annotations

import re

from ..errors import UnsupportedError
from ..model import (
    DEFAULT_PREFIXES,
    Graph,
    Iri,
    Literal,
    RDF_TYPE,
    Triple,
    XSD_INTEGER,
    XSD_STRING,
)
from . import lexer
from .lexer import TokenStream
from .terms import parse_iri, parse_object, parse_verb


def parse_turtle(text: str) -> Graph:
    ts = TokenStream(lexer.tokenize(text))
    prefixes: dict[str, str] = dict(DEFAULT_PREFIXES)
    triples: list[Triple] = []

    while not ts.at_end():
        tok = ts.peek()
        if tok.kind == lexer.DIRECTIVE:
            ts.next()
            if tok.value == "base":
                raise UnsupportedError("@base is not supported", tok.line, tok.column)
            name = ts.peek()
            if name.kind != lexer.PNAME or name.local:
                ts.error("a prefix declaration like 'p:'")
            ts.next()
            iri_tok = ts.peek()
            if iri_tok.kind != lexer.IRIREF:
                ts.error("a namespace IRI in angle brackets")
            ts.next()
            ts.expect_punct(".")
            prefixes[name.prefix or ""] = iri_tok.value
            continue

        subject = parse_iri(ts, prefixes)
        _parse_predicate_object_list(ts, prefixes, subject, triples)
        ts.expect_punct(".")

    return Graph(tuple(triples), prefixes)


def _parse_predicate_object_list(ts: TokenStream, prefixes, subject: Iri, out: list[Triple]) -> None:
    while True:
        predicate = parse_verb(ts, prefixes, allow_vars=False)
        while True:
            obj = parse_object(ts, prefixes, allow_vars=False)
            out.append(Triple(subject, predicate, obj))  # type: ignore[arg-type]
            if not ts.match_punct(","):
                break
        if not ts.match_punct(";"):
            break
        # tolerate a trailing ';' before '.'
        nxt = ts.peek()
        if nxt.kind == lexer.PUNCT and nxt.value == ".":
            break


_LOCAL_RE = re.compile(r"\A[A-Za-z0-9_][A-Za-z0-9_-]*\Z|\A\Z")
_INTEGER_RE = re.compile(r"\A[+-]?[0-9]+\Z")
_ESCAPE_OUT = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\t": "\\t", "\r": "\\r"}


def serialize_turtle(graph: Graph) -> str:
    """One triple per line, prefixed names where possible, trailing ' .'.

    parse_turtle(serialize_turtle(g)) preserves the triple multiset.
    """
    # Longest-namespace-first so the most specific prefix wins.
    namespaces = sorted(graph.prefixes.items(), key=lambda kv: -len(kv[1]))
    used: dict[str, str] = {}

    def compress(iri: Iri) -> str:
        if iri == RDF_TYPE:
            return "a"
        for prefix, ns in namespaces:
            if iri.value.startswith(ns):
                local = iri.value[len(ns):]
                if _LOCAL_RE.match(local):
                    used[prefix] = ns
                    return f"{prefix}:{local}"
        return f"<{iri.value}>"

    def escape(text: str) -> str:
        return "".join(_ESCAPE_OUT.get(c, c) for c in text)

    def term_text(term) -> str:
        if isinstance(term, Iri):
            return compress(term)
        assert isinstance(term, Literal)
        if term.language_tag:
            return f'"{escape(term.lexical_form)}"@{term.language_tag}'
        if term.datatype == XSD_STRING:
            return f'"{escape(term.lexical_form)}"'
        if term.datatype == XSD_INTEGER and _INTEGER_RE.match(term.lexical_form):
            return term.lexical_form
        return f'"{escape(term.lexical_form)}"^^{compress(term.datatype)}'

    body_lines = [
        f"{compress(t.subject)} {compress(t.predicate)} {term_text(t.object)} ."
        for t in graph.triples
    ]
    header = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(used.items())]
    return "\n".join(header + body_lines) + ("\n" if header or body_lines else "")
