"""Parsers for the three supported input languages and the Turtle serializer.

The accepted subsets are written down in docs/grammar.ebnf; anything
outside them raises UnsupportedError rather than being guessed at.
"""

from .turtle import parse_turtle, serialize_turtle
from .manchester import parse_manchester, parse_class_expression, parse_owl_document
from .sparql import parse_sparql

__all__ = [
    "parse_turtle",
    "serialize_turtle",
    "parse_manchester",
    "parse_class_expression",
    "parse_owl_document",
    "parse_sparql",
]
