"""Arbitrary-input robustness for all three parsers: any text either
parses or raises a located ParseError/UnsupportedError."""

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from semverb.errors import ParseError, UnsupportedError
from semverb.syntax import parse_owl_document, parse_sparql, parse_turtle

_TEXT = st.text(max_size=120)
_SYNTAXY_TEXT = st.text(
    alphabet=st.sampled_from(list(
        "abcXYZ0189_:<>{}()[];.,^^\"'@?$#\\ \t\n-+*=якظ"
    )),
    max_size=120,
)

PARSERS = [parse_turtle, parse_owl_document, parse_sparql]


def _check(parser, text):
    try:
        parser(text)
    except ParseError as e:
        assert e.line >= 1 and e.column >= 1
        assert e.expected
    except UnsupportedError as e:
        assert e.line is None or (e.line >= 1 and e.column >= 1)


@pytest.mark.parametrize("parser", PARSERS)
@given(text=_TEXT)
@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
def test_parsers_never_crash_on_arbitrary_text(parser, text):
    _check(parser, text)


@pytest.mark.parametrize("parser", PARSERS)
@given(text=_SYNTAXY_TEXT)
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
def test_parsers_never_crash_on_syntax_shaped_text(parser, text):
    _check(parser, text)
