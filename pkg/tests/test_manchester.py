import pytest

from semverb.errors import ParseError, UnsupportedError
from semverb.model import (
    And,
    Atomic,
    ClassAssertion,
    Exactly,
    Iri,
    Literal,
    Max,
    Min,
    Not,
    OneOf,
    Only,
    Or,
    PropertyAssertion,
    Some,
    SubClassOf,
    Value,
    XSD_DATE,
)
from semverb.syntax import parse_class_expression, parse_manchester

EX = "http://example.org/"


def ex(name):
    return Iri(EX + name)


def test_subclass_frame():
    axioms = parse_manchester("Class: Scientist SubClassOf: Person")
    assert axioms == [SubClassOf(Atomic(ex("Scientist")), Atomic(ex("Person")))]


def test_subclass_frame_multiline():
    axioms = parse_manchester("Class: Professor\n  SubClassOf: worksAt SOME University\n")
    assert axioms == [SubClassOf(
        Atomic(ex("Professor")),
        Some(ex("worksAt"), Atomic(ex("University"))),
    )]


def test_individual_frame():
    axioms = parse_manchester(
        'Individual: Albert_Einstein\n'
        '  Types: Person\n'
        '  Facts: birthPlace Ulm, birthDate "1879-03-14"^^xsd:date\n'
    )
    assert axioms == [
        ClassAssertion(ex("Albert_Einstein"), Atomic(ex("Person"))),
        PropertyAssertion(ex("Albert_Einstein"), ex("birthPlace"), ex("Ulm")),
        PropertyAssertion(ex("Albert_Einstein"), ex("birthDate"),
                          Literal("1879-03-14", XSD_DATE)),
    ]


def test_nested_expression():
    ce = parse_class_expression(
        "Person AND worksAt SOME (University AND locatedIn VALUE Spain)"
    )
    assert ce == And((
        Atomic(ex("Person")),
        Some(ex("worksAt"), And((
            Atomic(ex("University")),
            Value(ex("locatedIn"), ex("Spain")),
        ))),
    ))


def test_and_left_folds_flat():
    ce = parse_class_expression("A AND B AND C")
    assert ce == And((Atomic(ex("A")), Atomic(ex("B")), Atomic(ex("C"))))


def test_or_and_precedence():
    ce = parse_class_expression("A AND B OR C")
    assert ce == Or((And((Atomic(ex("A")), Atomic(ex("B")))), Atomic(ex("C"))))


def test_not_binds_tight():
    ce = parse_class_expression("NOT A AND B")
    assert ce == And((Not(Atomic(ex("A"))), Atomic(ex("B"))))


def test_cardinalities():
    assert parse_class_expression("child MIN 3") == Min(ex("child"), 3)
    assert parse_class_expression("child MAX 0") == Max(ex("child"), 0)
    assert parse_class_expression("child EXACTLY 2") == Exactly(ex("child"), 2)


def test_only_restriction():
    assert parse_class_expression("worksAt ONLY University") == Only(
        ex("worksAt"), Atomic(ex("University"))
    )


def test_one_of():
    ce = parse_class_expression("{Alice, Bob}")
    assert ce == OneOf((ex("Alice"), ex("Bob")))


def test_keywords_case_insensitive():
    assert parse_class_expression("a and b") == parse_class_expression("a AND b")
    assert parse_class_expression("p some C") == parse_class_expression("p SOME C")


def test_prefixed_and_full_iris():
    ce = parse_class_expression("dbo:Scientist AND <http://x.example/Y>")
    assert ce == And((
        Atomic(Iri("http://dbpedia.org/ontology/Scientist")),
        Atomic(Iri("http://x.example/Y")),
    ))


def test_value_with_literal():
    ce = parse_class_expression('birthDate VALUE "1879-03-14"^^xsd:date')
    assert ce == Value(ex("birthDate"), Literal("1879-03-14", XSD_DATE))


def test_empty_input_no_axioms():
    assert parse_manchester("") == []


@pytest.mark.parametrize("bad", [
    "Class:",
    "Class: X SubClassOf:",
    "Person AND",
    "worksAt SOME",
    "child MIN x",
    "child MIN -1",
    "(Person",
    "{ }",
])
def test_malformed(bad):
    with pytest.raises(ParseError):
        if bad.startswith("Class:"):
            parse_manchester(bad)
        else:
            parse_class_expression(bad)


@pytest.mark.parametrize("frame", [
    "ObjectProperty: worksAt",
    "Class: X EquivalentTo: Y",
    "Datatype: xsd:date",
])
def test_unsupported_frames_and_sections(frame):
    with pytest.raises(UnsupportedError):
        parse_manchester(frame)


def test_error_reports_location():
    with pytest.raises(ParseError) as exc:
        parse_manchester("Class: Scientist\n  SubClassOf: AND")
    assert exc.value.line == 2


def test_deep_nesting_is_parse_error_not_crash():
    depth = 3000
    text = "(" * depth + "Person" + ")" * depth
    with pytest.raises(ParseError):
        parse_class_expression(text)
