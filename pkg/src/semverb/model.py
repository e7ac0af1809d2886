"""Shared data model: RDF terms, triples, graphs, OWL class expressions,
OWL axioms and SPARQL SELECT queries.

All types are immutable after construction and safe to share between
threads. Equality is structural throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Union

from .errors import UnknownPrefixError

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

# Pre-bound, overridable prefix table. Inputs may redeclare any of these.
DEFAULT_PREFIXES: Mapping[str, str] = {
    "": "http://example.org/",
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "owl": OWL_NS,
    "xsd": XSD_NS,
    "dbo": "http://dbpedia.org/ontology/",
    "dbr": "http://dbpedia.org/resource/",
}

_VAR_NAME_RE_CHARS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_"


@dataclass(frozen=True)
class Iri:
    """An absolute IRI."""

    value: str

    def __post_init__(self):
        if not self.value or any(c.isspace() for c in self.value):
            raise ValueError(f"IRI must be non-empty and whitespace-free: {self.value!r}")
        scheme, sep, _ = self.value.partition(":")
        if not sep or not scheme or not scheme[0].isalpha():
            raise ValueError(f"IRI has no scheme: {self.value!r}")

    def __str__(self) -> str:
        return self.value


RDF_TYPE = Iri(RDF_NS + "type")
RDF_LANG_STRING = Iri(RDF_NS + "langString")
RDFS_LABEL = Iri(RDFS_NS + "label")
XSD_STRING = Iri(XSD_NS + "string")
XSD_INTEGER = Iri(XSD_NS + "integer")
XSD_DECIMAL = Iri(XSD_NS + "decimal")
XSD_DATE = Iri(XSD_NS + "date")

# Numeric XSD types whose lexical form we validate at construction.
_INTEGER_DATATYPES = frozenset(
    XSD_NS + local
    for local in (
        "integer", "int", "long", "short", "byte",
        "nonNegativeInteger", "positiveInteger", "negativeInteger", "nonPositiveInteger",
        "unsignedInt", "unsignedLong", "unsignedShort", "unsignedByte",
    )
)
_FLOAT_DATATYPES = frozenset(XSD_NS + local for local in ("decimal", "double", "float"))


@dataclass(frozen=True)
class Literal:
    """An RDF literal: lexical form plus datatype, optionally language-tagged."""

    lexical_form: str
    datatype: Iri = XSD_STRING
    language_tag: Optional[str] = None

    def __post_init__(self):
        if (self.language_tag is not None) != (self.datatype == RDF_LANG_STRING):
            raise ValueError("language tag present iff datatype is rdf:langString")
        if self.language_tag is not None and self.language_tag != self.language_tag.lower():
            raise ValueError(f"language tag must be lowercase: {self.language_tag!r}")
        if self.datatype.value in _INTEGER_DATATYPES:
            try:
                int(self.lexical_form)
            except ValueError:
                raise ValueError(f"not a valid integer lexical form: {self.lexical_form!r}") from None
        elif self.datatype.value in _FLOAT_DATATYPES:
            try:
                float(self.lexical_form)
            except ValueError:
                raise ValueError(f"not a valid numeric lexical form: {self.lexical_form!r}") from None

    def __str__(self) -> str:
        if self.language_tag:
            return f'"{self.lexical_form}"@{self.language_tag}'
        if self.datatype == XSD_STRING:
            return f'"{self.lexical_form}"'
        return f'"{self.lexical_form}"^^<{self.datatype.value}>'


@dataclass(frozen=True)
class Variable:
    """A SPARQL variable; the leading `?` is stripped and the bare name stored."""

    name: str

    def __post_init__(self):
        if not self.name or self.name[0].isdigit() or any(c not in _VAR_NAME_RE_CHARS for c in self.name):
            raise ValueError(f"invalid variable name: {self.name!r}")

    def __str__(self) -> str:
        return "?" + self.name


Term = Union[Iri, Literal, Variable]


@dataclass(frozen=True)
class Triple:
    """A ground RDF triple. Blank nodes are outside the data model."""

    subject: Iri
    predicate: Iri
    object: Union[Iri, Literal]

    def __post_init__(self):
        if isinstance(self.object, Variable):
            raise ValueError("triples are ground; variables belong in TriplePattern")


@dataclass(frozen=True, eq=False)
class Graph:
    """An ordered multiset of triples plus the prefix table it was read with.

    Iteration order is insertion order, which keeps downstream output
    deterministic. Treat instances as immutable.
    """

    triples: tuple[Triple, ...] = ()
    prefixes: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_PREFIXES))

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __len__(self) -> int:
        return len(self.triples)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.triples == other.triples and dict(self.prefixes) == dict(other.prefixes)

    def objects(self, subject: Iri, predicate: Iri) -> Iterator[Union[Iri, Literal]]:
        for t in self.triples:
            if t.subject == subject and t.predicate == predicate:
                yield t.object

    def subjects(self) -> list[Iri]:
        """Distinct subjects in first-appearance order."""
        seen: dict[Iri, None] = {}
        for t in self.triples:
            seen.setdefault(t.subject, None)
        return list(seen)

    def individuals(self) -> list[Iri]:
        """Every IRI occurring in subject or object position, in first-appearance order."""
        seen: dict[Iri, None] = {}
        for t in self.triples:
            seen.setdefault(t.subject, None)
            if isinstance(t.object, Iri):
                seen.setdefault(t.object, None)
        return list(seen)

    def label_text(self, iri: Iri, label_property: Iri = RDFS_LABEL, language: str = "en") -> Optional[str]:
        """The first matching language-tagged label for `iri`, if any."""
        for obj in self.objects(iri, label_property):
            if isinstance(obj, Literal) and obj.language_tag == language:
                return obj.lexical_form
        return None


def expand_prefixed_name(prefixed: str, prefixes: Mapping[str, str]) -> Iri:
    """Expand `prefix:local` against a prefix table.

    Raises UnknownPrefixError when the prefix was never declared.
    """
    prefix, sep, local = prefixed.partition(":")
    if not sep:
        raise ValueError(f"not a prefixed name: {prefixed!r}")
    if prefix not in prefixes:
        raise UnknownPrefixError(prefix)
    return Iri(prefixes[prefix] + local)


# ---------------------------------------------------------------------------
# OWL class expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Atomic:
    cls: Iri


@dataclass(frozen=True)
class And:
    operands: tuple["ClassExpression", ...]

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("And needs at least two operands")
        if any(isinstance(op, And) for op in self.operands):
            raise ValueError("And operands must be flattened; use conjunction()")


@dataclass(frozen=True)
class Or:
    operands: tuple["ClassExpression", ...]

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("Or needs at least two operands")
        if any(isinstance(op, Or) for op in self.operands):
            raise ValueError("Or operands must be flattened; use disjunction()")


@dataclass(frozen=True)
class Not:
    inner: "ClassExpression"


@dataclass(frozen=True)
class Some:
    property: Iri
    filler: "ClassExpression"


@dataclass(frozen=True)
class Only:
    property: Iri
    filler: "ClassExpression"


@dataclass(frozen=True)
class Min:
    property: Iri
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class Max:
    property: Iri
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class Exactly:
    property: Iri
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True)
class Value:
    property: Iri
    individual: Union[Iri, Literal]


@dataclass(frozen=True)
class OneOf:
    individuals: tuple[Iri, ...]

    def __post_init__(self):
        if len(self.individuals) < 1:
            raise ValueError("OneOf needs at least one individual")


ClassExpression = Union[Atomic, And, Or, Not, Some, Only, Min, Max, Exactly, Value, OneOf]


def _flatten(kind, operands) -> tuple:
    flat: list = []
    for op in operands:
        if isinstance(op, kind):
            flat.extend(op.operands)
        else:
            flat.append(op)
    return tuple(flat)


def conjunction(operands) -> ClassExpression:
    """n-ary AND with nested Ands flattened; a single operand passes through."""
    flat = _flatten(And, operands)
    if len(flat) == 1:
        return flat[0]
    return And(flat)


def disjunction(operands) -> ClassExpression:
    """n-ary OR with nested Ors flattened; a single operand passes through."""
    flat = _flatten(Or, operands)
    if len(flat) == 1:
        return flat[0]
    return Or(flat)


# ---------------------------------------------------------------------------
# OWL axioms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubClassOf:
    sub: ClassExpression
    sup: ClassExpression


@dataclass(frozen=True)
class ClassAssertion:
    individual: Iri
    ce: ClassExpression

    def as_triple(self) -> Optional[Triple]:
        """The rdf:type triple encoding, available when the class is atomic."""
        if isinstance(self.ce, Atomic):
            return Triple(self.individual, RDF_TYPE, self.ce.cls)
        return None


@dataclass(frozen=True)
class PropertyAssertion:
    subject: Iri
    property: Iri
    object: Union[Iri, Literal]

    def as_triple(self) -> Triple:
        return Triple(self.subject, self.property, self.object)


Axiom = Union[SubClassOf, ClassAssertion, PropertyAssertion]


# ---------------------------------------------------------------------------
# SPARQL SELECT
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriplePattern:
    """A pattern from (Var ∪ R) × (Var ∪ P) × (Var ∪ R ∪ L)."""

    subject: Union[Variable, Iri]
    predicate: Union[Variable, Iri]
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise ValueError("pattern subject cannot be a literal")
        if isinstance(self.predicate, Literal):
            raise ValueError("pattern predicate cannot be a literal")

    def variables(self) -> set[Variable]:
        return {t for t in (self.subject, self.predicate, self.object) if isinstance(t, Variable)}


@dataclass(frozen=True)
class OrderBy:
    variable: Variable
    descending: bool = False


@dataclass(frozen=True)
class Modifiers:
    limit: Optional[int] = None
    order_by: Optional[OrderBy] = None


@dataclass(frozen=True)
class SparqlSelect:
    projection: tuple[Variable, ...]
    body: tuple[TriplePattern, ...]
    optionals: tuple[tuple[TriplePattern, ...], ...] = ()
    modifiers: Modifiers = Modifiers()

    def __post_init__(self):
        bound: set[Variable] = set()
        for p in self.body:
            bound |= p.variables()
        for group in self.optionals:
            for p in group:
                bound |= p.variables()
        for v in self.projection:
            if v not in bound:
                raise ValueError(f"projection variable ?{v.name} never occurs in the query pattern")
