"""End-to-end drivers: text in one of the three languages to sentences.

The RDF driver runs the full triple pipeline (realize, shorten fan-outs,
cluster and order, group subjects, group objects) and emits one resource
description per subject. Label triples feed lexicalization instead of
producing sentences, and reified OWL vocabulary in triple form is rejected
before it can reach the naive triple realization.
"""

from __future__ import annotations

from .aggregate import aggregate
from .deptree import DepNode, DepTree, realize_tree
from .errors import UnsupportedError
from .lexicalizer import Lexicalizer
from .model import (
    Axiom,
    ClassAssertion,
    Graph,
    Iri,
    OWL_NS,
    PropertyAssertion,
    RDF_NS,
    SubClassOf,
)
from .owl import axiom_tree, verbalize_ce, verbalize_individual
from .query import query_tree
from .syntax import parse_owl_document, parse_sparql, parse_turtle
from .triples import realize_triple

# Predicates that encode OWL expressions as triples. Descriptions using
# them must come in through the owl format, never the triple realizer.
OWL_ENCODING_PREDICATES = frozenset(
    [Iri(RDF_NS + "first"), Iri(RDF_NS + "rest")]
    + [
        Iri(OWL_NS + local)
        for local in (
            "intersectionOf", "unionOf", "complementOf", "oneOf",
            "someValuesFrom", "allValuesFrom", "onProperty", "hasValue",
            "minCardinality", "maxCardinality", "cardinality", "onClass",
        )
    ]
)

Sentence = tuple[DepTree, str]


def verbalize_graph(graph: Graph, lex: Lexicalizer,
                    fanout_limit: int = 5) -> list[list[Sentence]]:
    """Sentence blocks for a graph, one block per described subject."""
    for t in graph:
        if t.predicate in OWL_ENCODING_PREDICATES:
            raise UnsupportedError(
                f"<{t.predicate.value}> encodes an OWL expression in triples; "
                "verbalize it through the owl format instead"
            )
    content = [t for t in graph if t.predicate != lex.config.label_property]
    trees = [realize_triple(t, graph, lex) for t in content]
    plan = aggregate(trees, fanout_limit)

    blocks: list[list[Sentence]] = []
    current_subject: object = None
    for tree in plan:
        if not blocks or tree.subject_atom != current_subject:
            blocks.append([])
            current_subject = tree.subject_atom
        blocks[-1].append((tree, realize_tree(tree)))
    return blocks


def verbalize_axioms(axioms: list[Axiom], graph: Graph, lex: Lexicalizer,
                     fanout_limit: int = 5) -> list[Sentence]:
    """Sentences for a list of axioms. Consecutive assertional axioms about
    the same individual merge into one description sentence."""
    out: list[Sentence] = []
    i = 0
    while i < len(axioms):
        ax = axioms[i]
        if isinstance(ax, SubClassOf):
            tree = axiom_tree(ax, graph, lex)
            out.append((tree, realize_tree(tree)))
            i += 1
            continue
        individual = ax.individual if isinstance(ax, ClassAssertion) else ax.subject
        group: list[Axiom] = []
        while i < len(axioms):
            nxt = axioms[i]
            if isinstance(nxt, ClassAssertion) and nxt.individual == individual:
                group.append(nxt)
            elif isinstance(nxt, PropertyAssertion) and nxt.subject == individual:
                group.append(nxt)
            else:
                break
            i += 1
        for tree in verbalize_individual(individual, group, graph, lex, fanout_limit):
            out.append((tree, realize_tree(tree)))
    return out


def verbalize_owl_text(text: str, lex: Lexicalizer, fanout_limit: int = 5) -> list[Sentence]:
    """Manchester input: frames verbalize as axiom sentences; a bare class
    expression verbalizes as its noun phrase."""
    graph = Graph()
    parsed = parse_owl_document(text)
    if isinstance(parsed, list):
        return verbalize_axioms(parsed, graph, lex, fanout_limit)
    phrase = verbalize_ce(parsed, graph, lex)
    return [(DepTree(DepNode(phrase.text())), phrase.text())]


def verbalize_rdf_text(text: str, lex: Lexicalizer,
                       fanout_limit: int = 5) -> list[list[Sentence]]:
    return verbalize_graph(parse_turtle(text), lex, fanout_limit)


def verbalize_sparql_text(text: str, lex: Lexicalizer) -> list[Sentence]:
    query = parse_sparql(text)
    tree = query_tree(query, Graph(), lex)
    return [(tree, realize_tree(tree))]
