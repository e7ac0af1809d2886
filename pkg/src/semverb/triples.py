"""Realization of single ground triples as clause trees.

The predicate's part of speech picks the clause shape: relational nouns
become possessive copular clauses ("Albert Einstein's birth place is
Ulm"), verbs become transitive clauses ("Albert Einstein influenced
Nathan Rosen"). rdf:type is special-cased to a copular clause with an
indefinite article ("William Shakespeare is a writer").
"""

from __future__ import annotations

from .deptree import DepNode, DepTree, PAST, PRESENT, Tense, be_node
from .lexicalizer import Lexicalizer, NOUN_PHRASE
from .model import Graph, Iri, Triple, RDF_TYPE
from .morphology import IRREGULAR_PARTICIPLES, PREPOSITIONS, indefinite_article

# Participle-initial phrases whose copular clause is past tense ("was born
# in"); everything else reads present ("is known for", "is located in").
PAST_EVENT_PARTICIPLES = frozenset({"born"})


def is_passive_phrase(verb_phrase: str) -> bool:
    """True for participle-plus-preposition phrasings that need a copula:
    "born in", "known for", "located in"."""
    tokens = verb_phrase.split()
    if len(tokens) < 2 or tokens[1] not in PREPOSITIONS:
        return False
    head = tokens[0]
    return head in IRREGULAR_PARTICIPLES or head.endswith("ed")


def phrase_tense(verb_phrase: str) -> Tense:
    tokens = verb_phrase.split()
    if tokens and tokens[0] in PAST_EVENT_PARTICIPLES:
        return PAST
    return PRESENT


def class_np_node(noun_singular: str) -> DepNode:
    """An indefinite class noun phrase ("a writer"), with the article kept
    as a modifier so aggregation can pluralize the noun."""
    return DepNode(noun_singular, deps=(("advmod", DepNode(indefinite_article(noun_singular))),))


def realize_triple(t: Triple, graph: Graph, lex: Lexicalizer) -> DepTree:
    """The clause tree for one ground triple."""
    subject_np = DepNode(lex.resource_entry(t.subject, graph).singular)

    if t.predicate == RDF_TYPE and isinstance(t.object, Iri):
        cls = lex.class_entry(t.object, graph)
        root = DepNode("", is_be=True, deps=(
            ("subj", subject_np),
            ("dobj", class_np_node(cls.singular)),
        ))
        return DepTree(root, subject_atom=t.subject, predicate_atom=t.predicate,
                       is_type_clause=True)

    prop = lex.property_entry(t.predicate, graph)
    object_np = DepNode(lex.term_text(t.object, graph))

    if prop.pos is NOUN_PHRASE:
        # possessive copular clause: poss(p, s), subj(BE, p), dobj(BE, o)
        predicate_np = DepNode(prop.singular, deps=(("poss", subject_np),))
        root = DepNode("", is_be=True, deps=(
            ("subj", predicate_np),
            ("dobj", object_np),
        ))
        return DepTree(root, subject_atom=t.subject, predicate_atom=t.predicate)

    # transitive clause: subj(p, s), dobj(p, o), with a copula for
    # participle phrasings ("was born in Boston")
    if is_passive_phrase(prop.lemma):
        root = DepNode(prop.lemma, tense=phrase_tense(prop.lemma), deps=(
            ("subj", subject_np),
            ("cop", be_node()),
            ("dobj", object_np),
        ))
    else:
        root = DepNode(prop.lemma, deps=(
            ("subj", subject_np),
            ("dobj", object_np),
        ))
    return DepTree(root, subject_atom=t.subject, predicate_atom=t.predicate)
