"""Verbalization of SPARQL SELECT queries.

The projection variable's type patterns give the head noun ("scientists");
every other pattern becomes a relative clause on it, with secondary
variables expanded into nested noun phrases. Optional groups read "and, if
available, ..."; LIMIT and ORDER BY become "at most n" and "sorted by ..."
modifiers. The sentence frame is "This query retrieves <NP>."
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .deptree import DepNode, DepTree, PLURAL, SINGULAR, inflect_be, realize_tree
from .errors import MultiProjectionUnsupported, UnsupportedError
from .lexicalizer import Lexicalizer, NOUN_PHRASE
from .model import (
    Graph,
    Iri,
    Modifiers,
    RDF_TYPE,
    SparqlSelect,
    TriplePattern,
    Variable,
)
from .morphology import agree_verb_phrase, with_indefinite_article
from .owl import _join_clauses, join_names
from .triples import is_passive_phrase, phrase_tense


@dataclass(frozen=True)
class QueryPlan:
    """Body patterns split by role; every pattern lands in exactly one bucket."""

    subject_var: Variable
    class_patterns: tuple[TriplePattern, ...]
    restriction_patterns: tuple[TriplePattern, ...]
    optional_groups: tuple[tuple[TriplePattern, ...], ...]
    modifiers: Modifiers


def plan_query(q: SparqlSelect) -> QueryPlan:
    if len(q.projection) != 1:
        raise MultiProjectionUnsupported(len(q.projection))
    var = q.projection[0]
    classes = []
    restrictions = []
    for p in q.body:
        if p.subject == var and p.predicate == RDF_TYPE and isinstance(p.object, Iri):
            classes.append(p)
        else:
            restrictions.append(p)
    return QueryPlan(var, tuple(classes), tuple(restrictions), q.optionals, q.modifiers)


def verbalize_query(q: SparqlSelect, graph: Graph, lex: Lexicalizer) -> str:
    return realize_tree(query_tree(q, graph, lex))


def query_tree(q: SparqlSelect, graph: Graph, lex: Lexicalizer) -> DepTree:
    plan = plan_query(q)
    builder = _Builder(plan, graph, lex)
    return builder.build()


class _Builder:
    """Single-use assembly of the query sentence; tracks which patterns have
    been consumed so each is verbalized exactly once."""

    def __init__(self, plan: QueryPlan, graph: Graph, lex: Lexicalizer):
        self.plan = plan
        self.graph = graph
        self.lex = lex
        self.patterns = list(plan.restriction_patterns)
        self.consumed = [False] * len(self.patterns)

    def build(self) -> DepTree:
        heads = [
            self.lex.class_entry(p.object, self.graph).plural  # type: ignore[arg-type]
            for p in self.plan.class_patterns
        ]
        head_text = join_names(heads, "and") if heads else "entities"

        clauses = self._expand(self.plan.subject_var, plural=True)
        for i, pattern in enumerate(self.patterns):
            if not self.consumed[i]:
                raise UnsupportedError(
                    "graph pattern is not connected to the projection variable: "
                    f"{pattern.subject} {pattern.predicate} {pattern.object}"
                )

        tail_parts = []
        if clauses:
            tail_parts.append(_join_clauses(clauses, "and"))
        for group in self.plan.optional_groups:
            for phrase in self._optional_phrases(group):
                tail_parts.append(f"and, if available, {phrase}")
        sort_part = self._sort_phrase()
        if sort_part:
            tail_parts.append(sort_part)

        deps = []
        if self.plan.modifiers.limit is not None:
            deps.append(("num", DepNode(f"at most {self.plan.modifiers.limit}")))
        if tail_parts:
            deps.append(("relcl", DepNode(" ".join(tail_parts))))
        head_np = DepNode(head_text, number=PLURAL, deps=tuple(deps))
        root = DepNode("retrieves", deps=(
            ("subj", DepNode("this query")),
            ("dobj", head_np),
        ))
        return DepTree(root)

    # --- pattern expansion -------------------------------------------------

    def _expand(self, var: Variable, plural: bool) -> list[str]:
        clauses: list[str] = []
        for i, p in enumerate(self.patterns):
            if not self.consumed[i] and p.subject == var:
                self.consumed[i] = True
                clauses.append(self._forward_clause(p, plural))
        for i, p in enumerate(self.patterns):
            if not self.consumed[i] and p.object == var and p.subject != var:
                self.consumed[i] = True
                clauses.append(self._inverse_clause(p, plural))
        return clauses

    def _forward_clause(self, p: TriplePattern, plural: bool) -> str:
        """Clause for a pattern whose subject is the phrase head."""
        if isinstance(p.predicate, Variable):
            raise UnsupportedError("variable predicates cannot be verbalized")
        entry = self.lex.property_entry(p.predicate, self.graph)
        obj = self._object_text(p.object)
        if entry.pos is NOUN_PHRASE:
            return f"whose {entry.singular} is {obj}"
        number = PLURAL if plural else SINGULAR
        if is_passive_phrase(entry.lemma):
            be = inflect_be(number, phrase_tense(entry.lemma))
            return f"that {be} {entry.lemma} {obj}"
        return f"that {agree_verb_phrase(entry.lemma, plural)} {obj}"

    def _inverse_clause(self, p: TriplePattern, plural: bool) -> str:
        """Clause for a pattern whose object is the phrase head."""
        if isinstance(p.predicate, Variable):
            raise UnsupportedError("variable predicates cannot be verbalized")
        entry = self.lex.property_entry(p.predicate, self.graph)
        subject = self._subject_text(p.subject)
        number = PLURAL if plural else SINGULAR
        if entry.pos is NOUN_PHRASE:
            be = inflect_be(number, phrase_tense(entry.lemma))
            return f"that {be} the {entry.singular} of {subject}"
        if is_passive_phrase(entry.lemma):
            be = inflect_be(SINGULAR, phrase_tense(entry.lemma))
            return f"that {subject} {be} {entry.lemma}"
        return f"that {subject} {entry.lemma}"

    def _object_text(self, term) -> str:
        if isinstance(term, Variable):
            return self._variable_np(term)
        return self.lex.term_text(term, self.graph)

    def _subject_text(self, term) -> str:
        if isinstance(term, Variable):
            return self._variable_np(term)
        return self.lex.resource_entry(term, self.graph).singular

    def _variable_np(self, var: Variable) -> str:
        """A nested indefinite noun phrase for a secondary variable."""
        head: Optional[str] = None
        extra_types: list[str] = []
        for i, p in enumerate(self.patterns):
            if (not self.consumed[i] and p.subject == var
                    and p.predicate == RDF_TYPE and isinstance(p.object, Iri)):
                self.consumed[i] = True
                noun = self.lex.class_entry(p.object, self.graph).singular
                if head is None:
                    head = noun
                else:
                    extra_types.append(f"that is {with_indefinite_article(noun)}")
        clauses = extra_types + self._expand(var, plural=False)
        lead = with_indefinite_article(head) if head is not None else "something"
        if clauses:
            return f"{lead} {_join_clauses(clauses, 'and')}"
        return lead

    # --- optionals and modifiers --------------------------------------------

    def _optional_phrases(self, group: tuple[TriplePattern, ...]) -> list[str]:
        phrases: list[str] = []
        saved_patterns, saved_consumed = self.patterns, self.consumed
        self.patterns = list(group)
        self.consumed = [False] * len(group)
        try:
            for i, p in enumerate(self.patterns):
                if self.consumed[i]:
                    continue
                if p.subject != self.plan.subject_var:
                    # a clause about some other variable would silently read
                    # as if it described the head noun
                    raise UnsupportedError(
                        "OPTIONAL patterns must start at the projection variable"
                    )
                self.consumed[i] = True
                phrases.append(self._optional_clause(p))
        finally:
            self.patterns, self.consumed = saved_patterns, saved_consumed
        return phrases

    def _optional_clause(self, p: TriplePattern) -> str:
        if isinstance(p.predicate, Variable):
            raise UnsupportedError("variable predicates cannot be verbalized")
        entry = self.lex.property_entry(p.predicate, self.graph)
        bare_var = isinstance(p.object, Variable) and not any(
            p.object in other.variables()
            for j, other in enumerate(self.patterns)
            if not self.consumed[j]
        )
        if bare_var:
            if entry.pos is NOUN_PHRASE:
                return f"their {entry.singular}"
            return f"what they {agree_verb_phrase(entry.lemma, plural=True)}"
        return self._forward_clause(p, plural=True)

    def _sort_phrase(self) -> Optional[str]:
        order = self.plan.modifiers.order_by
        if order is None:
            return None
        direction = "descending" if order.descending else "ascending"
        label = self._order_label(order.variable)
        return f"sorted by {label} ({direction})"

    def _order_label(self, var: Variable) -> str:
        if var == self.plan.subject_var:
            heads = self.plan.class_patterns
            if heads:
                return self.lex.class_entry(heads[0].object, self.graph).singular  # type: ignore[arg-type]
            return var.name
        for p in self.plan.restriction_patterns:
            if p.object == var and isinstance(p.predicate, Iri):
                return self.lex.property_entry(p.predicate, self.graph).singular
        for group in self.plan.optional_groups:
            for p in group:
                if p.object == var and isinstance(p.predicate, Iri):
                    return self.lex.property_entry(p.predicate, self.graph).singular
        return var.name
