"""Verbalization of OWL class expressions and axioms, plus the
closed-world membership evaluator used to check that verbalized
descriptions still denote the right individuals.

Class expressions are verbalized by post-order traversal: each node's
phrase is built only from its children's phrases. A conjunction that
contains an atomic class replaces the "everything" placeholder with the
plural class noun ("everything that is a city and located in France"
becomes "cities that are located in France").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .aggregate import aggregate, cluster_and_order, shorten_fanout
from .deptree import (
    Coordination,
    DepNode,
    DepTree,
    PAST,
    PLURAL,
    PRESENT,
    SINGULAR,
    be_node,
    inflect_be,
    np_tokens,
    number_of,
    realize_tree,
)
from .errors import ExpressionTooDeepError
from .lexicalizer import Lexicalizer, NOUN_PHRASE
from .model import (
    And,
    Atomic,
    Axiom,
    ClassAssertion,
    ClassExpression,
    Exactly,
    Graph,
    Iri,
    Max,
    Min,
    Not,
    OneOf,
    Only,
    Or,
    PropertyAssertion,
    RDF_TYPE,
    Some,
    SubClassOf,
    Triple,
    Value,
)
from .morphology import (
    PREPOSITIONS,
    agree_verb_phrase,
    number_word,
    with_indefinite_article,
)
from .triples import is_passive_phrase, phrase_tense, realize_triple

MAX_DEPTH = 64

# Tokens that may collapse out of the shared prefix when restrictions are
# coordinated: "that is a city and [that is] located in France".
_COLLAPSIBLE = frozenset({"that", "is", "are", "was", "were"})


@dataclass(frozen=True)
class EverythingPlaceholder:
    """The phrase head is the generic placeholder "everything"."""


@dataclass(frozen=True)
class SpecializedNoun:
    """The placeholder was replaced by the plural form of an atomic class."""

    plural: str


@dataclass(frozen=True)
class PossessiveParts:
    """The pieces of a "whose P is O" clause, kept for recasting it as a
    main clause ("every person's birth place is a city")."""

    noun: str
    plural_noun: bool
    verb: str  # "is" for the functional reading, else a plain verb
    object: str


@dataclass(frozen=True)
class Restriction:
    """One relative clause, pre-rendered for both head numbers."""

    sg: str
    pl: str
    poss: Optional[PossessiveParts] = None
    atomic_noun: Optional[tuple[str, str]] = None  # (singular, plural)

    def render(self, plural: bool) -> str:
        return self.pl if plural else self.sg


def _join_clauses(parts: list[str], word: str = "and", collapse: bool = True) -> str:
    """Coordinate clause strings, collapsing the shared that/BE prefix of
    later conjuncts; n-1 separators, commas before all but the last for
    more than three conjuncts."""
    if not parts:
        return ""
    token_parts = [p.split() for p in parts]
    head = token_parts[0]
    if collapse:
        for i in range(1, len(token_parts)):
            part = token_parts[i]
            shared = 0
            limit = min(len(head), len(part)) - 1
            while shared < limit and head[shared] == part[shared] and head[shared] in _COLLAPSIBLE:
                shared += 1
            token_parts[i] = part[shared:]
    out = list(token_parts[0])
    n = len(token_parts)
    for i in range(1, n):
        if i == n - 1:
            out.append(word)
        elif n > 3:
            out[-1] += ","
        else:
            out.append(word)
        out.extend(token_parts[i])
    return " ".join(out)


def join_names(names: list[str], word: str = "and") -> str:
    return _join_clauses(names, word, collapse=False)


@dataclass(frozen=True)
class CEPhrase:
    """The noun phrase for a class expression: an optional specialized head
    noun plus relative-clause restrictions."""

    head: Optional[tuple[str, str]]  # (singular, plural) class noun
    restrictions: tuple[Restriction, ...]

    @property
    def placeholder(self) -> Union[EverythingPlaceholder, SpecializedNoun]:
        if self.head is None:
            return EverythingPlaceholder()
        return SpecializedNoun(self.head[1])

    @property
    def number(self):
        return PLURAL if self.head is not None else SINGULAR

    def text(self) -> str:
        """The standalone phrase: "everything that is a city",
        "cities that are located in France"."""
        if self.head is None:
            return _with_head("everything", self.restrictions, plural=False)
        return _with_head(self.head[1], self.restrictions, plural=True)

    def _specialized(self) -> tuple[Optional[tuple[str, str]], tuple[Restriction, ...]]:
        """Promote the leftmost atomic restriction to head when none was
        promoted at construction (used by axiom templates)."""
        if self.head is not None:
            return self.head, self.restrictions
        for i, r in enumerate(self.restrictions):
            if r.atomic_noun is not None:
                return r.atomic_noun, self.restrictions[:i] + self.restrictions[i + 1:]
        return None, self.restrictions

    def indefinite(self) -> str:
        """An indefinite singular noun phrase for embedding: "a city that is
        located in France", "something that works at a university"."""
        head, rest = self._specialized()
        lead = with_indefinite_article(head[0]) if head is not None else "something"
        return _with_head(lead, rest, plural=False)

    def every_subject(self) -> str:
        """The subject of an "every ..." axiom sentence, singularized."""
        head, rest = self._specialized()
        lead = f"every {head[0]}" if head is not None else "everything"
        return _with_head(lead, rest, plural=False)


def _with_head(lead: str, restrictions: tuple[Restriction, ...], plural: bool) -> str:
    if not restrictions:
        return lead
    joined = _join_clauses([r.render(plural) for r in restrictions])
    return f"{lead} {joined}"


# ---------------------------------------------------------------------------
# Class expressions
# ---------------------------------------------------------------------------

def verbalize_ce(ce: ClassExpression, graph: Graph, lex: Lexicalizer) -> CEPhrase:
    """Post-order verbalization of a class expression."""
    return _verbalize_ce(ce, graph, lex, 0)


def ce_text(ce: ClassExpression, graph: Graph, lex: Lexicalizer) -> str:
    return verbalize_ce(ce, graph, lex).text()


def _verbalize_ce(ce: ClassExpression, graph: Graph, lex: Lexicalizer, depth: int) -> CEPhrase:
    if depth > MAX_DEPTH:
        raise ExpressionTooDeepError(f"class expression deeper than {MAX_DEPTH}")

    if isinstance(ce, Atomic):
        entry = lex.class_entry(ce.cls, graph)
        noun = (entry.singular, entry.plural)
        return CEPhrase(None, (Restriction(
            sg=f"that is {with_indefinite_article(entry.singular)}",
            pl=f"that are {entry.plural}",
            atomic_noun=noun,
        ),))

    if isinstance(ce, And):
        children = [_verbalize_ce(op, graph, lex, depth + 1) for op in ce.operands]
        restrictions: list[Restriction] = []
        for child in children:
            restrictions.extend(_as_restrictions(child))
        head = None
        for i, r in enumerate(restrictions):
            if r.atomic_noun is not None:
                head = r.atomic_noun
                del restrictions[i]
                break
        return CEPhrase(head, tuple(restrictions))

    if isinstance(ce, Or):
        children = [_verbalize_ce(op, graph, lex, depth + 1) for op in ce.operands]
        sg = _join_clauses([_child_clause(c, plural=False) for c in children], "or")
        pl = _join_clauses([_child_clause(c, plural=True) for c in children], "or")
        return CEPhrase(None, (Restriction(sg, pl),))

    if isinstance(ce, Not):
        inner = _verbalize_ce(ce.inner, graph, lex, depth + 1)
        np = inner.indefinite()
        return CEPhrase(None, (Restriction(f"that is not {np}", f"that are not {np}"),))

    if isinstance(ce, (Some, Only)):
        only = isinstance(ce, Only)
        filler = _verbalize_ce(ce.filler, graph, lex, depth + 1).indefinite()
        return CEPhrase(None, (_property_restriction(ce.property, filler, graph, lex, only=only),))

    if isinstance(ce, Value):
        obj = lex.term_text(ce.individual, graph)
        return CEPhrase(None, (_property_restriction(ce.property, obj, graph, lex),))

    if isinstance(ce, (Min, Max, Exactly)):
        bound = {"Min": "at least", "Max": "at most", "Exactly": "exactly"}[type(ce).__name__]
        count = f"{bound} {number_word(ce.n)}"
        return CEPhrase(None, (_cardinality_restriction(ce.property, count, ce.n, graph, lex),))

    if isinstance(ce, OneOf):
        names = [lex.resource_entry(i, graph).singular for i in ce.individuals]
        listed = join_names(names, "or")
        return CEPhrase(None, (Restriction(
            sg=f"that is one of {listed}", pl=f"that are one of {listed}",
        ),))

    raise TypeError(f"not a class expression: {ce!r}")


def _as_restrictions(child: CEPhrase) -> list[Restriction]:
    """A child phrase's contribution to an enclosing conjunction."""
    if child.head is None:
        return list(child.restrictions)
    # Pre-specialized children (nested Or of And, etc.) re-enter as a type
    # restriction over their own phrase.
    return [Restriction(
        sg=f"that is {child.indefinite()}",
        pl=f"that are {child.text()}",
    )]


def _child_clause(child: CEPhrase, plural: bool) -> str:
    if child.head is None:
        return _join_clauses([r.render(plural) for r in child.restrictions])
    if plural:
        return f"that are {child.text()}"
    return f"that is {child.indefinite()}"


def _property_restriction(prop: Iri, obj: str, graph: Graph, lex: Lexicalizer,
                          only: bool = False) -> Restriction:
    entry = lex.property_entry(prop, graph)
    if entry.pos is NOUN_PHRASE:
        if lex.config.functional_some:
            noun, verb, plural_noun = entry.singular, "is", False
        else:
            noun, verb, plural_noun = entry.plural, "include", True
        obj_part = f"only {obj}" if only else obj
        text = f"whose {noun} {verb} {obj_part}"
        return Restriction(text, text,
                           poss=PossessiveParts(noun, plural_noun, verb, obj_part))
    verb = entry.lemma
    if only:
        verb = _insert_only(verb)
        obj_part = obj if verb != entry.lemma else f"only {obj}"
    else:
        obj_part = obj
    if is_passive_phrase(entry.lemma):
        tense = phrase_tense(entry.lemma)
        return Restriction(
            sg=f"that {inflect_be(SINGULAR, tense)} {verb} {obj_part}",
            pl=f"that {inflect_be(PLURAL, tense)} {verb} {obj_part}",
        )
    return Restriction(
        sg=f"that {verb} {obj_part}",
        pl=f"that {agree_verb_phrase(verb, plural=True)} {obj_part}",
    )


def _insert_only(verb_phrase: str) -> str:
    """Place "only" before the final preposition ("works at" -> "works only
    at"); phrases without one leave it for the object."""
    tokens = verb_phrase.split()
    if len(tokens) >= 2 and tokens[-1] in PREPOSITIONS:
        return " ".join(tokens[:-1] + ["only", tokens[-1]])
    return verb_phrase


def _cardinality_restriction(prop: Iri, count: str, n: int, graph: Graph,
                             lex: Lexicalizer) -> Restriction:
    entry = lex.property_entry(prop, graph)
    if entry.pos is NOUN_PHRASE:
        noun = entry.singular if n == 1 else entry.plural
        return Restriction(f"that has {count} {noun}", f"that have {count} {noun}")
    things = "thing" if n == 1 else "things"
    verb = entry.lemma
    if is_passive_phrase(verb):
        tense = phrase_tense(verb)
        return Restriction(
            sg=f"that {inflect_be(SINGULAR, tense)} {verb} {count} {things}",
            pl=f"that {inflect_be(PLURAL, tense)} {verb} {count} {things}",
        )
    return Restriction(
        sg=f"that {verb} {count} {things}",
        pl=f"that {agree_verb_phrase(verb, plural=True)} {count} {things}",
    )


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

def axiom_tree(ax: Axiom, graph: Graph, lex: Lexicalizer) -> DepTree:
    """The clause tree for a single axiom."""
    if isinstance(ax, SubClassOf):
        sub = verbalize_ce(ax.sub, graph, lex)
        sup = verbalize_ce(ax.sup, graph, lex)
        return _characterization_tree(DepNode(sub.every_subject()), sup)
    if isinstance(ax, PropertyAssertion):
        return realize_triple(ax.as_triple(), graph, lex)
    if isinstance(ax, ClassAssertion):
        triple = ax.as_triple()
        if triple is not None:
            return realize_triple(triple, graph, lex)
        subject = DepNode(lex.resource_entry(ax.individual, graph).singular)
        return _characterization_tree(subject, verbalize_ce(ax.ce, graph, lex))
    raise TypeError(f"not an axiom: {ax!r}")


def verbalize_axiom(ax: Axiom, graph: Graph, lex: Lexicalizer) -> str:
    return realize_tree(axiom_tree(ax, graph, lex))


def _characterization_tree(subject: DepNode, phrase: CEPhrase) -> DepTree:
    """A sentence stating that `subject` falls under `phrase`."""
    head, rest = phrase._specialized()
    if head is not None:
        return DepTree(DepNode("", is_be=True, deps=(
            ("subj", subject),
            ("dobj", DepNode(_with_head(with_indefinite_article(head[0]), rest, plural=False))),
        )))
    if len(rest) == 1 and rest[0].poss is not None:
        poss = rest[0].poss
        possessed = DepNode(poss.noun, number=PLURAL if poss.plural_noun else SINGULAR,
                            deps=(("poss", subject),))
        if poss.verb == "is":
            root = DepNode("", is_be=True, deps=(
                ("subj", possessed), ("dobj", DepNode(poss.object)),
            ))
        else:
            root = DepNode(poss.verb, deps=(
                ("subj", possessed), ("dobj", DepNode(poss.object)),
            ))
        return DepTree(root)
    if len(rest) == 1:
        clause = rest[0].sg
        if clause.startswith("that "):
            predicate = clause[len("that "):]
            if predicate.startswith(("is ", "was ")):
                be, _, remainder = predicate.partition(" ")
                tense = PAST if be == "was" else PRESENT
                root = DepNode(remainder, tense=tense,
                               deps=(("subj", subject), ("cop", be_node())))
                return DepTree(root)
            return DepTree(DepNode(predicate, deps=(("subj", subject),)))
    return DepTree(DepNode("", is_be=True, deps=(
        ("subj", subject),
        ("dobj", DepNode(_with_head("something", rest, plural=False))),
    )))


# ---------------------------------------------------------------------------
# Whole-individual descriptions (Individual: frames)
# ---------------------------------------------------------------------------

def verbalize_individual(individual: Iri, axioms: list[Axiom], graph: Graph,
                         lex: Lexicalizer, fanout_limit: int = 5) -> list[DepTree]:
    """One merged sentence for an individual's type and property assertions,
    with property clauses attached as whose/who relative clauses."""
    triples: list[Triple] = []
    extra: list[DepTree] = []
    for ax in axioms:
        if isinstance(ax, ClassAssertion):
            t = ax.as_triple()
            if t is None:
                extra.append(axiom_tree(ax, graph, lex))
            else:
                triples.append(t)
        elif isinstance(ax, PropertyAssertion):
            triples.append(ax.as_triple())
        else:
            raise ValueError("verbalize_individual only handles ABox axioms")

    realized = [realize_triple(t, graph, lex) for t in triples]
    # Relative-clause merging happens on the ordered but ungrouped plan so
    # the type clause stays available as the head of the description.
    ordered = list(cluster_and_order(shorten_fanout(realized, fanout_limit)))
    if len(ordered) >= 2 and ordered[0].is_type_clause:
        type_trees = [t for t in ordered if t.is_type_clause]
        rest_trees = [t for t in ordered if not t.is_type_clause]
        merged = _merge_description(individual, type_trees, rest_trees, graph, lex)
        if merged is not None:
            return [merged] + extra
    return list(aggregate(realized, fanout_limit)) + extra


def _merge_description(individual: Iri, type_trees: list[DepTree], rest: list[DepTree],
                       graph: Graph, lex: Lexicalizer) -> Optional[DepTree]:
    clauses: list[str] = []
    for tree in rest:
        clause = _relative_clause(tree)
        if clause is None:
            return None
        clauses.append(clause)

    heads = []
    for t in type_trees:
        dobj = t.root.one("dobj")  # type: ignore[union-attr]
        heads.append(" ".join(np_tokens(dobj)))
    head_text = join_names(heads, "and")

    deps: tuple = ()
    if clauses:
        deps = (("relcl", DepNode(_join_clauses(clauses, collapse=False))),)
    subject = DepNode(lex.resource_entry(individual, graph).singular)
    root = DepNode("", is_be=True, deps=(
        ("subj", subject),
        ("dobj", DepNode(head_text, deps=deps)),
    ))
    return DepTree(root, subject_atom=individual, is_type_clause=True)


def _relative_clause(tree: DepTree) -> Optional[str]:
    """Recast a simple clause tree as a relative clause on its subject."""
    root = tree.root
    if isinstance(root, Coordination):
        return None
    subj = root.one("subj")
    dobj = root.one("dobj")
    if subj is None or dobj is None or not isinstance(subj, DepNode):
        return None
    obj_text = " ".join(np_tokens(dobj))
    if root.is_be and subj.one("poss") is not None:
        possessed = DepNode(subj.surface, number=subj.number)
        noun = " ".join(np_tokens(possessed))
        return f"whose {noun} {inflect_be(subj.number, root.tense)} {obj_text}"
    if root.is_be:
        return f"who {inflect_be(subj.number, root.tense)} {obj_text}"
    if root.one("cop") is not None:
        return f"who {inflect_be(number_of(subj), root.tense)} {root.surface} {obj_text}"
    return f"who {root.surface} {obj_text}"


# ---------------------------------------------------------------------------
# Closed-world evaluation (semantics oracle for descriptions)
# ---------------------------------------------------------------------------

def evaluate_ce(ce: ClassExpression, graph: Graph, individual: Iri) -> bool:
    """Membership of `individual` in `ce` under a closed-world reading of
    the graph: And is intersection, Or union, Not complement over the
    graph's individuals, and cardinalities count distinct asserted objects.
    """
    if isinstance(ce, Atomic):
        return any(obj == ce.cls for obj in graph.objects(individual, RDF_TYPE))
    if isinstance(ce, And):
        return all(evaluate_ce(op, graph, individual) for op in ce.operands)
    if isinstance(ce, Or):
        return any(evaluate_ce(op, graph, individual) for op in ce.operands)
    if isinstance(ce, Not):
        return not evaluate_ce(ce.inner, graph, individual)
    if isinstance(ce, Some):
        return any(
            isinstance(obj, Iri) and evaluate_ce(ce.filler, graph, obj)
            for obj in graph.objects(individual, ce.property)
        )
    if isinstance(ce, Only):
        return all(
            isinstance(obj, Iri) and evaluate_ce(ce.filler, graph, obj)
            for obj in graph.objects(individual, ce.property)
        )
    if isinstance(ce, (Min, Max, Exactly)):
        count = len(set(graph.objects(individual, ce.property)))
        if isinstance(ce, Min):
            return count >= ce.n
        if isinstance(ce, Max):
            return count <= ce.n
        return count == ce.n
    if isinstance(ce, Value):
        return any(obj == ce.individual for obj in graph.objects(individual, ce.property))
    if isinstance(ce, OneOf):
        return individual in ce.individuals
    raise TypeError(f"not a class expression: {ce!r}")
