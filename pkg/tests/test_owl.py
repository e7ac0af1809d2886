import random

import pytest

from semverb.errors import ExpressionTooDeepError, UnsupportedError
from semverb.model import (
    And,
    Atomic,
    ClassAssertion,
    Exactly,
    Graph,
    Iri,
    Literal,
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
    conjunction,
    disjunction,
)
from semverb.owl import (
    EverythingPlaceholder,
    SpecializedNoun,
    ce_text,
    evaluate_ce,
    verbalize_axiom,
    verbalize_ce,
    verbalize_individual,
)
from semverb.pipeline import verbalize_graph, verbalize_owl_text
from semverb.syntax import parse_class_expression, parse_turtle

EX = "http://example.org/"


def ex(name):
    return Iri(EX + name)


def text_of(expr, lex, graph=Graph()):
    return ce_text(parse_class_expression(expr), graph, lex)


class TestClassExpressionGoldens:
    def test_atomic(self, lex):
        assert text_of("City", lex) == "everything that is a city"

    def test_value_with_passive_verb(self, lex):
        assert text_of("locatedIn VALUE France", lex) == "everything that is located in France"

    def test_conjunction_specializes_placeholder(self, lex):
        assert text_of("City AND locatedIn VALUE France", lex) == \
            "cities that are located in France"

    def test_existential_with_noun_property(self, lex):
        assert text_of("birthPlace SOME (City AND locatedIn VALUE France)", lex) == \
            "everything whose birth place is a city that is located in France"

    def test_atomic_person(self, lex):
        assert text_of("Person", lex) == "everything that is a person"

    def test_full_example(self, lex):
        assert text_of("Person AND birthPlace SOME (City AND locatedIn VALUE France)", lex) == \
            "people whose birth place is a city that is located in France"

    def test_conjunction_of_non_atomics_keeps_everything(self, lex):
        got = text_of("locatedIn VALUE France AND knownFor VALUE Cheese", lex)
        assert got == "everything that is located in France and known for Cheese"

    def test_value_with_verb(self, lex):
        assert text_of("influenced VALUE Nathan_Rosen", lex) == \
            "everything that influenced Nathan Rosen"

    def test_existential_with_verb_property(self, lex):
        assert text_of("Person AND worksAt SOME University", lex) == \
            "people that work at a university"

    def test_negation(self, lex):
        assert text_of("NOT Animal", lex) == "everything that is not an animal"
        assert text_of("Person AND NOT Scientist", lex) == \
            "people that are not a scientist"

    def test_disjunction(self, lex):
        assert text_of("Actor OR Singer", lex) == \
            "everything that is an actor or a singer"

    def test_universal_inserts_only(self, lex):
        assert text_of("worksAt ONLY University", lex) == \
            "everything that works only at a university"
        assert text_of("birthPlace ONLY City", lex) == \
            "everything whose birth place is only a city"
        # verbs without a trailing preposition keep "only" before the filler
        assert text_of("influenced ONLY Scientist", lex) == \
            "everything that influenced only a scientist"

    def test_disjunction_with_specialized_member(self, lex):
        assert text_of("(City AND locatedIn VALUE France) OR Person", lex) == \
            "everything that is a city that is located in France or a person"

    def test_conjunction_containing_disjunction(self, lex):
        assert text_of("Person AND (Actor OR Singer)", lex) == \
            "people that are actors or singers"

    def test_cardinality_with_passive_verb_property(self, lex):
        assert text_of("bornIn MIN 2", lex) == \
            "everything that was born in at least two things"

    def test_cardinalities(self, lex):
        assert text_of("child MIN 3", lex) == "everything that has at least three children"
        assert text_of("child MAX 2", lex) == "everything that has at most two children"
        assert text_of("child EXACTLY 1", lex) == "everything that has exactly one child"
        assert text_of("child MIN 13", lex) == "everything that has at least 13 children"
        assert text_of("worksAt MIN 2", lex) == \
            "everything that works at at least two things"

    def test_one_of(self, lex):
        # n <= 3 coordinations carry no commas, per the separator rule
        assert text_of("{Alice, Bob, Carol}", lex) == \
            "everything that is one of Alice or Bob or Carol"
        assert text_of("{Alice, Bob, Carol, Dan}", lex) == \
            "everything that is one of Alice, Bob, Carol or Dan"

    def test_placeholder_field(self, lex):
        from semverb.deptree import PLURAL, SINGULAR

        phrase = verbalize_ce(parse_class_expression("City"), Graph(), lex)
        assert phrase.placeholder == EverythingPlaceholder()
        assert phrase.number is SINGULAR
        phrase = verbalize_ce(
            parse_class_expression("City AND locatedIn VALUE France"), Graph(), lex)
        assert phrase.placeholder == SpecializedNoun("cities")
        assert phrase.number is PLURAL

    def test_specialization_uses_leftmost_atomic_only(self, lex):
        got = text_of("City AND Capital", lex)
        assert got == "cities that are capitals"

    def test_depth_guard(self, lex):
        ce = Atomic(ex("Person"))
        for _ in range(70):
            ce = Some(ex("knows"), ce)
        with pytest.raises(ExpressionTooDeepError):
            verbalize_ce(ce, Graph(), lex)

    def test_non_functional_reading_behind_config_flag(self, lexicon):
        from semverb.lexicalizer import Lexicalizer, LexicalizerConfig

        non_functional = Lexicalizer(lexicon, LexicalizerConfig(functional_some=False))
        got = ce_text(parse_class_expression("birthPlace SOME City"), Graph(), non_functional)
        assert got == "everything whose birth places include a city"


class TestPostOrderDiscipline:
    def test_equal_subtrees_yield_equal_phrases(self, lex):
        g = Graph()
        filler = parse_class_expression("City AND locatedIn VALUE France")
        a = verbalize_ce(Some(ex("birthPlace"), filler), g, lex)
        b = verbalize_ce(Some(ex("birthPlace"), filler), g, lex)
        assert a == b

    def test_phrase_is_function_of_children_phrases(self, lex):
        # swapping a subtree for a structurally equal copy changes nothing
        g = Graph()
        sub1 = parse_class_expression("worksAt SOME (University AND locatedIn VALUE Spain)")
        sub2 = parse_class_expression("worksAt SOME (University AND locatedIn VALUE Spain)")
        ce1 = conjunction([Atomic(ex("Person")), sub1])
        ce2 = conjunction([Atomic(ex("Person")), sub2])
        assert verbalize_ce(ce1, g, lex) == verbalize_ce(ce2, g, lex)


class TestAxiomGoldens:
    def test_subclass_of_atomics(self, lex):
        ax = SubClassOf(Atomic(ex("Scientist")), Atomic(ex("Person")))
        assert verbalize_axiom(ax, Graph(), lex) == "Every scientist is a person."

    def test_subclass_with_existential_superclass(self, lex):
        ax = SubClassOf(Atomic(ex("Professor")), Some(ex("worksAt"), Atomic(ex("University"))))
        assert verbalize_axiom(ax, Graph(), lex) == "Every professor works at a university."

    def test_subclass_with_possessive_superclass(self, lex):
        ax = SubClassOf(Atomic(ex("Person")), Some(ex("birthPlace"), Atomic(ex("City"))))
        assert verbalize_axiom(ax, Graph(), lex) == "Every person's birth place is a city."

    def test_subclass_possessive_with_non_functional_reading(self, lexicon):
        from semverb.lexicalizer import Lexicalizer, LexicalizerConfig

        non_functional = Lexicalizer(lexicon, LexicalizerConfig(functional_some=False))
        ax = SubClassOf(Atomic(ex("Person")), Some(ex("birthPlace"), Atomic(ex("City"))))
        assert verbalize_axiom(ax, Graph(), non_functional) == \
            "Every person's birth places include a city."

    def test_subclass_with_multi_restriction_superclass(self, lex):
        ax = SubClassOf(
            Atomic(ex("Professor")),
            And((Some(ex("worksAt"), Atomic(ex("University"))),
                 Value(ex("locatedIn"), ex("France")))),
        )
        assert verbalize_axiom(ax, Graph(), lex) == (
            "Every professor is something that works at a university "
            "and is located in France."
        )

    def test_subclass_with_complex_subclass(self, lex):
        ax = SubClassOf(
            And((Atomic(ex("Person")), Value(ex("locatedIn"), ex("France")))),
            Atomic(ex("Person")),
        )
        assert verbalize_axiom(ax, Graph(), lex) == \
            "Every person that is located in France is a person."

    def test_class_assertion_atomic(self, lex):
        ax = ClassAssertion(ex("William_Shakespeare"), Atomic(ex("Writer")))
        assert verbalize_axiom(ax, Graph(), lex) == "William Shakespeare is a writer."

    def test_atomic_class_assertion_interchangeable_with_type_triple(self, lex):
        from semverb.deptree import realize_tree
        from semverb.triples import realize_triple

        ax = ClassAssertion(ex("W"), Atomic(ex("Writer")))
        triple = ax.as_triple()
        assert triple == Triple(ex("W"), RDF_TYPE, ex("Writer"))
        assert verbalize_axiom(ax, Graph(), lex) == \
            realize_tree(realize_triple(triple, Graph(), lex))

    def test_class_assertion_complex(self, lex):
        ax = ClassAssertion(ex("Marie_Curie"), Some(ex("worksAt"), Atomic(ex("University"))))
        assert verbalize_axiom(ax, Graph(), lex) == "Marie Curie works at a university."

    def test_subclass_with_disjunction_superclass(self, lex):
        ax = SubClassOf(Atomic(ex("Person")), Or((Atomic(ex("Actor")), Atomic(ex("Singer")))))
        assert verbalize_axiom(ax, Graph(), lex) == "Every person is an actor or a singer."

    def test_subclass_with_negated_superclass(self, lex):
        ax = SubClassOf(Atomic(ex("Koala")), Not(Atomic(ex("Person"))))
        assert verbalize_axiom(ax, Graph(), lex) == "Every koala is not a person."

    def test_subclass_with_passive_superclass(self, lex):
        ax = SubClassOf(Atomic(ex("Koala")), Value(ex("locatedIn"), ex("Australia")))
        assert verbalize_axiom(ax, Graph(), lex) == "Every koala is located in Australia."

    def test_property_assertion(self, lex):
        ax = PropertyAssertion(ex("Albert_Einstein"), ex("birthPlace"), ex("Ulm"))
        assert verbalize_axiom(ax, Graph(), lex) == "Albert Einstein's birth place is Ulm."

    def test_individual_frame_merges_into_one_sentence(self, lex):
        out = verbalize_owl_text(
            'Individual: Albert_Einstein\n'
            '  Types: Person\n'
            '  Facts: birthPlace Ulm, birthDate "1879-03-14"^^xsd:date\n',
            lex,
        )
        assert [s for _, s in out] == [
            "Albert Einstein is a person whose birth place is Ulm "
            "and whose birth date is 14 March 1879."
        ]

    def test_mixed_frame_document(self, lex):
        out = verbalize_owl_text(
            "Class: Scientist SubClassOf: Person\n"
            "Individual: Albert_Einstein Types: Scientist Facts: birthPlace Ulm\n"
            "Class: Professor SubClassOf: worksAt SOME University\n",
            lex,
        )
        assert [s for _, s in out] == [
            "Every scientist is a person.",
            "Albert Einstein is a scientist whose birth place is Ulm.",
            "Every professor works at a university.",
        ]

    def test_empty_document_yields_no_sentences(self, lex):
        assert verbalize_owl_text("", lex) == []
        assert verbalize_owl_text("# nothing\n", lex) == []

    def test_facts_only_frame_falls_back_to_plain_sentences(self, lex):
        out = verbalize_owl_text(
            "Individual: Alice Facts: birthPlace Ulm, knows Bob\n", lex)
        assert [s for _, s in out] == [
            "Alice's birth place is Ulm.",
            "Alice knows Bob.",
        ]

    def test_frame_with_complex_type_keeps_separate_sentence(self, lex):
        out = verbalize_owl_text(
            "Individual: Alice Types: Person, worksAt SOME University "
            "Facts: birthPlace Ulm\n", lex)
        assert [s for _, s in out] == [
            "Alice is a person whose birth place is Ulm.",
            "Alice works at a university.",
        ]

    def test_verbalize_individual_rejects_tbox_axioms(self, lex):
        with pytest.raises(ValueError):
            verbalize_individual(
                ex("Alice"),
                [SubClassOf(Atomic(ex("A")), Atomic(ex("B")))],
                Graph(), lex,
            )

    def test_individual_frame_with_verb_fact(self, lex):
        trees = verbalize_individual(
            ex("Albert_Einstein"),
            [
                ClassAssertion(ex("Albert_Einstein"), Atomic(ex("Person"))),
                PropertyAssertion(ex("Albert_Einstein"), ex("influenced"), ex("Nathan_Rosen")),
                PropertyAssertion(ex("Albert_Einstein"), ex("bornIn"), ex("Ulm")),
            ],
            Graph(), lex,
        )
        from semverb.deptree import realize_tree
        texts = [realize_tree(t) for t in trees]
        assert texts == [
            "Albert Einstein is a person who influenced Nathan Rosen "
            "and who was born in Ulm."
        ]


class TestNaiveEncodingUnreachable:
    SIX_TRIPLE_ENCODING = """
    :x rdf:type owl:Class .
    :x owl:intersectionOf :y1 .
    :y1 rdf:first :A .
    :y1 rdf:rest :y2 .
    :y2 rdf:first :B .
    :y2 rdf:rest rdf:nil .
    """

    def test_blank_node_encoding_rejected_at_parse(self):
        with pytest.raises(UnsupportedError):
            parse_turtle("_:x rdf:type owl:Class .")

    def test_named_encoding_rejected_before_realization(self, lex):
        g = parse_turtle(self.SIX_TRIPLE_ENCODING)
        with pytest.raises(UnsupportedError) as err:
            verbalize_graph(g, lex)
        assert "owl" in str(err.value)

    def test_no_whose_first_output_anywhere(self, lex):
        # the reified list vocabulary never reaches the triple realizer
        g = parse_turtle(self.SIX_TRIPLE_ENCODING)
        try:
            blocks = verbalize_graph(g, lex)
        except UnsupportedError:
            return
        text = " ".join(s for block in blocks for _, s in block)
        assert "whose first is" not in text


# ---------------------------------------------------------------------------
# evaluate_ce against an independent extension-set oracle
# ---------------------------------------------------------------------------

def oracle_extension(ce, graph):
    """Set-theoretic evaluation: computes whole extensions bottom-up,
    unlike evaluate_ce's per-individual recursion."""
    universe = set(graph.individuals())
    triples = set(graph.triples)

    def objects_of(i, p):
        return {t.object for t in triples if t.subject == i and t.predicate == p}

    def ext(ce):
        if isinstance(ce, Atomic):
            return {i for i in universe if Triple(i, RDF_TYPE, ce.cls) in triples}
        if isinstance(ce, And):
            result = universe
            for op in ce.operands:
                result = result & ext(op)
            return result
        if isinstance(ce, Or):
            result = set()
            for op in ce.operands:
                result = result | ext(op)
            return result
        if isinstance(ce, Not):
            return universe - ext(ce.inner)
        if isinstance(ce, Some):
            filler = ext(ce.filler)
            return {i for i in universe
                    if any(isinstance(o, Iri) and o in filler for o in objects_of(i, ce.property))}
        if isinstance(ce, Only):
            filler = ext(ce.filler)
            return {i for i in universe
                    if all(isinstance(o, Iri) and o in filler for o in objects_of(i, ce.property))}
        if isinstance(ce, Min):
            return {i for i in universe if len(objects_of(i, ce.property)) >= ce.n}
        if isinstance(ce, Max):
            return {i for i in universe if len(objects_of(i, ce.property)) <= ce.n}
        if isinstance(ce, Exactly):
            return {i for i in universe if len(objects_of(i, ce.property)) == ce.n}
        if isinstance(ce, Value):
            return {i for i in universe if ce.individual in objects_of(i, ce.property)}
        if isinstance(ce, OneOf):
            return set(ce.individuals) & universe
        raise TypeError(ce)

    return ext(ce)


CLASSES = [f"C{i}" for i in range(5)]
PROPERTIES = [f"p{i}" for i in range(4)]
INDIVIDUALS = [f"I{i}" for i in range(20)]


def random_graph(rng, n_individuals):
    chosen = INDIVIDUALS[:n_individuals]
    triples = []
    for ind in chosen:
        for _ in range(rng.randint(0, 3)):
            triples.append(Triple(ex(ind), RDF_TYPE, ex(rng.choice(CLASSES))))
        for _ in range(rng.randint(0, 4)):
            triples.append(Triple(ex(ind), ex(rng.choice(PROPERTIES)),
                                  ex(rng.choice(chosen))))
    return Graph(tuple(triples))


def random_ce(rng, depth):
    if depth <= 1:
        return Atomic(ex(rng.choice(CLASSES)))
    kind = rng.choice(["atomic", "and", "or", "not", "some", "only",
                       "min", "max", "exactly", "value", "oneof"])
    if kind == "atomic":
        return Atomic(ex(rng.choice(CLASSES)))
    if kind in ("and", "or"):
        ops = [random_ce(rng, depth - 1) for _ in range(rng.randint(2, 3))]
        build = conjunction if kind == "and" else disjunction
        return build(ops)
    if kind == "not":
        return Not(random_ce(rng, depth - 1))
    if kind == "some":
        return Some(ex(rng.choice(PROPERTIES)), random_ce(rng, depth - 1))
    if kind == "only":
        return Only(ex(rng.choice(PROPERTIES)), random_ce(rng, depth - 1))
    if kind == "min":
        return Min(ex(rng.choice(PROPERTIES)), rng.randint(0, 3))
    if kind == "max":
        return Max(ex(rng.choice(PROPERTIES)), rng.randint(0, 3))
    if kind == "exactly":
        return Exactly(ex(rng.choice(PROPERTIES)), rng.randint(0, 3))
    if kind == "value":
        return Value(ex(rng.choice(PROPERTIES)), ex(rng.choice(INDIVIDUALS)))
    return OneOf(tuple(ex(i) for i in rng.sample(INDIVIDUALS, rng.randint(1, 3))))


def test_evaluate_ce_agrees_with_extension_oracle():
    rng = random.Random(20240817)
    for _ in range(150):
        graph = random_graph(rng, rng.randint(1, 20))
        ce = random_ce(rng, rng.randint(1, 4))
        expected = oracle_extension(ce, graph)
        for ind in graph.individuals():
            assert evaluate_ce(ce, graph, ind) == (ind in expected), (ce, ind)


class TestEvaluateCeBasics:
    def test_direct_assertion(self):
        g = Graph((Triple(ex("e"), RDF_TYPE, ex("Scientist")),))
        assert evaluate_ce(Atomic(ex("Scientist")), g, ex("e"))
        assert not evaluate_ce(Atomic(ex("Writer")), g, ex("e"))

    def test_one_step_existential(self):
        g = Graph((
            Triple(ex("e"), ex("birthPlace"), ex("Ulm")),
            Triple(ex("Ulm"), RDF_TYPE, ex("City")),
        ))
        assert evaluate_ce(Some(ex("birthPlace"), Atomic(ex("City"))), g, ex("e"))

    def test_cardinality_counts_distinct_objects(self):
        g = Graph((
            Triple(ex("e"), ex("knows"), ex("a")),
            Triple(ex("e"), ex("knows"), ex("a")),
            Triple(ex("e"), ex("knows"), ex("b")),
        ))
        assert evaluate_ce(Min(ex("knows"), 2), g, ex("e"))
        assert not evaluate_ce(Min(ex("knows"), 3), g, ex("e"))
        assert evaluate_ce(Exactly(ex("knows"), 2), g, ex("e"))

    def test_value_with_literal(self):
        date = Literal("1879-03-14", Iri("http://www.w3.org/2001/XMLSchema#date"))
        g = Graph((Triple(ex("e"), ex("birthDate"), date),))
        assert evaluate_ce(Value(ex("birthDate"), date), g, ex("e"))
