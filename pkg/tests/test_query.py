import pytest

from semverb.errors import MultiProjectionUnsupported, UnsupportedError
from semverb.model import Graph, Iri, RDF_TYPE, Variable
from semverb.query import plan_query, verbalize_query
from semverb.syntax import parse_sparql

DBO = "http://dbpedia.org/ontology/"

LISTING_1 = """SELECT ?person
WHERE {
    ?person a dbo:Scientist;
        dbo:birthPlace dbr:Ulm.
}"""


def verbalized(query_text, lex):
    return verbalize_query(parse_sparql(query_text), Graph(), lex)


class TestPlanQuery:
    def test_buckets(self):
        plan = plan_query(parse_sparql(LISTING_1))
        assert plan.subject_var == Variable("person")
        assert len(plan.class_patterns) == 1
        assert plan.class_patterns[0].predicate == RDF_TYPE
        assert len(plan.restriction_patterns) == 1
        assert plan.restriction_patterns[0].predicate == Iri(DBO + "birthPlace")

    def test_every_pattern_in_exactly_one_bucket(self):
        q = parse_sparql(
            "SELECT ?x WHERE { ?x a :C ; :p :v ; a :D . ?x :q ?y . ?y :r :w }"
        )
        plan = plan_query(q)
        assert len(plan.class_patterns) + len(plan.restriction_patterns) == len(q.body)

    def test_no_type_pattern_gives_empty_class_bucket(self, lex):
        q = parse_sparql("SELECT ?x WHERE { ?x :birthPlace :Ulm }")
        plan = plan_query(q)
        assert plan.class_patterns == ()
        assert verbalized("SELECT ?x WHERE { ?x :birthPlace :Ulm }", lex) == \
            "This query retrieves entities whose birth place is Ulm."

    def test_optional_routed_to_optional_bucket(self):
        q = parse_sparql("SELECT ?x WHERE { ?x a :C . OPTIONAL { ?x :deathPlace :Y } }")
        plan = plan_query(q)
        assert len(plan.optional_groups) == 1

    def test_multi_projection_rejected(self):
        q = parse_sparql("SELECT ?x ?y WHERE { ?x :knows ?y }")
        with pytest.raises(MultiProjectionUnsupported):
            plan_query(q)


class TestVerbalizeQuery:
    def test_listing_query(self, lex):
        assert verbalized(LISTING_1, lex) == \
            "This query retrieves scientists whose birth place is Ulm."

    def test_limit_adds_at_most_prefix(self, lex):
        assert verbalized(LISTING_1 + "\nLIMIT 3", lex) == \
            "This query retrieves at most 3 scientists whose birth place is Ulm."

    def test_limit_is_compositional(self, lex):
        base = verbalized(LISTING_1, lex)
        limited = verbalized(LISTING_1 + "\nLIMIT 3", lex)
        assert limited.replace("at most 3 ", "") == base

    def test_type_only_query(self, lex):
        assert verbalized("SELECT ?x WHERE { ?x a :City }", lex) == \
            "This query retrieves cities."

    def test_projection_variable_never_appears(self, lex):
        text = verbalized(LISTING_1, lex)
        assert "?person" not in text
        assert "person" not in text.replace("This query", "")

    def test_coverage_of_predicates_and_terms(self, lex):
        q = "SELECT ?x WHERE { ?x a :Scientist ; :worksAt :MIT ; :knows :Bohr }"
        text = verbalized(q, lex)
        # "work at" rather than "works at": the verb agrees with the plural head
        for fragment in ("scientists", "work at", "MIT", "know", "Bohr"):
            assert fragment in text

    def test_verb_restriction_agrees_with_plural_head(self, lex):
        assert verbalized("SELECT ?x WHERE { ?x a :Person ; :worksAt :MIT }", lex) == \
            "This query retrieves people that work at MIT."

    def test_secondary_variable_expands_to_nested_phrase(self, lex):
        q = ("SELECT ?p WHERE { ?p a :Person ; :birthPlace ?c . "
             "?c a :City ; :locatedIn :France . }")
        assert verbalized(q, lex) == (
            "This query retrieves people whose birth place is "
            "a city that is located in France."
        )

    def test_secondary_variable_without_type_reads_something(self, lex):
        q = "SELECT ?p WHERE { ?p :birthPlace ?c . ?c :locatedIn :France }"
        assert verbalized(q, lex) == (
            "This query retrieves entities whose birth place is "
            "something that is located in France."
        )

    def test_inverse_position_with_verb(self, lex):
        q = "SELECT ?x WHERE { :Albert_Einstein :influenced ?x . ?x a :Scientist }"
        assert verbalized(q, lex) == \
            "This query retrieves scientists that Albert Einstein influenced."

    def test_inverse_position_with_noun(self, lex):
        q = "SELECT ?x WHERE { :Albert_Einstein :birthPlace ?x . ?x a :City }"
        assert verbalized(q, lex) == \
            "This query retrieves cities that are the birth place of Albert Einstein."

    def test_optional_with_bare_variable(self, lex):
        q = "SELECT ?x WHERE { ?x a :Scientist . OPTIONAL { ?x :deathPlace ?d } }"
        assert verbalized(q, lex) == (
            "This query retrieves scientists and, if available, their death place."
        )

    def test_optional_with_ground_object(self, lex):
        q = "SELECT ?x WHERE { ?x a :Scientist . OPTIONAL { ?x :deathPlace :Princeton } }"
        assert verbalized(q, lex) == (
            "This query retrieves scientists and, if available, "
            "whose death place is Princeton."
        )

    def test_order_by_secondary_variable_names_property(self, lex):
        q = ("SELECT ?x WHERE { ?x a :Scientist ; :birthDate ?d } "
             "ORDER BY DESC(?d)")
        assert verbalized(q, lex) == (
            "This query retrieves scientists whose birth date is something "
            "sorted by birth date (descending)."
        )

    def test_order_by_projection_variable(self, lex):
        q = "SELECT ?x WHERE { ?x a :Scientist } ORDER BY ?x"
        assert verbalized(q, lex) == \
            "This query retrieves scientists sorted by scientist (ascending)."

    def test_variable_predicate_unsupported(self, lex):
        q = "SELECT ?x WHERE { ?x ?p :Ulm }"
        with pytest.raises(UnsupportedError):
            verbalized(q, lex)

    def test_variable_predicate_in_inverse_position_unsupported(self, lex):
        q = "SELECT ?x WHERE { :Albert_Einstein ?p ?x }"
        with pytest.raises(UnsupportedError):
            verbalized(q, lex)

    def test_disconnected_pattern_unsupported(self, lex):
        q = "SELECT ?x WHERE { ?x a :City . ?y :knows :Z }"
        with pytest.raises(UnsupportedError):
            verbalized(q, lex)

    def test_inverse_position_with_passive_verb(self, lex):
        q = "SELECT ?x WHERE { :Leonard_Nimoy :bornIn ?x . ?x a :City }"
        assert verbalized(q, lex) == \
            "This query retrieves cities that Leonard Nimoy was born in."

    def test_inverse_position_with_variable_subject(self, lex):
        q = "SELECT ?x WHERE { ?y :influenced ?x . ?y a :Person }"
        assert verbalized(q, lex) == \
            "This query retrieves entities that a person influenced."

    def test_secondary_variable_with_two_types(self, lex):
        q = "SELECT ?p WHERE { ?p :birthPlace ?c . ?c a :City . ?c a :Capital }"
        assert verbalized(q, lex) == (
            "This query retrieves entities whose birth place is "
            "a city that is a capital."
        )

    def test_chained_optional_expands_nested_variable(self, lex):
        q = ("SELECT ?x WHERE { ?x a :Scientist . "
             "OPTIONAL { ?x :deathPlace ?d . ?d :locatedIn :France } }")
        assert verbalized(q, lex) == (
            "This query retrieves scientists and, if available, "
            "whose death place is something that is located in France."
        )

    def test_optional_about_other_variable_unsupported(self, lex):
        q = "SELECT ?x WHERE { ?x :birthPlace ?c . OPTIONAL { ?c :population 5 } }"
        with pytest.raises(UnsupportedError):
            verbalized(q, lex)

    def test_optional_with_verb_and_bare_variable(self, lex):
        q = "SELECT ?x WHERE { ?x a :Scientist . OPTIONAL { ?x :influenced ?i } }"
        assert verbalized(q, lex) == (
            "This query retrieves scientists and, if available, what they influenced."
        )

    def test_order_by_optional_variable(self, lex):
        q = ("SELECT ?x WHERE { ?x a :Scientist . OPTIONAL { ?x :deathDate ?d } } "
             "ORDER BY ?d")
        text = verbalized(q, lex)
        assert text.endswith("sorted by death date (ascending).")

    def test_order_by_projection_variable_without_class_uses_name(self, lex):
        q = "SELECT ?thing WHERE { ?thing :birthPlace :Ulm } ORDER BY ?thing"
        assert verbalized(q, lex).endswith("sorted by thing (ascending).")

    def test_variable_predicate_inside_optional_unsupported(self, lex):
        q = "SELECT ?x WHERE { ?x a :City . OPTIONAL { ?x ?p :Y } }"
        with pytest.raises(UnsupportedError):
            verbalized(q, lex)
