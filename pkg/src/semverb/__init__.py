"""semverb: rule-based verbalization of RDF, OWL and SPARQL into English.

The pipeline is bottom-up: atoms are lexicalized into noun or verb
phrases, single statements become dependency-tree clauses, clause lists
are aggregated (clustered, ordered, grouped), and trees are linearized
into sentences.
"""

from .aggregate import (
    SentencePlan,
    aggregate,
    cluster_and_order,
    group_objects,
    group_subjects,
    shorten_fanout,
)
from .deptree import (
    Coordination,
    DepNode,
    DepTree,
    Number,
    Tense,
    format_tree,
    inflect_be,
    parse_tree_debug,
    realize_tree,
)
from .errors import (
    EmptyNameError,
    ExpressionTooDeepError,
    LexicalizationError,
    MalformedTreeError,
    MultiProjectionUnsupported,
    ParseError,
    UnknownPrefixError,
    UnknownWordError,
    UnsupportedError,
    VerbalizerError,
)
from .lexicalizer import (
    FrequencyLexicon,
    LexicalEntry,
    Lexicalizer,
    LexicalizerConfig,
    PartOfSpeech,
    classify_property,
    lexicalize_iri,
    lexicalize_property,
    realize_literal,
    score_pos_ratio,
)
from .model import (
    And,
    Atomic,
    Axiom,
    ClassAssertion,
    ClassExpression,
    Exactly,
    Graph,
    Iri,
    Literal,
    Max,
    Min,
    Modifiers,
    Not,
    OneOf,
    Only,
    Or,
    OrderBy,
    PropertyAssertion,
    Some,
    SparqlSelect,
    SubClassOf,
    Term,
    Triple,
    TriplePattern,
    Value,
    Variable,
    conjunction,
    disjunction,
    expand_prefixed_name,
)
from .morphology import indefinite_article, pluralize
from .owl import CEPhrase, ce_text, evaluate_ce, verbalize_axiom, verbalize_ce
from .query import QueryPlan, plan_query, verbalize_query
from .syntax import (
    parse_class_expression,
    parse_manchester,
    parse_sparql,
    parse_turtle,
    serialize_turtle,
)
from .triples import realize_triple

__version__ = "0.1.0"
