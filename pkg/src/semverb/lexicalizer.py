"""Mapping of atoms (IRIs and literals) to words.

Classes and resources become noun phrases: the English label when the
graph carries one, otherwise the IRI fragment (after '#') or the last
path segment, with camelCase and underscores split into words. Property
labels are classified as noun or verb phrases by a small rule layer and,
where no rule fires, by the verb/noun log-frequency ratio over a
WordNet-style synset-frequency lexicon.
"""

from __future__ import annotations

import datetime
import enum
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .errors import EmptyNameError, UnknownWordError
from .model import Graph, Iri, Literal, RDFS_LABEL, XSD_NS
from .morphology import IRREGULAR_PARTICIPLES, pluralize

MONTH_NAMES = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)


class PartOfSpeech(enum.Enum):
    NOUN_PHRASE = "noun"
    VERB_PHRASE = "verb"


NOUN_PHRASE = PartOfSpeech.NOUN_PHRASE
VERB_PHRASE = PartOfSpeech.VERB_PHRASE


@dataclass(frozen=True)
class LexicalEntry:
    """The lexicalization of one atom."""

    lemma: str
    pos: PartOfSpeech
    singular: str
    plural: str
    # Set when classification fell back to noun because the lexicon had no
    # entry for the head word.
    uncertain: bool = False

    def __post_init__(self):
        if not self.lemma:
            raise ValueError("lemma must be non-empty")
        if self.pos is NOUN_PHRASE and not self.plural:
            raise ValueError("noun phrases need a plural form")


@dataclass(frozen=True)
class LexicalizerConfig:
    theta: float = 1.0
    label_property: Iri = RDFS_LABEL
    language: str = "en"
    # When False, existential fillers read "includes a" instead of the
    # functional-property "is a" phrasing.
    functional_some: bool = True

    def __post_init__(self):
        if self.theta <= 0:
            raise ValueError("theta must be positive")


class FrequencyLexicon:
    """Synset frequencies per (lemma, pos), loaded from a TSV file.

    File format: one synset per line, `lemma<TAB>pos<TAB>frequency`, where
    pos is `noun` or `verb`; lines starting with '#' are comments.
    """

    def __init__(self, entries: dict[tuple[str, PartOfSpeech], list[int]]):
        self._entries = {key: tuple(freqs) for key, freqs in entries.items()}

    @classmethod
    def load(cls, path: Union[str, Path]) -> "FrequencyLexicon":
        return cls.from_text(Path(path).read_text(encoding="utf-8"), source=str(path))

    @classmethod
    def from_text(cls, text: str, source: str = "<lexicon>") -> "FrequencyLexicon":
        path = source
        entries: dict[tuple[str, PartOfSpeech], list[int]] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 'lemma<TAB>pos<TAB>frequency'")
            lemma, pos_text, freq_text = parts
            lemma = lemma.strip().lower()
            try:
                pos = PartOfSpeech(pos_text.strip().lower())
            except ValueError:
                raise ValueError(f"{path}:{lineno}: pos must be 'noun' or 'verb'") from None
            try:
                freq = int(freq_text)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: frequency must be an integer") from None
            if freq < 0:
                raise ValueError(f"{path}:{lineno}: frequency must be non-negative")
            entries.setdefault((lemma, pos), []).append(freq)
        return cls(entries)

    def frequencies(self, lemma: str, pos: PartOfSpeech) -> tuple[int, ...]:
        return self._entries.get((lemma.lower(), pos), ())

    def has_lemma(self, lemma: str) -> bool:
        lemma = lemma.lower()
        return (lemma, NOUN_PHRASE) in self._entries or (lemma, VERB_PHRASE) in self._entries

    def lemmas(self) -> set[str]:
        return {lemma for lemma, _ in self._entries}

    # --- form-level morphology ------------------------------------------

    def _noun_stems(self, form: str) -> list[str]:
        stems = [form]
        if form.endswith("ies") and len(form) > 3:
            stems.append(form[:-3] + "y")
        if form.endswith("es"):
            stems.append(form[:-2])
        if form.endswith("s"):
            stems.append(form[:-1])
        return stems

    def _verb_stems(self, form: str) -> list[str]:
        stems = [form]
        if form.endswith("ies") and len(form) > 3:
            stems.append(form[:-3] + "y")
        if form.endswith("es"):
            stems.append(form[:-2])
        if form.endswith("s"):
            stems.append(form[:-1])
        if form.endswith("ied") and len(form) > 3:
            stems.append(form[:-3] + "y")
        if form.endswith("ed"):
            stems.append(form[:-2])
            if len(form) > 4 and form[-3] == form[-4]:
                stems.append(form[:-3])  # stopped -> stop
        if form.endswith("d"):
            stems.append(form[:-1])  # influenced -> influence
        if form.endswith("ing"):
            stem = form[:-3]
            stems.append(stem)
            stems.append(stem + "e")  # making -> make
            if len(stem) > 1 and stem[-1] == stem[-2]:
                stems.append(stem[:-1])  # running -> run
        return stems

    def readings(self, form: str) -> set[PartOfSpeech]:
        """Which parts of speech the surface form can realize.

        A form has a noun reading when it is a noun lemma or a regular
        plural of one, and a verb reading when it is a verb lemma, an
        inflected form of one, or an irregular past participle.
        """
        form = form.lower()
        poses: set[PartOfSpeech] = set()
        if any((stem, NOUN_PHRASE) in self._entries for stem in self._noun_stems(form)):
            poses.add(NOUN_PHRASE)
        if form in IRREGULAR_PARTICIPLES or any(
            (stem, VERB_PHRASE) in self._entries for stem in self._verb_stems(form)
        ):
            poses.add(VERB_PHRASE)
        return poses

    def reduce_to_lemma(self, form: str) -> Optional[str]:
        """The lexicon lemma a surface form belongs to, or None."""
        form = form.lower()
        seen: list[str] = []
        for stem in self._noun_stems(form) + self._verb_stems(form):
            if stem not in seen:
                seen.append(stem)
        for stem in seen:
            if self.has_lemma(stem):
                return stem
        return None


def score_pos_ratio(lemma: str, lexicon: FrequencyLexicon) -> float:
    """P(lemma|verb) / P(lemma|noun) over smoothed log2 synset frequencies.

    Each conditional mass is the sum of log2(f+1) over the synsets of that
    part of speech, normalized by the sum over all synsets; the +1 keeps
    zero-frequency synsets finite. Returns +inf when the lemma has no noun
    mass (verb-only reading); raises UnknownWordError when the lexicon has
    no entry for the lemma at all.
    """
    noun_freqs = lexicon.frequencies(lemma, NOUN_PHRASE)
    verb_freqs = lexicon.frequencies(lemma, VERB_PHRASE)
    if not noun_freqs and not verb_freqs:
        raise UnknownWordError(lemma)
    total = sum(math.log2(f + 1) for f in noun_freqs + verb_freqs)
    if total == 0:
        return math.inf
    p_noun = sum(math.log2(f + 1) for f in noun_freqs) / total
    p_verb = sum(math.log2(f + 1) for f in verb_freqs) / total
    if p_noun == 0:
        return math.inf
    return p_verb / p_noun


def classify_property(label: str, lexicon: FrequencyLexicon,
                      config: LexicalizerConfig) -> PartOfSpeech:
    """Noun phrase or verb phrase for a property label.

    Rule layer first: a first token whose only reading is a verb makes the
    label a verb phrase; a label ending in a noun whose first token is not
    a verb is a noun phrase; gerund-initial labels are noun phrases. When
    no rule fires, the theta ratio test on the first token decides: verb
    when score_pos_ratio >= theta.
    """
    tokens = label.lower().split()
    if not tokens:
        raise ValueError("property label must be non-empty")
    first = lexicon.readings(tokens[0])
    if first == {VERB_PHRASE}:
        return VERB_PHRASE
    last = lexicon.readings(tokens[-1])
    if NOUN_PHRASE in last and VERB_PHRASE not in first:
        return NOUN_PHRASE
    if _is_gerund(tokens[0], lexicon):
        return NOUN_PHRASE
    lemma = lexicon.reduce_to_lemma(tokens[0])
    if lemma is None:
        raise UnknownWordError(tokens[0])
    return VERB_PHRASE if score_pos_ratio(lemma, lexicon) >= config.theta else NOUN_PHRASE


def _is_gerund(token: str, lexicon: FrequencyLexicon) -> bool:
    if not token.endswith("ing") or len(token) <= 4:
        return False
    stem = token[:-3]
    candidates = (stem, stem + "e", stem[:-1] if len(stem) > 1 and stem[-1] == stem[-2] else stem)
    return any(lexicon.frequencies(c, VERB_PHRASE) for c in candidates)


# ---------------------------------------------------------------------------
# Names for IRIs
# ---------------------------------------------------------------------------

_CAMEL_RE = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")


def _derive_name(iri: Iri, graph: Graph, config: LexicalizerConfig, lowercase: bool) -> str:
    label = graph.label_text(iri, config.label_property, config.language)
    if label is not None and label.strip():
        return " ".join(label.split())
    value = iri.value
    if "#" in value:
        raw = value.rsplit("#", 1)[1]
    else:
        raw = value.rstrip("/").rsplit("/", 1)[-1]
    raw = raw.replace("_", " ").replace("-", " ")
    raw = _CAMEL_RE.sub(" ", raw)
    words = raw.split()
    if not words:
        raise EmptyNameError(f"no usable name can be derived from <{iri.value}>")
    if lowercase:
        words = [w.lower() for w in words]
    return " ".join(words)


def lexicalize_iri(iri: Iri, graph: Graph, is_class: bool,
                   config: LexicalizerConfig = LexicalizerConfig()) -> LexicalEntry:
    """Noun-phrase lexicalization of a class or resource IRI.

    Classes are lowercased and get a plural form; resources keep their
    proper-noun capitalization and do not pluralize.
    """
    name = _derive_name(iri, graph, config, lowercase=is_class)
    plural = pluralize(name) if is_class else name
    return LexicalEntry(name, NOUN_PHRASE, name, plural)


def lexicalize_property(iri: Iri, graph: Graph, lexicon: FrequencyLexicon,
                        config: LexicalizerConfig = LexicalizerConfig()) -> LexicalEntry:
    """Lexicalization of a property IRI, classified as noun or verb phrase.

    When the lexicon cannot classify the label the entry falls back to a
    noun phrase and is flagged uncertain.
    """
    name = _derive_name(iri, graph, config, lowercase=True)
    uncertain = False
    try:
        pos = classify_property(name, lexicon, config)
    except UnknownWordError:
        pos = NOUN_PHRASE
        uncertain = True
    plural = pluralize(name) if pos is NOUN_PHRASE else name
    return LexicalEntry(name, pos, name, plural, uncertain=uncertain)


# ---------------------------------------------------------------------------
# Literals
# ---------------------------------------------------------------------------

def realize_literal(lit: Literal, graph: Graph,
                    config: LexicalizerConfig = LexicalizerConfig()) -> str:
    """Surface text for a literal.

    Language tags are dropped; built-in datatypes use the lexical form
    (dates reformatted to "D Month YYYY"); user-defined datatypes append
    the lexicalized datatype name, pluralized unless the value is 1.
    """
    if lit.language_tag is not None:
        return lit.lexical_form
    if lit.datatype.value.startswith(XSD_NS):
        if lit.datatype.value == XSD_NS + "date":
            try:
                day = datetime.date.fromisoformat(lit.lexical_form)
            except ValueError:
                return lit.lexical_form
            return f"{day.day} {MONTH_NAMES[day.month - 1]} {day.year}"
        return lit.lexical_form
    unit = lexicalize_iri(lit.datatype, graph, is_class=True, config=config)
    try:
        singular_value = float(lit.lexical_form) == 1.0
    except ValueError:
        singular_value = True
    unit_text = unit.singular if singular_value else unit.plural
    return f"{lit.lexical_form} {unit_text}"


# ---------------------------------------------------------------------------
# Bundled context passed through the verbalizers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Lexicalizer:
    """Frequency lexicon plus configuration, shared by all verbalizers."""

    lexicon: FrequencyLexicon
    config: LexicalizerConfig = field(default_factory=LexicalizerConfig)

    def class_entry(self, iri: Iri, graph: Graph) -> LexicalEntry:
        return lexicalize_iri(iri, graph, is_class=True, config=self.config)

    def resource_entry(self, iri: Iri, graph: Graph) -> LexicalEntry:
        return lexicalize_iri(iri, graph, is_class=False, config=self.config)

    def property_entry(self, iri: Iri, graph: Graph) -> LexicalEntry:
        return lexicalize_property(iri, graph, self.lexicon, self.config)

    def term_text(self, term: Union[Iri, Literal], graph: Graph) -> str:
        if isinstance(term, Literal):
            return realize_literal(term, graph, self.config)
        return self.resource_entry(term, graph).singular
