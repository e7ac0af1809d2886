"""Small English morphology helpers: noun pluralization, indefinite
articles, verb number agreement and number words.

Rule-based with irregular tables; no external inflection engine. Only the
forms the verbalizer actually produces are covered (see Non-goals in the
README).
"""

from __future__ import annotations

IRREGULAR_PLURALS = {
    "person": "people",
    "child": "children",
    "man": "men",
    "woman": "women",
    "foot": "feet",
    "mouse": "mice",
    "sheep": "sheep",
}

_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")

VOWELS = "aeiou"

# Words whose spelling starts with a vowel but whose first sound does not
# (or vice versa), for a/an selection.
_AN_EXCEPTIONS = {"hour", "honest", "honour", "honor", "heir"}
_A_EXCEPTIONS_PREFIXES = ("uni", "use", "user", "usu", "eu", "one", "once")

NUMBER_WORDS = (
    "zero", "one", "two", "three", "four", "five", "six",
    "seven", "eight", "nine", "ten", "eleven", "twelve",
)

# Verbs whose 3rd-person-singular form does not follow the -s pattern.
_IRREGULAR_3SG = {"has": "have", "is": "are", "was": "were", "does": "do", "goes": "go"}

# Past participles that do not end in -ed/-d; used both for part-of-speech
# form readings and for spotting passive property phrasings ("born in").
IRREGULAR_PARTICIPLES = frozenset({
    "born", "known", "grown", "drawn", "shown", "thrown", "seen", "been",
    "done", "gone", "taken", "given", "driven", "written", "held", "made",
    "found", "won", "built", "met", "kept", "left", "lost", "paid", "said",
    "sold", "told", "thought", "bought", "brought", "caught", "taught", "begun",
})

PREPOSITIONS = frozenset({
    "in", "on", "at", "by", "for", "of", "to", "from", "with", "as",
    "into", "about", "after", "before", "under", "over", "near",
})


def pluralize_word(word: str) -> str:
    if word.lower() in IRREGULAR_PLURALS:
        plural = IRREGULAR_PLURALS[word.lower()]
        return plural.capitalize() if word[0].isupper() else plural
    if word.endswith("y") and len(word) > 1 and word[-2].lower() not in VOWELS:
        return word[:-1] + "ies"
    if word.endswith(_SIBILANT_ENDINGS):
        return word + "es"
    return word + "s"


def pluralize(singular: str) -> str:
    """Pluralize a noun phrase by inflecting its head (final) token.

    "birth place" -> "birth places", "person" -> "people".
    """
    tokens = singular.split()
    if not tokens:
        return singular
    tokens[-1] = pluralize_word(tokens[-1])
    return " ".join(tokens)


def indefinite_article(phrase: str) -> str:
    """Pick "a" or "an" for the first word of `phrase`.

    First-letter heuristic with an exceptions list; "university" gets "a",
    "hour" gets "an".
    """
    word = phrase.split()[0].lower() if phrase.split() else ""
    if not word:
        return "a"
    if word in _AN_EXCEPTIONS:
        return "an"
    if word[0] in VOWELS:
        if word.startswith(_A_EXCEPTIONS_PREFIXES):
            return "a"
        return "an"
    return "a"


def with_indefinite_article(phrase: str) -> str:
    return f"{indefinite_article(phrase)} {phrase}"


def number_word(n: int) -> str:
    """Number words up to twelve, digits beyond."""
    if 0 <= n < len(NUMBER_WORDS):
        return NUMBER_WORDS[n]
    return str(n)


def agree_verb(verb_3sg: str, plural: bool) -> str:
    """Adjust a present-tense 3rd-person-singular verb token to a plural
    subject: "works" -> "work", "has" -> "have".

    Past forms and participles ("influenced", "born") pass through
    unchanged, as does anything not ending in -s.
    """
    if not plural:
        return verb_3sg
    if verb_3sg in _IRREGULAR_3SG:
        return _IRREGULAR_3SG[verb_3sg]
    if verb_3sg.endswith("ies") and len(verb_3sg) > 3:
        return verb_3sg[:-3] + "y"
    if verb_3sg.endswith("es") and verb_3sg[:-2].endswith(("s", "x", "z", "ch", "sh")):
        return verb_3sg[:-2]
    if verb_3sg.endswith("s") and not verb_3sg.endswith("ss"):
        return verb_3sg[:-1]
    return verb_3sg


def agree_verb_phrase(phrase_3sg: str, plural: bool) -> str:
    """Agree the first token of a verb phrase: "works at" -> "work at"."""
    tokens = phrase_3sg.split()
    if not tokens:
        return phrase_3sg
    tokens[0] = agree_verb(tokens[0], plural)
    return " ".join(tokens)
