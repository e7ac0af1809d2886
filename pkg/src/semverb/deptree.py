"""Dependency-tree clause representation and the surface realizer.

Every verbalizer emits these trees; realize_tree linearizes them into an
English sentence. The relation vocabulary extends Stanford-style
dependencies with an explicit BE copula node, conj/disj coordinations and
relcl for relative clauses.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Union

from .errors import MalformedTreeError
from .morphology import agree_verb_phrase

RELATIONS = frozenset({
    "root", "subj", "dobj", "poss", "cop", "cc", "conj", "disj", "advmod", "num", "relcl",
})


class Number(enum.Enum):
    SINGULAR = "sg"
    PLURAL = "pl"


class Tense(enum.Enum):
    PRESENT = "present"
    PAST = "past"


SINGULAR = Number.SINGULAR
PLURAL = Number.PLURAL
PRESENT = Tense.PRESENT
PAST = Tense.PAST


def inflect_be(number: Number, tense: Tense) -> str:
    if tense is PAST:
        return "was" if number is SINGULAR else "were"
    return "is" if number is SINGULAR else "are"


@dataclass(frozen=True)
class DepNode:
    """One word or phrase with its outgoing labeled dependencies.

    The BE copula carries no surface text; it inflects at realization time
    from the subject's number and the clause tense.
    """

    surface: str
    number: Number = SINGULAR
    is_be: bool = False
    tense: Tense = PRESENT
    deps: tuple[tuple[str, "Node"], ...] = ()

    def __post_init__(self):
        if not self.surface and not self.is_be:
            raise ValueError("only the BE node may have an empty surface")
        for rel, _ in self.deps:
            if rel not in RELATIONS:
                raise ValueError(f"unknown dependency relation {rel!r}")

    def children(self, rel: str) -> list["Node"]:
        return [child for r, child in self.deps if r == rel]

    def one(self, rel: str) -> Optional["Node"]:
        found = self.children(rel)
        if len(found) > 1:
            raise MalformedTreeError(f"more than one {rel} dependent on {self.surface!r}")
        return found[0] if found else None


def be_node(tense: Tense = PRESENT) -> DepNode:
    return DepNode("", is_be=True, tense=tense)


@dataclass(frozen=True)
class Coordination:
    """conj/disj of two or more phrase elements.

    `collapse` marks predicate coordinations produced by subject grouping,
    whose children drop the token prefix they share with the first child
    ("is a scientist and [is] known for ...").
    """

    kind: str  # "conj" | "disj"
    children: tuple["Node", ...]
    collapse: bool = False

    def __post_init__(self):
        if self.kind not in ("conj", "disj"):
            raise ValueError("coordination kind must be conj or disj")
        if len(self.children) < 2:
            raise ValueError("coordinations need at least two children")

    @property
    def word(self) -> str:
        return "and" if self.kind == "conj" else "or"


Node = Union[DepNode, Coordination]


@dataclass(frozen=True)
class DepTree:
    """A clause tree plus the provenance the aggregator keys on."""

    root: Node
    subject_atom: object = None      # source subject term, set by realize_triple
    predicate_atom: object = None    # source predicate IRI
    is_type_clause: bool = False     # rdf:type copular sentence

    def realize(self) -> str:
        return realize_tree(self)


def number_of(node: Node) -> Number:
    if isinstance(node, Coordination):
        return PLURAL
    return node.number


_NP_RELATIONS = frozenset({"poss", "num", "advmod", "relcl"})
_CLAUSE_RELATIONS = frozenset({"subj", "dobj", "cop", "relcl"})


def np_tokens(node: Node) -> list[str]:
    """Linearize a noun-phrase node: possessor, count, modifiers, surface,
    relative clauses."""
    if isinstance(node, Coordination):
        parts = [np_tokens(child) for child in node.children]
        return _join_coordinated(parts, node.word)
    for rel, _ in node.deps:
        if rel not in _NP_RELATIONS:
            raise MalformedTreeError(
                f"{rel} dependent has no place in the noun phrase {node.surface!r}"
            )
    tokens: list[str] = []
    poss = node.one("poss")
    if poss is not None:
        owner = np_tokens(poss)
        owner[-1] = owner[-1] + "'s"
        tokens.extend(owner)
    for num_child in node.children("num"):
        tokens.extend(np_tokens(num_child))
    for adv in node.children("advmod"):
        tokens.extend(np_tokens(adv))
    if node.surface:
        tokens.extend(node.surface.split())
    for relcl in node.children("relcl"):
        tokens.extend(np_tokens(relcl))
    return tokens


def clause_tokens(node: Node, *, with_subject: bool = True,
                  subject_number: Optional[Number] = None) -> list[str]:
    """Linearize a clause: subject, copula/verb, object, trailing modifiers."""
    if isinstance(node, Coordination):
        return _grouped_clause_tokens(node, with_subject, subject_number)

    if not isinstance(node, DepNode):
        raise MalformedTreeError(f"not a clause node: {node!r}")
    for rel, _ in node.deps:
        if rel not in _CLAUSE_RELATIONS:
            raise MalformedTreeError(
                f"{rel} dependent has no place on the clause head {node.surface!r}"
            )
    subj = node.one("subj")
    dobj = node.one("dobj")
    cop = node.one("cop")
    if cop is not None and not (isinstance(cop, DepNode) and cop.is_be):
        raise MalformedTreeError("cop edges must attach the BE node")
    if subj is None and with_subject:
        raise MalformedTreeError(f"clause {node.surface!r} has no subject")

    # explicit override first (canonical keys, grouped predicates), then
    # the subject's number, then the node's own
    number = subject_number
    if number is None and subj is not None:
        number = number_of(subj)
    if number is None:
        number = node.number

    tokens: list[str] = []
    if with_subject and subj is not None:
        tokens.extend(np_tokens(subj))

    if node.is_be:
        tokens.append(inflect_be(number, node.tense))
    else:
        if cop is not None:
            tokens.append(inflect_be(number, node.tense))
            tokens.extend(node.surface.split())
        else:
            surface = node.surface
            if node.tense is PRESENT:
                surface = agree_verb_phrase(surface, plural=number is PLURAL)
            tokens.extend(surface.split())

    if dobj is not None:
        tokens.extend(np_tokens(dobj))
    for relcl in node.children("relcl"):
        tokens.extend(np_tokens(relcl))
    return tokens


def _grouped_clause_tokens(coord: Coordination, with_subject: bool,
                           subject_number: Optional[Number]) -> list[str]:
    """A coordination of clauses sharing one subject (subject grouping)."""
    first = coord.children[0]
    if not isinstance(first, DepNode):
        raise MalformedTreeError("clause coordination children must be clauses")
    subj = first.one("subj")
    number = subject_number
    if subj is not None:
        number = number_of(subj)
    parts = [
        clause_tokens(child, with_subject=False, subject_number=number)
        for child in coord.children
    ]
    if coord.collapse:
        head = parts[0]
        for i in range(1, len(parts)):
            shared = 0
            limit = min(len(head), len(parts[i])) - 1
            while shared < limit and head[shared] == parts[i][shared]:
                shared += 1
            parts[i] = parts[i][shared:]
    tokens: list[str] = []
    if with_subject and subj is not None:
        tokens.extend(np_tokens(subj))
    tokens.extend(_join_coordinated(parts, coord.word))
    return tokens


def _join_coordinated(parts: list[list[str]], word: str) -> list[str]:
    """n-1 separators, the final one "and"/"or"; commas before all but the
    final conjunct once there are more than three conjuncts."""
    out: list[str] = []
    n = len(parts)
    for i, part in enumerate(parts):
        if i == 0:
            out.extend(part)
        elif i == n - 1:
            out.append(word)
            out.extend(part)
        elif n > 3:
            out[-1] = out[-1] + ","
            out.extend(part)
        else:
            out.append(word)
            out.extend(part)
    return out


def realize_tree(tree: DepTree) -> str:
    """The full English sentence for a clause tree: linearized, sentence-
    initial capitalization, terminal period."""
    try:
        tokens = clause_tokens(tree.root)
    except ValueError as exc:
        raise MalformedTreeError(str(exc)) from None
    if not tokens:
        raise MalformedTreeError("tree realizes to no tokens")
    text = " ".join(tokens)
    text = text[0].upper() + text[1:]
    return text + "."


# ---------------------------------------------------------------------------
# Debug serialization (behind the CLI --emit-trees flag)
# ---------------------------------------------------------------------------

def _node_label(node: Node) -> str:
    if isinstance(node, Coordination):
        return f"<{node.kind}>"
    if node.is_be:
        return "BE"
    return node.surface


def format_tree(tree: DepTree) -> str:
    """Indented one-relation-per-line rendering: `relation(head, dependent)`."""
    lines = [f"root(ROOT, {_node_label(tree.root)})"]

    def walk(node: Node, depth: int) -> None:
        indent = "  " * depth
        if isinstance(node, Coordination):
            rel = node.kind
            for child in node.children:
                lines.append(f"{indent}{rel}({_node_label(node)}, {_node_label(child)})")
                walk(child, depth + 1)
            return
        for rel, child in node.deps:
            lines.append(f"{indent}{rel}({_node_label(node)}, {_node_label(child)})")
            walk(child, depth + 1)

    walk(tree.root, 1)
    return "\n".join(lines)


_DEBUG_LINE_RE = re.compile(r"\A(?P<indent>(?:  )*)(?P<rel>[a-z]+)\((?P<head>.*), (?P<dep>.*)\)\Z")


@dataclass(frozen=True)
class DebugEdge:
    depth: int
    relation: str
    head: str
    dependent: str


def parse_tree_debug(text: str) -> list[DebugEdge]:
    """Parse format_tree output back into edges, validating tree shape.

    Raises MalformedTreeError when a line does not match the format, uses
    an unknown relation, or the indentation does not describe a tree.
    """
    edges: list[DebugEdge] = []
    stack: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        m = _DEBUG_LINE_RE.match(line)
        if m is None:
            raise MalformedTreeError(f"line {lineno}: not a relation(head, dependent) line")
        depth = len(m.group("indent")) // 2
        rel = m.group("rel")
        if rel not in RELATIONS:
            raise MalformedTreeError(f"line {lineno}: unknown relation {rel!r}")
        if lineno == 1 or not edges:
            if rel != "root" or depth != 0:
                raise MalformedTreeError("debug tree must start with an unindented root line")
            stack = [m.group("dep")]
        else:
            if depth < 1 or depth > len(stack):
                raise MalformedTreeError(f"line {lineno}: indentation does not nest")
            stack = stack[:depth]
            if m.group("head") != stack[-1]:
                raise MalformedTreeError(
                    f"line {lineno}: head {m.group('head')!r} is not the enclosing node"
                )
            stack.append(m.group("dep"))
        edges.append(DebugEdge(depth, rel, m.group("head"), m.group("dep")))
    if not edges:
        raise MalformedTreeError("empty debug tree")
    return edges
