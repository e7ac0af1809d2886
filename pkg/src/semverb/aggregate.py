"""Aggregation of per-triple clause trees into a fluent sentence sequence.

The pipeline order is fixed: shorten_fanout, then cluster_and_order, then
group_subjects, then group_objects. Clustering keys on the source subject
atom; the grouping rules key on realized text, mirroring the equality of
realizations in their premises.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .deptree import (
    Coordination,
    DepNode,
    DepTree,
    Node,
    PLURAL,
    SINGULAR,
    clause_tokens,
    np_tokens,
)
from .morphology import pluralize


@dataclass(frozen=True)
class SentencePlan:
    trees: tuple[DepTree, ...]

    def __iter__(self):
        return iter(self.trees)

    def __len__(self):
        return len(self.trees)


def subject_text(tree: DepTree) -> str | None:
    """Realized grammatical subject, the key of the subject-grouping rule."""
    node = tree.root
    if isinstance(node, Coordination):
        node = node.children[0]
    if not isinstance(node, DepNode):
        return None
    subj = node.one("subj")
    if subj is None:
        return None
    return " ".join(np_tokens(subj))


def predicate_text(tree: DepTree) -> str | None:
    """Realized verb-plus-object in canonical singular form, the key of the
    object-grouping rule. None for already-grouped trees."""
    if isinstance(tree.root, Coordination):
        return None
    if tree.root.one("dobj") is None:
        return None
    return " ".join(clause_tokens(tree.root, with_subject=False, subject_number=SINGULAR))


def _cluster_key(tree: DepTree):
    return tree.subject_atom if tree.subject_atom is not None else subject_text(tree)


def cluster_and_order(trees: list[DepTree]) -> SentencePlan:
    """Partition by source subject; larger clusters first (ties keep first-
    appearance order); copular type sentences lead inside each cluster."""
    clusters: dict[object, list[DepTree]] = {}
    for tree in trees:
        clusters.setdefault(_cluster_key(tree), []).append(tree)
    ordered_keys = sorted(clusters, key=lambda k: -len(clusters[k]))  # stable: ties keep insertion order
    out: list[DepTree] = []
    for key in ordered_keys:
        cluster = clusters[key]
        out.extend(t for t in cluster if t.is_type_clause)
        out.extend(t for t in cluster if not t.is_type_clause)
    return SentencePlan(tuple(out))


def group_subjects(plan: SentencePlan) -> SentencePlan:
    """Collapse adjacent trees whose subjects realize identically into one
    tree with coordinated predicates; the subject appears once and common
    predicate prefixes collapse."""
    out: list[DepTree] = []
    run: list[DepTree] = []

    def flush():
        if not run:
            return
        if len(run) == 1:
            out.append(run[0])
        else:
            children: list[Node] = []
            for tree in run:
                if isinstance(tree.root, Coordination) and tree.root.collapse:
                    children.extend(tree.root.children)
                else:
                    children.append(tree.root)
            merged = Coordination("conj", tuple(children), collapse=True)
            out.append(DepTree(merged, subject_atom=run[0].subject_atom))
        run.clear()

    for tree in plan:
        key = subject_text(tree)
        if run and key is not None and key == subject_text(run[-1]):
            run.append(tree)
        else:
            flush()
            run.append(tree)
    flush()
    return SentencePlan(tuple(out))


def group_objects(plan: SentencePlan) -> SentencePlan:
    """Collapse consecutive trees whose verbs and objects realize
    identically: the subjects coordinate and the verb takes its plural
    form. Consecutive scope keeps the merge to adjacent clusters and never
    reorders distant content."""
    out: list[DepTree] = []
    run: list[DepTree] = []

    def flush():
        if not run:
            return
        out.append(run[0] if len(run) == 1 else _merge_subjects(run))
        run.clear()

    for tree in plan:
        key = predicate_text(tree)
        if run and key is not None and key == predicate_text(run[-1]):
            run.append(tree)
        else:
            flush()
            run.append(tree)
    flush()
    return SentencePlan(tuple(out))


def _merge_subjects(members: list[DepTree]) -> DepTree:
    subjects: list[Node] = []
    for tree in members:
        subj = tree.root.one("subj")  # type: ignore[union-attr]
        if isinstance(subj, Coordination):
            subjects.extend(subj.children)
        else:
            subjects.append(subj)
    first = members[0]
    root = first.root
    assert isinstance(root, DepNode)
    coordinated = Coordination("conj", tuple(subjects))
    deps = tuple(
        ("subj", coordinated) if rel == "subj" else (rel, child)
        for rel, child in root.deps
    )
    if all(t.is_type_clause for t in members):
        deps = tuple(
            (rel, _pluralize_class_np(child)) if rel == "dobj" else (rel, child)
            for rel, child in deps
        )
    return DepTree(
        replace(root, deps=deps),
        subject_atom=first.subject_atom,
        predicate_atom=first.predicate_atom,
        is_type_clause=first.is_type_clause,
    )


def _pluralize_class_np(node: Node) -> Node:
    """"a writer" -> "writers": drop the article modifier, pluralize the noun."""
    if not isinstance(node, DepNode):
        return node
    deps = tuple((rel, child) for rel, child in node.deps if rel != "advmod")
    return replace(node, surface=pluralize(node.surface), number=PLURAL, deps=deps)


def shorten_fanout(trees: list[DepTree], limit: int = 5) -> list[DepTree]:
    """Cap same-subject-same-predicate fan-outs at `limit` objects plus a
    trailing "and N others"."""
    if limit < 1:
        raise ValueError("fan-out limit must be at least 1")
    groups: dict[tuple, list[int]] = {}
    for i, tree in enumerate(trees):
        if tree.subject_atom is None or tree.predicate_atom is None:
            continue
        if isinstance(tree.root, Coordination) or tree.root.one("dobj") is None:
            continue
        groups.setdefault((tree.subject_atom, tree.predicate_atom), []).append(i)

    merged_away: set[int] = set()
    replacements: dict[int, DepTree] = {}
    for indices in groups.values():
        if len(indices) <= limit:
            continue
        members = [trees[i] for i in indices]
        kept = members[:limit]
        removed = len(members) - limit
        objects = [t.root.one("dobj") for t in kept]  # type: ignore[union-attr]
        objects.append(DepNode(f"{removed} others"))
        first_root = kept[0].root
        assert isinstance(first_root, DepNode)
        deps = tuple(
            ("dobj", Coordination("conj", tuple(objects))) if rel == "dobj" else (rel, child)
            for rel, child in first_root.deps
        )
        replacements[indices[0]] = DepTree(
            replace(first_root, deps=deps),
            subject_atom=kept[0].subject_atom,
            predicate_atom=kept[0].predicate_atom,
            is_type_clause=kept[0].is_type_clause,
        )
        merged_away.update(indices[1:])

    return [
        replacements.get(i, tree)
        for i, tree in enumerate(trees)
        if i not in merged_away
    ]


def aggregate(trees: list[DepTree], fanout_limit: int = 5) -> SentencePlan:
    """The full fixed-order pipeline."""
    shortened = shorten_fanout(trees, fanout_limit)
    plan = cluster_and_order(shortened)
    plan = group_subjects(plan)
    return group_objects(plan)
