"""Composition trees over multi-patterns, and decomposition into generators.

A tree is either :data:`LEAF` (an open input, evaluating to the unit) or a
:class:`Node` whose label is a multi-pattern with one child per input.
Evaluation and formatting are iterative so that deep trees (large degrees
decompose into long chains) do not hit the recursion limit.

Text form: ``(name child1 child2 ...)``, ``_`` for a leaf, a bare ``name``
for an arity-0 node, and ``[pattern text]`` for an inline label.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from .errors import DimensionError, ParseError, StructureError
from .patterns import MultiPattern, Pattern, full_compose, mp_unit, parse_multipattern


@dataclass(frozen=True)
class Leaf:
    def __repr__(self) -> str:
        return "LEAF"


LEAF = Leaf()


@dataclass(frozen=True)
class Node:
    label: MultiPattern
    children: tuple["CompositionTree", ...] = ()
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


CompositionTree = Union[Leaf, Node]


def _voice_count(t: CompositionTree) -> Optional[int]:
    m = None
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Node):
            if m is None:
                m = node.label.m
            elif node.label.m != m:
                raise StructureError(f"labels mix voice counts {m} and {node.label.m}")
            stack.extend(node.children)
        elif not isinstance(node, Leaf):
            raise StructureError(f"not a tree node: {node!r}")
    return m


def eval_tree(t: CompositionTree, m: Optional[int] = None) -> MultiPattern:
    """Compose the labels of ``t`` as the tree prescribes.

    ``m`` is only needed when ``t`` is a bare leaf; otherwise it is read from
    the labels and checked against the argument when both are given.
    """
    found = _voice_count(t)
    if found is None:
        found = 1 if m is None else m
    elif m is not None and m != found:
        raise DimensionError(f"tree labels have {found} voices, expected {m}")
    unit = mp_unit(found)

    out: list[MultiPattern] = []
    stack: list[tuple[CompositionTree, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Leaf):
            out.append(unit)
        elif not ready:
            if len(node.children) != node.label.arity:
                raise StructureError(
                    f"node {node.name or node.label} has arity {node.label.arity} "
                    f"but {len(node.children)} children"
                )
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
        else:
            k = len(node.children)
            args = out[len(out) - k :]
            del out[len(out) - k :]
            out.append(full_compose(node.label, args))
    return out[0]


# -- generators {eps, rest, -1 1} ---------------------------------------------

EPSILON = MultiPattern((Pattern(()),))
REST_GENERATOR = MultiPattern((Pattern((None,)),))
STEP_GENERATOR = MultiPattern((Pattern((-1, 1)),))

GENERATORS: dict[str, MultiPattern] = {
    "eps": EPSILON,
    "rest": REST_GENERATOR,
    "g": STEP_GENERATOR,
}


def _eps() -> Node:
    return Node(EPSILON, (), "eps")


def _g(left: CompositionTree, right: CompositionTree) -> Node:
    return Node(STEP_GENERATOR, (left, right), "g")


def _letter_tree(a: Optional[int]) -> CompositionTree:
    if a is None:
        return Node(REST_GENERATOR, (), "rest")
    tree: CompositionTree = LEAF
    # g ∘ [eps, t] shifts t up by one, g ∘ [t, eps] shifts it down
    for _ in range(abs(a)):
        tree = _g(_eps(), tree) if a > 0 else _g(tree, _eps())
    return tree


def decompose(p: Union[Pattern, MultiPattern]) -> CompositionTree:
    """Express a one-voice pattern as a tree over ``eps``, ``rest`` and ``-1 1``.

    Each letter becomes its own subtree; letters are then concatenated right
    to left through ``g ∘ [g ∘ [eps, a], g ∘ [b, eps]] = a·b``.
    """
    if isinstance(p, MultiPattern):
        if p.m != 1:
            raise DimensionError(f"decompose works on one voice, got {p.m}")
        p = p.voices[0]
    word = p.word
    if not word:
        return _eps()
    acc = _letter_tree(word[-1])
    for a in reversed(word[:-1]):
        acc = _g(_g(_eps(), _letter_tree(a)), _g(acc, _eps()))
    return acc


# -- text form ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\()|(\))|(\[[^\]]*\])|([^\s()\[\]]+))")


def parse_tree(text: str, library: Mapping[str, MultiPattern] | None = None) -> CompositionTree:
    """Read a tree, resolving names against ``library`` then the generators."""
    names = dict(GENERATORS)
    if library:
        names.update(library)

    def resolve(tok: str, pos: int) -> tuple[MultiPattern, Optional[str]]:
        if tok.startswith("["):
            return parse_multipattern(tok[1:-1]), None
        if tok not in names:
            raise StructureError(f"unknown pattern name {tok!r} at offset {pos}")
        return names[tok], tok

    # each frame: [label, name, children]; the sentinel frame collects the root
    frames: list[list] = [[None, None, []]]
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character at offset {pos}", pos)
        open_, close, literal, word = match.groups()
        start = match.start(match.lastindex)
        pos = match.end()
        if open_:
            nxt = _TOKEN_RE.match(text, pos)
            if nxt is None or not (nxt.group(3) or nxt.group(4)) or nxt.group(4) == "_":
                raise StructureError(f"'(' at offset {start} must be followed by a name")
            label, name = resolve(nxt.group(3) or nxt.group(4), nxt.start(nxt.lastindex))
            frames.append([label, name, []])
            pos = nxt.end()
        elif close:
            if len(frames) == 1:
                raise StructureError(f"unbalanced ')' at offset {start}")
            label, name, children = frames.pop()
            frames[-1][2].append(Node(label, tuple(children), name))
        elif word == "_":
            frames[-1][2].append(LEAF)
        else:
            label, name = resolve(literal or word, start)
            frames[-1][2].append(Node(label, (), name))
    if len(frames) != 1:
        raise StructureError("unbalanced '(': missing ')'")
    roots = frames[0][2]
    if len(roots) != 1:
        raise StructureError(f"expected one tree, found {len(roots)}")
    return roots[0]


def format_tree(t: CompositionTree) -> str:
    parts: list[str] = []
    stack: list[object] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        if isinstance(item, Leaf):
            parts.append("_")
            continue
        label = item.name if item.name is not None else f"[{item.label}]"
        if not item.children:
            parts.append(label)
            continue
        parts.append("(" + label)
        stack.append(")")
        for child in reversed(item.children):
            stack.append(child)
            stack.append(" ")
    return "".join(parts)
