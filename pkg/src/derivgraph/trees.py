"""Canonical coloured rooted trees and their structural numbers.

A virtual graph is an isomorphism class of decorated rooted trees.  We keep
exactly one representative per class: children are stored sorted under the
total order :func:`compare_trees`, so structural equality of canonical trees
coincides with isomorphism of the classes they represent.  Leaves are the
entrances of a graph, the root is its outlet.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from math import factorial


@dataclass(frozen=True)
class Colour:
    """A rank in a totally ordered palette of vertex kinds."""

    index: int
    name: str

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("colour index must be non-negative")


DEFAULT_COLOUR = Colour(0, "*")


@dataclass(frozen=True)
class Tree:
    """Coloured rooted tree.  Canonical iff every child tuple is sorted."""

    colour: Colour = DEFAULT_COLOUR
    children: tuple["Tree", ...] = ()

    @property
    def degree(self) -> int:
        return len(self.children)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __str__(self) -> str:
        return format_tree(self)


LEAF = Tree()


@cache
def _key(t: Tree) -> tuple:
    # Lexicographic: colour rank first, then degree, then children left to
    # right (children of a canonical tree are already sorted).
    return (t.colour.index, len(t.children), tuple(_key(c) for c in t.children))


def compare_trees(a: Tree, b: Tree) -> int:
    """Total order on trees: -1, 0 or +1.  Zero iff isomorphic."""
    ka, kb = _key(a), _key(b)
    return (ka > kb) - (ka < kb)


def sort_key(t: Tree) -> tuple:
    """Sort key realising the :func:`compare_trees` order."""
    return _key(t)


def canonicalize(raw: Tree) -> Tree:
    """Sort children recursively; idempotent, isomorphism-invariant."""
    children = sorted((canonicalize(c) for c in raw.children), key=_key)
    return Tree(raw.colour, tuple(children))


@cache
def cardinality(t: Tree) -> int:
    """Number of vertices."""
    return 1 + sum(cardinality(c) for c in t.children)


@cache
def entrance_count(t: Tree) -> int:
    """Number of leaves; a lone vertex is its own entrance."""
    if not t.children:
        return 1
    return sum(entrance_count(c) for c in t.children)


@cache
def symmetry_number(t: Tree) -> int:
    """Order of the colour-preserving automorphism group of a canonical tree.

    Children are grouped into isomorphism classes with multiplicities
    m_1..m_r; each vertex contributes prod(m_i!), on top of the children's
    own symmetry numbers.  When all siblings are isomorphic everywhere this
    reduces to the product of degree factorials.
    """
    s = 1
    cs = t.children
    i = 0
    while i < len(cs):
        j = i
        while j < len(cs) and compare_trees(cs[i], cs[j]) == 0:
            j += 1
        s *= factorial(j - i)
        i = j
    for c in cs:
        s *= symmetry_number(c)
    return s


@cache
def complexity_number(t: Tree) -> int:
    """Product over all vertices of the cardinalities of their child subtrees."""
    tau = 1
    for c in t.children:
        tau *= cardinality(c) * complexity_number(c)
    return tau


# ---------------------------------------------------------------------------
# Textual notation: name{child,child,...}; a leaf may be written name{} or,
# for the single default colour, just "*".


class TreeSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def format_tree(t: Tree) -> str:
    inner = ",".join(format_tree(c) for c in t.children)
    return f"{t.colour.name}{{{inner}}}"


def make_palette(*names: str) -> dict[str, Colour]:
    """Palette with the given colour names ranked in declaration order."""
    return {name: Colour(i, name) for i, name in enumerate(names)}


_NAME = re.compile(r"\*|[A-Za-z_][A-Za-z0-9_.]*")


def parse_tree(text: str, palette: dict[str, Colour] | None = None) -> Tree:
    """Parse the textual notation.

    With ``palette=None`` colours are assigned ranks by first appearance
    ("*" alone yields the default colour).  The result is returned exactly
    as written; apply :func:`canonicalize` if canonical order is needed.
    """
    auto = palette is None
    pal: dict[str, Colour] = {} if auto else dict(palette)

    def colour_for(name: str, pos: int) -> Colour:
        if name not in pal:
            if not auto:
                raise TreeSyntaxError(f"unknown colour {name!r}", pos)
            pal[name] = Colour(len(pal), name)
        return pal[name]

    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def node() -> Tree:
        nonlocal pos
        skip_ws()
        m = _NAME.match(text, pos)
        if m is None:
            raise TreeSyntaxError("expected a colour name", pos)
        colour = colour_for(m.group(), pos)
        pos = m.end()
        skip_ws()
        children: list[Tree] = []
        if pos < len(text) and text[pos] == "{":
            pos += 1
            skip_ws()
            if pos < len(text) and text[pos] == "}":
                pos += 1
            else:
                while True:
                    children.append(node())
                    skip_ws()
                    if pos < len(text) and text[pos] == ",":
                        pos += 1
                        continue
                    if pos < len(text) and text[pos] == "}":
                        pos += 1
                        break
                    raise TreeSyntaxError("expected ',' or '}'", pos)
        return Tree(colour, tuple(children))

    t = node()
    skip_ws()
    if pos != len(text):
        raise TreeSyntaxError("trailing input after tree", pos)
    return t


# ---------------------------------------------------------------------------
# Structured (JSON-ready) serialization.


def tree_to_dict(t: Tree) -> dict:
    return {
        "colour": {"index": t.colour.index, "name": t.colour.name},
        "children": [tree_to_dict(c) for c in t.children],
    }


def tree_from_dict(d: dict) -> Tree:
    colour = Colour(d["colour"]["index"], d["colour"]["name"])
    return Tree(colour, tuple(tree_from_dict(c) for c in d["children"]))
