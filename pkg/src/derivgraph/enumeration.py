"""Duplicate-free generation of derivative graphs for the three regimes.

Composite graphs are grown inductively: differentiating a function vertex
raises its derivative order by one and attaches a fresh first-derivative
chain descending to one base variable, after which the frontier is
canonicalized and deduplicated.  ODE trees grow by attaching one vertex at
every position; inverse trees are assembled from multisets of subtrees so
that every internal vertex keeps degree >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cache, lru_cache

from .skeletons import Skeleton, base_variables
from .trees import LEAF, Colour, Tree, canonicalize, entrance_count, sort_key


class Regime(str, Enum):
    COMPOSITE = "composite"
    INVERSE = "inverse"
    ODE = "ode"


@dataclass(frozen=True)
class DerivativeGraph:
    """A canonical virtual graph tagged with its regime.

    Composite graphs carry their skeleton; vertex colours name the skeleton
    position (function) or base variable (entrance) they stand for, and a
    vertex's derivative order is its degree.  Only differentiated branches
    are materialized: evaluation points are recovered from the skeleton.
    """

    tree: Tree
    regime: Regime
    skeleton: Skeleton | None = None

    @property
    def order(self) -> int:
        from .trees import cardinality

        if self.regime is Regime.ODE:
            return cardinality(self.tree)
        return entrance_count(self.tree)


# ---------------------------------------------------------------------------
# Composite regime.


class CompositeContext:
    """Colour palette and differentiation chains derived from a skeleton.

    Base variables get the lowest colour ranks in order of first appearance,
    followed by function positions in preorder.  A function name occurring at
    several positions is disambiguated with an ordinal suffix (f, f.2, ...).
    """

    def __init__(self, skeleton: Skeleton):
        if skeleton.is_variable:
            raise ValueError("skeleton root must be a function")
        self.skeleton = skeleton
        self.palette: dict[str, Colour] = {}
        for name in base_variables(skeleton):
            self.palette[name] = Colour(len(self.palette), name)
        self.variable_colours = frozenset(c.index for c in self.palette.values())

        self._node_colour: dict[int, Colour] = {}  # id(node) -> colour
        self.node_by_colour: dict[int, Skeleton] = {}
        name_count: dict[str, int] = {}

        def assign(node: Skeleton) -> None:
            if node.is_variable:
                return
            name_count[node.name] = name_count.get(node.name, 0) + 1
            label = node.name
            if name_count[node.name] > 1:
                label = f"{node.name}.{name_count[node.name]}"
            colour = Colour(len(self.palette), label)
            self.palette[label] = colour
            self._node_colour[id(node)] = colour
            self.node_by_colour[colour.index] = node
            for c in node.children:
                assign(c)

        assign(skeleton)
        self.root_colour = self._node_colour[id(skeleton)]

        # Differentiation chains per function colour: one branch per path
        # from an argument down to a base variable.
        self.branches: dict[int, tuple[Tree, ...]] = {}
        for colour_index, node in self.node_by_colour.items():
            out: list[Tree] = []
            for child in node.children:
                out.extend(self._chains(child))
            self.branches[colour_index] = tuple(out)

        # Evaluation-point expressions (the undifferentiated sub-skeletons).
        self.point: dict[int, str] = {
            ci: ",".join(str(c) for c in node.children)
            for ci, node in self.node_by_colour.items()
        }

        # Root colour of a branch descending through each argument slot.
        self.slot_root: dict[int, tuple[int, ...]] = {}
        for ci, node in self.node_by_colour.items():
            roots = []
            for child in node.children:
                if child.is_variable:
                    roots.append(self.palette[child.name].index)
                else:
                    roots.append(self._node_colour[id(child)].index)
            self.slot_root[ci] = tuple(roots)

    def _chains(self, node: Skeleton) -> list[Tree]:
        if node.is_variable:
            return [Tree(self.palette[node.name])]
        colour = self._node_colour[id(node)]
        out = []
        for child in node.children:
            for sub in self._chains(child):
                out.append(Tree(colour, (sub,)))
        return out

    def colour_of(self, name: str) -> Colour:
        return self.palette[name]

    def node_colour(self, node: Skeleton) -> Colour:
        """Colour of one skeleton position (identity, not equality, based)."""
        return self._node_colour[id(node)]


@lru_cache(maxsize=None)
def composite_context(skeleton: Skeleton) -> CompositeContext:
    return CompositeContext(skeleton)


def _expansions(t: Tree, branches: dict[int, tuple[Tree, ...]]):
    """All single-differentiation successors of one derivative graph."""
    for b in branches.get(t.colour.index, ()):
        yield Tree(t.colour, t.children + (b,))
    for i, c in enumerate(t.children):
        for grown in _expansions(c, branches):
            yield Tree(t.colour, t.children[:i] + (grown,) + t.children[i + 1 :])


def enumerate_composite(skeleton: Skeleton, n: int) -> list[DerivativeGraph]:
    """All order-n derivative graphs of the joint mapping, canonical, sorted.

    Order counts entrances.  n must be >= 1: the order-0 "derivative" is the
    skeleton itself and is not a graph of this family.
    """
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    ctx = composite_context(skeleton)
    frontier = {
        canonicalize(Tree(ctx.root_colour, (b,)))
        for b in ctx.branches[ctx.root_colour.index]
    }
    if not frontier:
        return []  # nullary skeleton: constant, no derivatives
    for _ in range(n - 1):
        nxt: set[Tree] = set()
        for t in frontier:
            for grown in _expansions(t, ctx.branches):
                nxt.add(canonicalize(grown))
        frontier = nxt
    trees = sorted(frontier, key=sort_key)
    return [DerivativeGraph(t, Regime.COMPOSITE, skeleton) for t in trees]


# ---------------------------------------------------------------------------
# ODE regime: y' = f(y).  Order n = vertex count; a vertex of degree k
# carries the k-th derivative of the field.


def _attachments(t: Tree):
    yield Tree(t.colour, t.children + (LEAF,))
    for i, c in enumerate(t.children):
        for grown in _attachments(c):
            yield Tree(t.colour, t.children[:i] + (grown,) + t.children[i + 1 :])


def enumerate_ode(n: int) -> list[DerivativeGraph]:
    """All rooted trees with n vertices, isomorph-free, in natural order."""
    if n < 1:
        raise ValueError("order must be >= 1")
    frontier = {LEAF}
    for _ in range(n - 1):
        frontier = {canonicalize(g) for t in frontier for g in _attachments(t)}
    return [DerivativeGraph(t, Regime.ODE) for t in sorted(frontier, key=sort_key)]


# ---------------------------------------------------------------------------
# Inverse regime: x = g(y) for y = f(x).  Order n = entrance count; internal
# vertices have degree >= 2 (unary first-derivative wedges cancel against Dg
# and are never drawn) and a degree-k vertex carries the k-th derivative of f.


@cache
def _inverse_trees(n: int) -> tuple[Tree, ...]:
    # All trees with n entrances whose internal vertices have degree >= 2;
    # for n == 1 that is the bare entrance.
    if n == 1:
        return (LEAF,)
    candidates: list[tuple[Tree, int]] = []
    for k in range(1, n):
        for t in _inverse_trees(k):
            candidates.append((t, k))

    results: list[Tree] = []

    def choose(start: int, remaining: int, picked: list[Tree]) -> None:
        if remaining == 0:
            if len(picked) >= 2:
                results.append(Tree(children=tuple(picked)))
            return
        for i in range(start, len(candidates)):
            t, leaves = candidates[i]
            if leaves <= remaining:
                picked.append(t)
                choose(i, remaining - leaves, picked)
                picked.pop()

    # candidates are generated in a fixed order; non-decreasing picks give
    # each multiset exactly once, and sorting by leaf count keeps children
    # tuples canonical only after a final canonicalize.
    choose(0, n, [])
    return tuple(sorted({canonicalize(t) for t in results}, key=sort_key))


def enumerate_inverse(n: int) -> list[DerivativeGraph]:
    """All order-n inverse-regime trees; n = 1 is the closed form, rejected."""
    if n < 2:
        raise ValueError("inverse regime needs order >= 2 (order 1 is the closed form)")
    return [DerivativeGraph(t, Regime.INVERSE) for t in _inverse_trees(n)]


def enumerate_graphs(
    regime: Regime, n: int, skeleton: Skeleton | None = None
) -> list[DerivativeGraph]:
    if regime is Regime.COMPOSITE:
        if skeleton is None:
            raise ValueError("composite regime requires a skeleton")
        return enumerate_composite(skeleton, n)
    if regime is Regime.ODE:
        return enumerate_ode(n)
    return enumerate_inverse(n)
