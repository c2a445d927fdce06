"""Symbolic rendering of weighted graphs as derivative formulas.

Three styles: ``text`` (unicode, human-readable), ``latex``, and ``machine``
(a stable parenthesized prefix grammar that round-trips through
:func:`parse_machine_term`).  Multilinear arguments are always printed in
canonical tree order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import (
    DerivativeGraph,
    Regime,
    composite_context,
    enumerate_graphs,
)
from .skeletons import Skeleton
from .trees import DEFAULT_COLOUR, Tree, format_tree, parse_tree
from .weights import WeightedGraph, weigh

STYLES = ("text", "latex", "machine")

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _sup(k: int) -> str:
    return str(k).translate(_SUPERSCRIPTS)


def _d_op(k: int, style: str) -> str:
    if k == 1:
        return "D"
    return f"D^{{{k}}}" if style == "latex" else "D" + _sup(k)


def _prime(k: int, style: str) -> str:
    if style == "latex":
        return "'" * k if k <= 3 else f"^{{({k})}}"
    marks = {1: "′", 2: "″", 3: "‴"}
    return marks[k] if k <= 3 else "⁽" + _sup(k) + "⁾"


def _joiners(style: str) -> tuple[str, str, str]:
    if style == "latex":
        return r"\langle ", r"\rangle ", r"\cdot "
    return "⟨", "⟩", "·"


# ---------------------------------------------------------------------------
# Per-regime term bodies (unsigned, weight-free).


def _ode_body(t: Tree, style: str) -> str:
    lbr, rbr, dot = _joiners(style)
    k = t.degree
    if k == 0:
        return "f(y)"
    if k == 1:
        return _ode_body(t.children[0], style) + dot + "Df(y)"
    args = ",".join(_ode_body(c, style) for c in t.children)
    return lbr + args + rbr + dot + _d_op(k, style) + "f(y)"


def _inverse_body(t: Tree, style: str) -> str:
    lbr, rbr, dot = _joiners(style)
    if t.is_leaf:
        return "Dg(y)"
    args = ",".join(_inverse_body(c, style) for c in t.children)
    return lbr + args + rbr + dot + _d_op(t.degree, style) + "f(g(y))" + dot + "Dg(y)"


def _composite_body(t: Tree, style: str, ctx) -> str:
    lbr, rbr, dot = _joiners(style)
    if t.colour.index in ctx.variable_colours:
        return ""  # increments are implicit in the printed multilinear form
    k = t.degree
    node = ctx.node_by_colour[t.colour.index]
    head = node.name + _prime(k, style) + "(" + ctx.point[t.colour.index] + ")"
    parts = [p for p in (_composite_body(c, style, ctx) for c in t.children) if p]
    if not parts:
        return head
    if k == 1:
        return head + dot + parts[0]
    return lbr + ",".join(parts) + rbr + dot + head


def render_term(wg: WeightedGraph, style: str = "text") -> str:
    """Render one weighted graph, without its sign and weight prefix."""
    if style not in STYLES:
        raise ValueError(f"unsupported style {style!r}")
    if style == "machine":
        return _machine_term(wg)
    graph = wg.graph
    if graph.regime is Regime.ODE:
        return _ode_body(graph.tree, style)
    if graph.regime is Regime.INVERSE:
        return _inverse_body(graph.tree, style)
    ctx = composite_context(graph.skeleton)
    return _composite_body(graph.tree, style, ctx)


# ---------------------------------------------------------------------------
# Whole-derivative formulas.


@dataclass(frozen=True)
class FormulaTerm:
    sign: int
    weight: Fraction
    text: str
    graph: WeightedGraph | None = None  # None only for closed forms


@dataclass(frozen=True)
class Formula:
    regime: Regime
    order: int
    style: str
    terms: tuple[FormulaTerm, ...]

    def __str__(self) -> str:
        if self.style == "machine":
            return "\n".join(term.text for term in self.terms)
        pieces: list[str] = []
        for i, term in enumerate(self.terms):
            body = term.text if term.weight == 1 else f"{term.weight}{term.text}"
            if i == 0:
                pieces.append("-" + body if term.sign < 0 else body)
            else:
                pieces.append((" - " if term.sign < 0 else " + ") + body)
        return "".join(pieces)


_INVERSE_ORDER_1 = {
    "text": "(Df(g(y)))⁻¹",
    "latex": "(Df(g(y)))^{-1}",
    "machine": "(term (regime inverse) (order 1) (closed-form))",
}


def render_derivative(
    regime: Regime,
    n: int,
    style: str = "text",
    skeleton: Skeleton | None = None,
) -> Formula:
    """Enumerate, weigh and render the full order-n derivative."""
    if style not in STYLES:
        raise ValueError(f"unsupported style {style!r}")
    if regime is Regime.INVERSE and n == 1:
        term = FormulaTerm(1, Fraction(1), _INVERSE_ORDER_1[style])
        return Formula(regime, 1, style, (term,))
    terms = []
    for graph in enumerate_graphs(regime, n, skeleton):
        wg = weigh(graph)
        terms.append(FormulaTerm(wg.sign, wg.weight, render_term(wg, style), wg))
    return Formula(regime, n, style, tuple(terms))


# ---------------------------------------------------------------------------
# Machine grammar: (term (regime R) (sign S) (weight W) (tree T))


def _machine_term(wg: WeightedGraph) -> str:
    return (
        f"(term (regime {wg.graph.regime.value}) (sign {wg.sign}) "
        f"(weight {wg.weight}) (tree {format_tree(wg.graph.tree)}))"
    )


_MACHINE = re.compile(
    r"\(term \(regime (?P<regime>\w+)\) \(sign (?P<sign>[+-]?\d+)\) "
    r"\(weight (?P<weight>-?\d+(?:/\d+)?)\) \(tree (?P<tree>[^)\s]+)\)\)"
)


def parse_machine_term(text: str, skeleton: Skeleton | None = None) -> WeightedGraph:
    """Invert :func:`render_term` for the machine style.

    Composite terms need the original skeleton to resolve colour names.  The
    embedded sign and weight are recomputed and verified.
    """
    m = _MACHINE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a machine-style term: {text!r}")
    regime = Regime(m.group("regime"))
    if regime is Regime.COMPOSITE:
        if skeleton is None:
            raise ValueError("composite terms need their skeleton to be parsed")
        palette = composite_context(skeleton).palette
    else:
        palette = {DEFAULT_COLOUR.name: DEFAULT_COLOUR}
        skeleton = None
    tree = parse_tree(m.group("tree"), palette)
    wg = weigh(DerivativeGraph(tree, regime, skeleton))
    if wg.sign != int(m.group("sign")) or wg.weight != Fraction(m.group("weight")):
        raise ValueError("embedded sign/weight disagree with the graph")
    return wg
