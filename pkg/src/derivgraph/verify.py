"""Oracle drivers: emitted graphs versus direct truncated-series computation.

Each trial draws small random rational jets, evaluates the weighted-graph
expansion of the requested derivative and the same derivative computed
directly by jet composition, reversion or ODE flow, and compares the two
exactly.  A mismatch is reported with the per-term breakdown; nothing is
ever compared with a tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .enumeration import Regime, composite_context, enumerate_graphs
from .jets import (
    BivariateJet,
    Jet,
    bivariate_compose,
    identity_jet,
    jet_compose,
    jet_ode_flow,
    jet_reverse,
)
from .skeletons import Skeleton
from .trees import Tree, format_tree
from .weights import weigh


def _random_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if value != 0 or not nonzero:
            return value


def _random_jet(
    rng: random.Random,
    order: int,
    zero_constant: bool = False,
    nonzero_linear: bool = False,
) -> Jet:
    coeffs = [_random_fraction(rng) for _ in range(order + 1)]
    if zero_constant:
        coeffs[0] = Fraction(0)
    if nonzero_linear:
        coeffs[1] = _random_fraction(rng, nonzero=True)
    return Jet(coeffs)


def _random_bivariate(rng: random.Random, order: int) -> BivariateJet:
    coeffs = {
        (i, j): _random_fraction(rng)
        for i in range(order + 1)
        for j in range(order + 1 - i)
        if i + j >= 1
    }
    return BivariateJet(coeffs, order)


@dataclass(frozen=True)
class TermValue:
    tree: str
    sign: int
    weight: Fraction
    value: Fraction


@dataclass(frozen=True)
class Mismatch:
    trial: int
    expected: Fraction
    actual: Fraction
    terms: tuple[TermValue, ...]

    @property
    def discrepancy(self) -> Fraction:
        return self.actual - self.expected


@dataclass(frozen=True)
class Report:
    regime: Regime
    n: int
    trials: int
    seed: int
    graph_count: int
    mismatches: tuple[Mismatch, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_text(self) -> str:
        head = (
            f"verify regime={self.regime.value} order={self.n} "
            f"trials={self.trials} seed={self.seed} graphs={self.graph_count}: "
        )
        if self.passed:
            return head + "PASS"
        lines = [head + f"FAIL ({len(self.mismatches)} mismatching trials)"]
        for m in self.mismatches:
            lines.append(
                f"  trial {m.trial}: expected {m.expected}, got {m.actual} "
                f"(discrepancy {m.discrepancy})"
            )
            worst = max(m.terms, key=lambda tv: abs(tv.value), default=None)
            for tv in m.terms:
                marker = "  <- max " if tv is worst else ""
                lines.append(
                    f"    {tv.sign:+d} {tv.weight} * {tv.tree} = {tv.value}{marker}"
                )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "regime": self.regime.value,
            "order": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "graphs": self.graph_count,
            "passed": self.passed,
            "mismatches": [
                {
                    "trial": m.trial,
                    "expected": str(m.expected),
                    "actual": str(m.actual),
                    "terms": [
                        {
                            "tree": tv.tree,
                            "sign": tv.sign,
                            "weight": str(tv.weight),
                            "value": str(tv.value),
                        }
                        for tv in m.terms
                    ],
                }
                for m in self.mismatches
            ],
        }


def verify(
    regime: Regime,
    n: int,
    trials: int = 20,
    seed: int = 0,
    skeleton: Skeleton | None = None,
) -> Report:
    """Run ``trials`` independent exact comparisons at order ``n``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    if regime is Regime.COMPOSITE:
        runner = _CompositeTrial(skeleton, n)
    elif regime is Regime.ODE:
        runner = _OdeTrial(n)
    else:
        runner = _InverseTrial(n)

    mismatches: list[Mismatch] = []
    for trial in range(trials):
        expected, terms = runner.run(rng)
        actual = sum((tv.sign * tv.weight * tv.value for tv in terms), Fraction(0))
        if actual != expected:
            mismatches.append(Mismatch(trial, expected, actual, tuple(terms)))
    return Report(regime, n, trials, seed, runner.graph_count, tuple(mismatches))


class _OdeTrial:
    def __init__(self, n: int):
        self.weighted = [weigh(g) for g in enumerate_graphs(Regime.ODE, n)]
        self.n = n

    @property
    def graph_count(self) -> int:
        return len(self.weighted)

    def run(self, rng: random.Random) -> tuple[Fraction, list[TermValue]]:
        field_jet = _random_jet(rng, self.n)
        y0 = _random_fraction(rng)
        flow = jet_ode_flow(field_jet, y0, self.n)
        expected = flow[self.n] * factorial(self.n)

        def tree_value(t: Tree) -> Fraction:
            value = field_jet.derivative_at_zero(t.degree)
            for c in t.children:
                value *= tree_value(c)
            return value

        terms = [
            TermValue(format_tree(wg.graph.tree), wg.sign, wg.weight, tree_value(wg.graph.tree))
            for wg in self.weighted
        ]
        return expected, terms


class _InverseTrial:
    def __init__(self, n: int):
        self.n = n
        self.weighted = (
            [] if n == 1 else [weigh(g) for g in enumerate_graphs(Regime.INVERSE, n)]
        )

    @property
    def graph_count(self) -> int:
        return len(self.weighted)

    def run(self, rng: random.Random) -> tuple[Fraction, list[TermValue]]:
        f = _random_jet(rng, self.n, zero_constant=True, nonzero_linear=True)
        g = jet_reverse(f)
        expected = g[self.n] * factorial(self.n)
        dg = 1 / f[1]
        if self.n == 1:
            return expected, [TermValue("(closed form)", 1, Fraction(1), dg)]

        def tree_value(t: Tree) -> Fraction:
            # One Dg per entrance plus one per internal vertex wedge.
            if t.is_leaf:
                return dg
            value = f.derivative_at_zero(t.degree) * dg
            for c in t.children:
                value *= tree_value(c)
            return value

        terms = [
            TermValue(format_tree(wg.graph.tree), wg.sign, wg.weight, tree_value(wg.graph.tree))
            for wg in self.weighted
        ]
        return expected, terms


class _CompositeTrial:
    def __init__(self, skeleton: Skeleton | None, n: int):
        if skeleton is None:
            raise ValueError("composite regime requires a skeleton")
        self.n = n
        self.ctx = composite_context(skeleton)
        for node in self.ctx.node_by_colour.values():
            if node.arity not in (1, 2):
                raise ValueError(
                    "verification supports functions of one or two arguments only"
                )
        for ci, node in self.ctx.node_by_colour.items():
            roots = self.ctx.slot_root[ci]
            if node.arity == 2 and roots[0] == roots[1]:
                raise ValueError(
                    "two-argument functions need distinguishable argument branches"
                )
        self.weighted = [weigh(g) for g in enumerate_graphs(Regime.COMPOSITE, n, skeleton)]

    @property
    def graph_count(self) -> int:
        return len(self.weighted)

    def run(self, rng: random.Random) -> tuple[Fraction, list[TermValue]]:
        uni: dict[int, Jet] = {}
        biv: dict[int, BivariateJet] = {}
        for ci, node in self.ctx.node_by_colour.items():
            if node.arity == 1:
                uni[ci] = _random_jet(rng, self.n, zero_constant=True)
            else:
                biv[ci] = _random_bivariate(rng, self.n)

        def evaluate(node: Skeleton) -> Jet:
            if node.is_variable:
                return identity_jet(self.n)
            ci = self.ctx.node_colour(node).index
            args = [evaluate(c) for c in node.children]
            if node.arity == 1:
                return jet_compose(uni[ci], args[0])
            return bivariate_compose(biv[ci], args[0], args[1])

        direct = evaluate(self.ctx.skeleton)
        expected = direct[self.n] * factorial(self.n)

        def tree_value(t: Tree) -> Fraction:
            ci = t.colour.index
            if ci in self.ctx.variable_colours:
                return Fraction(1)
            node = self.ctx.node_by_colour[ci]
            value = Fraction(1)
            for c in t.children:
                value *= tree_value(c)
            if node.arity == 1:
                return uni[ci].derivative_at_zero(t.degree) * value
            roots = self.ctx.slot_root[ci]
            a = sum(1 for c in t.children if c.colour.index == roots[0])
            b = t.degree - a
            return biv[ci].partial_at_zero(a, b) * value

        terms = [
            TermValue(format_tree(wg.graph.tree), wg.sign, wg.weight, tree_value(wg.graph.tree))
            for wg in self.weighted
        ]
        return expected, terms
