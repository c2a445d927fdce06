"""Truncated power series with exact rational coefficients.

This is the brute-force side of every cross-check: composition, reversion
and ODE flow computed directly on coefficients, with tolerance zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

Rat = int | Fraction


class Jet:
    """Univariate series c_0 + c_1 x + ... + c_N x^N, truncated at order N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a jet needs at least the constant coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Jet) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Jet({[str(c) for c in self.coeffs]})"

    def _coerce(self, other: "Jet | Rat") -> "Jet":
        if isinstance(other, Jet):
            return other
        return Jet([other], order=self.order)

    def __add__(self, other: "Jet | Rat") -> "Jet":
        o = self._coerce(other)
        n = min(self.order, o.order)
        return Jet([self.coeffs[k] + o.coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet([-c for c in self.coeffs])

    def __sub__(self, other: "Jet | Rat") -> "Jet":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rat) -> "Jet":
        return (-self) + other

    def __mul__(self, other: "Jet | Rat") -> "Jet":
        if not isinstance(other, Jet):
            return Jet([c * Fraction(other) for c in self.coeffs])
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return Jet(out)

    __rmul__ = __mul__

    def truncated(self, order: int) -> "Jet":
        return Jet(self.coeffs, order=order)

    def derivative_at_zero(self, k: int) -> Fraction:
        """k-th derivative at the expansion point: k! * c_k."""
        f = 1
        for i in range(2, k + 1):
            f *= i
        return self.coeffs[k] * f


def identity_jet(order: int) -> Jet:
    return Jet([0, 1], order=order)


def jet_compose(outer: Jet, inner: Jet) -> Jet:
    """Taylor coefficients of outer(inner(x)); inner must have c_0 = 0."""
    if inner[0] != 0:
        raise ValueError("inner jet must have zero constant term")
    n = min(outer.order, inner.order)
    result = Jet([outer[0]], order=n)
    power = Jet([1], order=n)
    for k in range(1, n + 1):
        power = power * inner
        result = result + power * outer[k]
    return result


def jet_reverse(f: Jet) -> Jet:
    """Compositional inverse g with f(g(x)) = x to the truncation order.

    Requires c_0 = 0 and c_1 != 0.  Solved coefficient by coefficient: the
    k-th coefficient of f(g) is linear in g_k with factor f_1.
    """
    if f[0] != 0:
        raise ValueError("series must have zero constant term")
    if f[1] == 0:
        raise ValueError("series with zero linear term has no compositional inverse")
    n = f.order
    g = [Fraction(0), 1 / Fraction(f[1])] + [Fraction(0)] * (n - 1)
    for k in range(2, n + 1):
        residue = jet_compose(f.truncated(k), Jet(g[: k + 1]))[k]
        g[k] = -residue / f[1]
    return Jet(g)


def jet_ode_flow(f: Jet, y0: Rat, order: int) -> Jet:
    """Taylor jet in t of the solution of y' = f(y), y(0) = y0.

    ``f`` is the field's jet in (y - y0) around y0.  Each pass through the
    recurrence y_{k+1} = [f(y - y0)]_k / (k+1) gains one exact order.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    y = [Fraction(y0)] + [Fraction(0)] * order
    for k in range(order):
        shifted = Jet([y[0] - Fraction(y0)] + y[1 : k + 1], order=k)
        rate = jet_compose(f.truncated(k), shifted)
        y[k + 1] = rate[k] / (k + 1)
    return Jet(y)


class BivariateJet:
    """Truncated bivariate series: coefficients c_{ij} with i + j <= N."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[tuple[int, int], Rat], order: int):
        self.order = order
        self.coeffs = {
            (i, j): Fraction(c)
            for (i, j), c in coeffs.items()
            if i + j <= order and c != 0
        }

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.coeffs.get(ij, Fraction(0))

    def partial_at_zero(self, a: int, b: int) -> Fraction:
        """Mixed partial d^{a+b}F / du^a dv^b at the expansion point."""
        f = 1
        for i in range(2, a + 1):
            f *= i
        for i in range(2, b + 1):
            f *= i
        return self[a, b] * f


def bivariate_compose(outer: BivariateJet, u: Jet, v: Jet) -> Jet:
    """Jet of x -> F(u(x), v(x)); u and v must have zero constant terms."""
    if u[0] != 0 or v[0] != 0:
        raise ValueError("inner jets must have zero constant terms")
    n = min(outer.order, u.order, v.order)
    u_pows = [Jet([1], order=n)]
    v_pows = [Jet([1], order=n)]
    for _ in range(n):
        u_pows.append(u_pows[-1] * u)
        v_pows.append(v_pows[-1] * v)
    result = Jet([0], order=n)
    for (i, j), c in outer.coeffs.items():
        if i + j <= n:
            result = result + u_pows[i] * v_pows[j] * c
    return result
