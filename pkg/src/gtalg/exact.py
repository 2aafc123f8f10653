"""Exact scalars and truncated univariate power series.

Scalars are :class:`fractions.Fraction` everywhere. A :class:`TruncatedSeries`
holds the coefficients of exponents ``0..order`` of a formal series in one
variable; coefficients past ``order`` are unknown and never reported.
A series flagged ``polynomial`` is known exactly (all higher coefficients
vanish), so it does not limit the order of results it takes part in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "format_fraction",
    "parse_fraction",
    "bernoulli",
    "TruncatedSeries",
    "s_series",
    "h_series",
    "f_n_polynomial",
    "f_n_closed_form",
    "geometric_sum_identity",
    "obstruction_series",
]


def format_fraction(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2.

    Uses sum_{k=0}^{n} C(n+1, k) B_k = 0. Only even indices enter the
    series s(z), where B_2 = 1/6 and B_4 = -1/30.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    total = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -total / (n + 1)


@dataclass(frozen=True)
class TruncatedSeries:
    var: str
    order: int
    coeffs: tuple
    polynomial: bool = False

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) > self.order + 1:
            extra = cs[self.order + 1:]
            if self.polynomial and any(extra):
                raise ValueError("polynomial has terms beyond its stated order")
            cs = cs[: self.order + 1]
        cs = cs + (Fraction(0),) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    # construction -----------------------------------------------------
    @classmethod
    def poly(cls, var: str, coeffs: Sequence) -> "TruncatedSeries":
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        return cls(var, len(cs) - 1, tuple(cs), polynomial=True)

    @classmethod
    def constant(cls, var: str, value) -> "TruncatedSeries":
        return cls.poly(var, [value])

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(n)
        if n > self.order:
            if self.polynomial:
                return Fraction(0)
            raise IndexError(f"coefficient {n} is beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if self.polynomial and order >= self.order:
            return self
        order = min(order, self.order) if not self.polynomial else order
        return TruncatedSeries(self.var, order, tuple(self[n] for n in range(order + 1)))

    def rename(self, var: str) -> "TruncatedSeries":
        return TruncatedSeries(var, self.order, self.coeffs, self.polynomial)

    # arithmetic -------------------------------------------------------
    def _check(self, other: "TruncatedSeries") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def _result_order(self, other: "TruncatedSeries", poly_order: int) -> tuple:
        if self.polynomial and other.polynomial:
            return poly_order, True
        if self.polynomial:
            return other.order, False
        if other.polynomial:
            return self.order, False
        return min(self.order, other.order), False

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.var, other)
        self._check(other)
        order, poly = self._result_order(other, max(self.order, other.order))
        cs = [self[n] + other[n] for n in range(order + 1)]
        return TruncatedSeries.poly(self.var, cs) if poly else TruncatedSeries(self.var, order, cs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.var, self.order, tuple(-c for c in self.coeffs), self.polynomial)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.var, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.var, self.order, tuple(c * a for a in self.coeffs), self.polynomial)
        self._check(other)
        order, poly = self._result_order(other, self.order + other.order)
        cs = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs):
            if i > order or not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > order:
                    break
                cs[i + j] += a * b
        return TruncatedSeries.poly(self.var, cs) if poly else TruncatedSeries(self.var, order, cs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = TruncatedSeries.constant(self.var, 1)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs an invertible constant term."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        order = self.order
        inv = [Fraction(0)] * (order + 1)
        inv[0] = 1 / a0
        for n in range(1, order + 1):
            acc = sum(self[k] * inv[n - k] for k in range(1, n + 1))
            inv[n] = -acc / a0
        return TruncatedSeries(self.var, order, inv)

    def substitute(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Composition self(inner), Horner style, truncated consistently."""
        if inner.coeffs[0] != 0 and not self.polynomial:
            raise ValueError("substituting a series with nonzero constant term into an infinite series")
        if self.polynomial and inner.polynomial:
            order, poly = self.order * inner.order, True
        elif self.polynomial:
            order, poly = inner.order, False
        elif inner.polynomial:
            order, poly = self.order, False
        else:
            order, poly = min(self.order, inner.order), False
        if not poly:
            inner = inner.truncate(order) if not inner.polynomial else inner
        acc = TruncatedSeries.poly(inner.var, [0]) if poly else TruncatedSeries(inner.var, order, ())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
            if not poly:
                acc = acc.truncate(order)
        return acc if poly else TruncatedSeries(inner.var, order, acc.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {"var": self.var, "order": self.order, "coeffs": [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "TruncatedSeries":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["var"], int(data["order"]), tuple(parse_fraction(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        parts = []
        v = self.var if self.var.isalnum() else f"({self.var})"
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else (v if n == 1 else f"{v}^{n}")
            if mono and abs(c) == 1:
                parts.append(("-" if c < 0 else "+") + mono)
            else:
                parts.append(f"{'+' if c >= 0 else '-'}{abs(c)}{mono}")
        body = " ".join(parts).lstrip("+") or "0"
        return body if self.polynomial else f"{body} + O({v}^{self.order + 1})"


def s_series(order: int) -> TruncatedSeries:
    """Coefficients of s(z) = 1/(exp(-z) - 1) + 1/z up to z^order.

    Computed by inverting (exp(-z) - 1)/z, independently of :func:`bernoulli`.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    q = TruncatedSeries("z", order + 1, [Fraction((-1) ** (n + 1), factorial(n + 1)) for n in range(order + 2)])
    inv = q.inverse()
    return TruncatedSeries("z", order, inv.coeffs[1:])


def h_series(order: int) -> TruncatedSeries:
    """h(x) = sum (-1)^n/(n+2) (x-1)^n, as a series in the variable x-1."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return TruncatedSeries("x-1", order, [Fraction((-1) ** n, n + 2) for n in range(order + 1)])


def f_n_polynomial(n: int) -> TruncatedSeries:
    """sum_k C(n,k)(-1)^(n-k) sum_{j<k} (k-j) x^j, expanded exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cs = [Fraction(0)] * n
    for k in range(n + 1):
        b = comb(n, k) * (-1) ** (n - k)
        for j in range(k):
            cs[j] += b * (k - j)
    return TruncatedSeries.poly("x", cs)


def f_n_closed_form(n: int) -> TruncatedSeries:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return TruncatedSeries.poly("x", [1])
    x = TruncatedSeries.poly("x", [0, 1])
    return x * (x - 1) ** (n - 2)


def geometric_sum_identity(n: int) -> tuple:
    """Both sides of sum_k C(n,k)(-1)^(n-k)(x^k - 1)/(x - 1) = (x - 1)^(n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cs = [Fraction(0)] * n
    for k in range(n + 1):
        b = comb(n, k) * (-1) ** (n - k)
        for j in range(k):
            cs[j] += b
    x = TruncatedSeries.poly("x", [0, 1])
    return TruncatedSeries.poly("x", cs), (x - 1) ** (n - 1)


def obstruction_series(order: int) -> TruncatedSeries:
    """t + (t^2 - 1) h(t) under t -> 1 + s."""
    if order < 0:
        raise ValueError("order must be >= 0")
    t = TruncatedSeries.poly("s", [1, 1])
    h = h_series(order).rename("s")
    return (t + (t * t - 1) * h).truncate(order)


def series_from_coeffs(var: str, coeffs: Iterable, order: int | None = None) -> TruncatedSeries:
    cs = list(coeffs)
    return TruncatedSeries(var, len(cs) - 1 if order is None else order, cs)
