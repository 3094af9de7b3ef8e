"""Truncated power series in x with coefficients in the stuffle algebra."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import Combination, linear_combine, stuffle


class TruncatedSeries:
    """Coefficients for degrees ``0..order``; everything above is discarded."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, order: int, coeffs: Sequence[Combination] | None = None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = list(coeffs or [])
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients given for order {order}")
        coeffs += [Combination.zero()] * (order + 1 - len(coeffs))
        self.order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [Combination.one()])

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, n: int) -> Combination:
        return series_coefficient(self, n)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self._coeffs))

    def __add__(self, other):
        _check_orders(self, other)
        return TruncatedSeries(self.order, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other):
        _check_orders(self, other)
        return TruncatedSeries(self.order, [a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        return TruncatedSeries(self.order, [-a for a in self._coeffs])

    def scale(self, a) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [c.scale(a) for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def is_homogeneous(self) -> bool:
        """Degree-n coefficient has weight n for every n."""
        return all(c.is_homogeneous(n) for n, c in enumerate(self._coeffs))

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        return f"TruncatedSeries({self.order}, {format_series(self)!r})"


def _check_orders(f: TruncatedSeries, g: TruncatedSeries) -> None:
    if f.order != g.order:
        raise ValueError(f"series orders differ: {f.order} != {g.order}")


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product with stuffle on the coefficients."""
    _check_orders(f, g)
    N = f.order
    out = []
    for n in range(N + 1):
        acc = Combination.zero()
        for i in range(n + 1):
            a, b = f._coeffs[i], g._coeffs[n - i]
            if a and b:
                acc = linear_combine(1, acc, 1, stuffle(a, b))
        out.append(acc)
    return TruncatedSeries(N, out)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """``sum f^n / n!`` for ``f`` with zero constant term.

    Each term is the previous one times ``f / n``; it stops once the running
    power has been pushed past the truncation order.
    """
    if f._coeffs[0]:
        raise ValueError("exp needs a series with zero constant term")
    N = f.order
    result = TruncatedSeries.one(N)
    term = result
    for n in range(1, N + 1):
        term = series_mul(term, f).scale(Fraction(1, n))
        if all(c.is_zero() for c in term._coeffs):
            break
        result = result + term
    return result


def series_flip(f: TruncatedSeries) -> TruncatedSeries:
    """Substitute ``x -> -x``."""
    return TruncatedSeries(f.order, [c if n % 2 == 0 else -c for n, c in enumerate(f._coeffs)])


def series_coefficient(f: TruncatedSeries, n: int) -> Combination:
    if not 0 <= n <= f.order:
        raise IndexError(f"degree {n} outside 0..{f.order}")
    return f._coeffs[n]


def format_series(f: TruncatedSeries) -> str:
    parts = []
    for n, c in enumerate(f._coeffs):
        if not c:
            continue
        if n == 0:
            parts.append(str(c))
        elif n == 1:
            parts.append(f"({c})x")
        else:
            parts.append(f"({c})x^{n}")
    return " + ".join(parts) if parts else "0"
