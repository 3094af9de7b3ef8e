"""
Double-precision evaluation of multiple zeta values

    zeta(k_1, ..., k_r) = sum_{0 < m_1 < ... < m_r} m_1^-k_1 ... m_r^-k_r

with a certified truncation bound.

Write T_i(m) for the tail sum over m < m_i < ... < m_r, so zeta = T_1(0).
The tails are computed from the innermost (largest) variable outward,

    T_i(m) = sum_{m < n <= L} n^-k_i T_{i+1}(n) + T_i(L),

and the remainder T_i(L) is replaced by the midpoint of the integral bounds

    C_i (L + r - i + 1)^-a_i  <=  T_i(L)  <=  C_i L^-a_i,

where a_i = (k_i + ... + k_r) - (r - i + 1) >= 1 and C_i = C_{i+1} / a_i.
The half-width of that interval, propagated through the outer sums, is the
returned error bound. L doubles until the bound meets the tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import numpy as np

from .algebra import Combination, Index, format_index, index_stuffle, is_admissible
from .report import Mismatch, Report

_START_TERMS = 1024
_EPS = np.finfo(float).eps


class NumericError(Exception):
    pass


class DivergentSeriesError(NumericError):
    pass


class PrecisionError(NumericError):
    def __init__(self, message, best_bound=math.inf, index=None):
        super().__init__(message)
        self.best_bound = best_bound
        self.index = index


@dataclass(frozen=True)
class NumericConfig:
    # below ~1e-10 the rounding term in the bound dominates and max_terms is hit
    tolerance: float = 1e-6
    max_terms: int = 1 << 23
    max_depth: int = 4

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_terms < 10:
            raise ValueError("max_terms must be at least 10")


@dataclass(frozen=True)
class EvalResult:
    value: float
    error_bound: float

    def __str__(self):
        return f"{self.value:.12g} +/- {self.error_bound:.3g}"


def _tail_exponents(ix: Index) -> Tuple[List[int], List[float]]:
    r = len(ix)
    a = [0] * r
    c = [0.0] * r
    acc_a, acc_c = 0, 1.0
    for i in range(r - 1, -1, -1):
        acc_a = acc_a + ix[i] - 1
        acc_c = acc_c / acc_a
        a[i], c[i] = acc_a, acc_c
    return a, c


def _truncated(ix: Index, L: int) -> Tuple[float, float]:
    """Value and error bound with every variable cut at ``L`` plus midpoint tail corrections."""
    r = len(ix)
    a, c = _tail_exponents(ix)
    n = np.arange(1, L + 1, dtype=float)
    inner = np.ones(L)  # T_{i+1}(n) for n = 1..L
    err = 0.0
    tail_value = 0.0
    for i in range(r - 1, -1, -1):
        k = ix[i]
        hi = c[i] * L ** (-a[i])
        lo = c[i] * (L + r - i) ** (-a[i])
        mid, half = (hi + lo) / 2, (hi - lo) / 2
        terms = inner * n ** (-k)
        # suffix sums over n' > m for m = 0..L-1, accumulated smallest-first
        suffix = np.cumsum(terms[::-1])[::-1]
        if i == 0:
            tail_value = float(suffix[0]) + mid
        else:
            inner = np.empty(L)
            inner[:-1] = suffix[1:] + mid
            inner[-1] = mid
        err = err * float(np.sum(n ** (-k))) + half
    err += 2 * r * L * _EPS * abs(tail_value)
    return float(tail_value), float(err)


def zeta_numeric(ix: Iterable[int], cfg: NumericConfig = NumericConfig(), *, allow_deep: bool = False) -> EvalResult:
    ix = tuple(ix)
    if not ix:
        return EvalResult(1.0, 0.0)
    if not is_admissible(ix):
        raise DivergentSeriesError(f"zeta{format_index(ix)} diverges: last entry must be >= 2")
    if len(ix) > cfg.max_depth and not allow_deep:
        raise NumericError(f"depth {len(ix)} of {format_index(ix)} exceeds max_depth={cfg.max_depth}")
    best = None
    L = min(_START_TERMS, cfg.max_terms)
    while True:
        value, bound = _truncated(ix, L)
        # keep the tightest result so far; a tighter tolerance only extends the sequence
        if best is None or bound <= best.error_bound:
            best = EvalResult(value, bound)
        if best.error_bound <= cfg.tolerance:
            return best
        if L >= cfg.max_terms:
            raise PrecisionError(
                f"zeta{format_index(ix)}: bound {best.error_bound:.3g} above tolerance "
                f"{cfg.tolerance:.3g} at max_terms={cfg.max_terms}",
                best.error_bound,
                ix,
            )
        L = min(2 * L, cfg.max_terms)


class ZetaCache:
    """Write-once cache of evaluations keyed by (index, tolerance)."""

    def __init__(self, cfg: NumericConfig = NumericConfig(), allow_deep: bool = False):
        self.cfg = cfg
        self.allow_deep = allow_deep
        self._values: Dict[Tuple[Index, float], EvalResult] = {}

    def __call__(self, ix: Index) -> EvalResult:
        key = (tuple(ix), self.cfg.tolerance)
        hit = self._values.get(key)
        if hit is None:
            hit = zeta_numeric(ix, self.cfg, allow_deep=self.allow_deep)
            self._values.setdefault(key, hit)
        return hit


def eval_combination(u: Combination, cfg: NumericConfig = NumericConfig(), *, allow_deep: bool = False,
                     zeta=None) -> EvalResult:
    zeta = zeta or (lambda ix: zeta_numeric(ix, cfg, allow_deep=allow_deep))
    value, bound = 0.0, 0.0
    for ix, coeff in u.items():
        try:
            res = zeta(ix)
        except PrecisionError as exc:
            raise PrecisionError(f"while evaluating {format_index(ix)}: {exc}", exc.best_bound, ix) from exc
        except NumericError as exc:
            raise type(exc)(f"while evaluating {format_index(ix)}: {exc}") from exc
        value += float(coeff) * res.value
        bound += abs(float(coeff)) * res.error_bound
    return EvalResult(value, bound)


def check_homomorphism(u: Index, v: Index, cfg: NumericConfig = NumericConfig(), *, allow_deep: bool = False,
                       zeta=None) -> Report:
    """Compare zeta(u * v) with zeta(u) zeta(v).

    Passes when the gap is within the propagated bounds plus the tolerance.
    """
    u, v = tuple(u), tuple(v)
    zeta = zeta or ZetaCache(cfg, allow_deep)
    product = Combination({ix: m for ix, m in index_stuffle(u, v)})
    lhs = eval_combination(product, cfg, zeta=zeta)
    zu, zv = zeta(u), zeta(v)
    rhs = zu.value * zv.value
    rhs_bound = abs(zu.value) * zv.error_bound + abs(zv.value) * zu.error_bound + zu.error_bound * zv.error_bound
    report = Report("homomorphism", sum(u) + sum(v))
    if abs(lhs.value - rhs) > lhs.error_bound + rhs_bound + cfg.tolerance:
        report.mismatches.append(Mismatch(sum(u) + sum(v), u + v, rhs, lhs.value))
    return report


def sine_coefficient(n: int) -> float:
    """Magnitude of the x^(2n) Taylor coefficient of sin(pi x)/(pi x)."""
    return math.pi ** (2 * n) / math.factorial(2 * n + 1)


def check_sine_coefficients(nmax: int, cfg: NumericConfig = NumericConfig(), *, allow_deep: bool = False) -> Report:
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    report = Report("sine", nmax)
    for n in range(1, nmax + 1):
        res = zeta_numeric((2,) * n, cfg, allow_deep=allow_deep)
        expected = sine_coefficient(n)
        if abs(res.value - expected) > res.error_bound + cfg.tolerance:
            report.mismatches.append(Mismatch(2 * n, (2,) * n, expected, res.value))
    return report
