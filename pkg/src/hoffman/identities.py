"""
The specific series attached to the reflection formula and exact checks of
the identities relating them.

``A`` below is ``sum_{n>=2} (-1)^(n-1)/n [n] x^n``. Its ``x -> -x`` flip is
``-sum [m]/m x^m``, the second exponent of the main identity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Tuple

from .algebra import Combination, Index, linear_combine, stuffle
from .report import Mismatch, Report
from .series import TruncatedSeries, series_exp, series_flip, series_mul


def compositions(k: int, min_part: int = 1) -> List[Tuple[int, ...]]:
    """Ordered compositions of ``k`` (at least one part), sorted by length then entries."""
    out = []

    def rec(rest, prefix):
        if rest == 0:
            if prefix:
                out.append(tuple(prefix))
            return
        for p in range(min_part, rest + 1):
            prefix.append(p)
            rec(rest - p, prefix)
            prefix.pop()

    if k > 0:
        rec(k, [])
    out.sort(key=lambda c: (len(c), c))
    return out


def compositions_min2(k: int) -> List[Tuple[int, ...]]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return compositions(k, 2)


@lru_cache(maxsize=None)
def s_poly(k: int) -> Combination:
    """``S(k) = sum (-1)^r prod (k_j - 1)/k_j! [k_1..k_r]`` over compositions with parts >= 2.

    ``S(0)`` is the unit and ``S(1)`` is zero.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Combination.one()
    terms = {}
    for c in compositions_min2(k):
        coeff = Fraction((-1) ** len(c))
        for part in c:
            coeff *= Fraction(part - 1, factorial(part))
        terms[c] = coeff
    return Combination(terms)


def log_gamma_series(N: int) -> TruncatedSeries:
    """The exponent ``A`` truncated at order ``N``."""
    coeffs = [Combination.zero()] * (N + 1)
    for n in range(2, N + 1):
        coeffs[n] = Combination.from_index((n,), Fraction((-1) ** (n - 1), n))
    return TruncatedSeries(N, coeffs)


def rhs_main(N: int) -> TruncatedSeries:
    """``1 + sum_{n>=1} (-1)^n [2,...,2] x^(2n)``."""
    coeffs = [Combination.zero()] * (N + 1)
    coeffs[0] = Combination.one()
    for n in range(1, N // 2 + 1):
        coeffs[2 * n] = Combination.from_index((2,) * n, (-1) ** n)
    return TruncatedSeries(N, coeffs)


def sakata_rhs(N: int) -> TruncatedSeries:
    """``1 + sum_{k>=2} (-1)^k S(k) x^k``."""
    return TruncatedSeries(N, [s_poly(k).scale((-1) ** k) for k in range(N + 1)])


def diff_combinations(expected: Combination, actual: Combination, degree: int) -> List[Mismatch]:
    out = []
    for ix in sorted(set(expected.terms) | set(actual.terms), key=lambda i: (sum(i), len(i), i)):
        e, a = expected.coefficient(ix), actual.coefficient(ix)
        if e != a:
            out.append(Mismatch(degree, ix, e, a))
    return out


def compare_series(name: str, parameter: int, expected: TruncatedSeries, actual: TruncatedSeries) -> Report:
    if expected.order != actual.order:
        raise ValueError("cannot compare series of different orders")
    report = Report(name, parameter)
    for n, (e, a) in enumerate(zip(expected.coeffs, actual.coeffs)):
        if e != a:
            report.mismatches.extend(diff_combinations(e, a, n))
    return report


def _check_order(N):
    if N < 2:
        raise ValueError(f"order must be >= 2, got {N}")


def verify_sakata(N: int) -> Report:
    _check_order(N)
    return compare_series("sakata", N, sakata_rhs(N), series_exp(log_gamma_series(N)))


def main_lhs(N: int) -> TruncatedSeries:
    a = log_gamma_series(N)
    return series_mul(series_exp(a), series_exp(series_flip(a)))


def verify_main(N: int) -> Report:
    _check_order(N)
    return compare_series("main", N, rhs_main(N), main_lhs(N))


def verify_reduction(N: int) -> Report:
    """Main identity rebuilt from the S(k) series and its flip.

    ``exp(flip A) = flip(exp A)``, so this product is the main left side
    rewritten through Sakata's series; it must equal the same right side.
    """
    _check_order(N)
    s = sakata_rhs(N)
    return compare_series("reduction", N, rhs_main(N), series_mul(s, series_flip(s)))


def alternating_convolution(n: int) -> Combination:
    """``sum_{k=0}^{n} (-1)^k S(k) * S(n-k)``."""
    acc = Combination.zero()
    for k in range(n + 1):
        a, b = s_poly(k), s_poly(n - k)
        if a and b:
            acc = linear_combine(1, acc, (-1) ** k, stuffle(a, b))
    return acc


def eq2_lhs(n: int) -> Combination:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return alternating_convolution(2 * n)


def twos(n: int) -> Combination:
    return Combination.from_index((2,) * n, (-1) ** n)


def verify_eq2(n: int) -> Report:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    report = Report("eq2", n)
    report.mismatches.extend(diff_combinations(twos(n), eq2_lhs(n), 2 * n))
    return report


def verify_odd_vanishing(n: int) -> Report:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    report = Report("odd", n)
    report.mismatches.extend(diff_combinations(Combination.zero(), alternating_convolution(n), n))
    return report


def binomial_lemma_lhs(k: int) -> int:
    return sum((-1) ** m * comb(k, m) * (m - 1) * (k - m - 1) for m in range(2, k - 1))


def binomial_lemma_residual(k: int) -> int:
    """Left minus right side of ``sum_{m=2}^{k-2} (-1)^m C(k,m)(m-1)(k-m-1) = (1+(-1)^k)(k-1)``."""
    if k < 4:
        raise ValueError(f"k must be >= 4, got {k}")
    return binomial_lemma_lhs(k) - (1 + (-1) ** k) * (k - 1)


def verify_binomial(kmax: int) -> Report:
    if kmax < 4:
        raise ValueError(f"kmax must be >= 4, got {kmax}")
    report = Report("binomial", kmax)
    for k in range(4, kmax + 1):
        lhs = binomial_lemma_lhs(k)
        rhs = (1 + (-1) ** k) * (k - 1)
        if lhs != rhs:
            report.mismatches.append(Mismatch(k, (), rhs, lhs))
    return report


def predicted_coefficient(ix: Index) -> Fraction:
    """Coefficient of ``ix`` in ``sum (-1)^k S(k) * S(2n-k)`` from the parity case analysis.

    Parts equal to 1 never occur; any part >= 4 kills the coefficient, as does
    any 3 among parts in {2, 3}; only ``[2,...,2]`` survives with sign ``(-1)^n``.
    """
    w = sum(ix)
    if w <= 0 or w % 2:
        raise ValueError(f"index weight must be even and positive, got {w}")
    if any(k == 1 for k in ix):
        return Fraction(0)
    h = sum(1 for k in ix if k >= 4)
    if h > 0:
        return Fraction(0)
    if any(k == 3 for k in ix):
        return Fraction(0)
    return Fraction((-1) ** (w // 2))


def verify_case_analysis(n: int) -> Report:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = eq2_lhs(n)
    report = Report("cases", n)
    for ix in compositions(2 * n):
        expected, actual = predicted_coefficient(ix), lhs.coefficient(ix)
        if expected != actual:
            report.mismatches.append(Mismatch(2 * n, ix, expected, actual))
    return report
