from fractions import Fraction

import pytest

from hoffman.algebra import Combination, is_admissible
from hoffman.identities import (
    alternating_convolution,
    binomial_lemma_residual,
    compare_series,
    compositions,
    compositions_min2,
    eq2_lhs,
    log_gamma_series,
    predicted_coefficient,
    rhs_main,
    s_poly,
    sakata_rhs,
    verify_binomial,
    verify_case_analysis,
    verify_eq2,
    verify_main,
    verify_odd_vanishing,
    verify_reduction,
    verify_sakata,
)
from hoffman.series import TruncatedSeries, series_exp, series_flip

from oracles import all_compositions, binomial_lemma_sides

C = Combination.from_index
F = Fraction


def test_compositions_min2_small():
    assert compositions_min2(0) == []
    assert compositions_min2(1) == []
    assert compositions_min2(4) == [(4,), (2, 2)]
    assert compositions_min2(5) == [(5,), (2, 3), (3, 2)]


@pytest.mark.parametrize("k", range(0, 13))
def test_compositions_against_filter(k):
    assert sorted(compositions_min2(k)) == sorted(all_compositions(k, 2))
    assert sorted(compositions(k)) == sorted(all_compositions(k))


def test_composition_counts_fibonacci():
    counts = [len(compositions_min2(k)) for k in range(2, 16)]
    assert counts[5] == 8  # k = 7
    for i in range(2, len(counts)):
        assert counts[i] == counts[i - 1] + counts[i - 2]


def test_s_poly_values():
    assert s_poly(0) == Combination.one()
    assert s_poly(1).is_zero()
    assert s_poly(2) == C((2,), F(-1, 2))
    assert s_poly(3) == C((3,), F(-1, 3))
    assert s_poly(4) == Combination({(4,): F(-1, 8), (2, 2): F(1, 4)})
    assert s_poly(5) == Combination({(5,): F(-1, 30), (2, 3): F(1, 6), (3, 2): F(1, 6)})


@pytest.mark.parametrize("k", range(2, 13))
def test_s_poly_shape(k):
    s = s_poly(k)
    assert s.is_homogeneous(k)
    assert len(s) == len(compositions_min2(k))
    assert all(is_admissible(ix) and min(ix) >= 2 for ix in s.support())


def test_log_gamma_series():
    a = log_gamma_series(5)
    assert a[0].is_zero() and a[1].is_zero()
    assert a[2] == C((2,), F(-1, 2))
    assert a[3] == C((3,), F(1, 3))
    assert series_flip(a)[3] == C((3,), F(-1, 3))
    assert all(series_flip(a)[m] == C((m,), F(-1, m)) for m in range(2, 6))


def test_rhs_main():
    r = rhs_main(7)
    assert r[0] == Combination.one()
    assert r[2] == -C((2,))
    assert r[3].is_zero()
    assert r[4] == C((2, 2))
    assert r[6] == -C((2, 2, 2))


@pytest.mark.parametrize("N", [2, 3, 4, 8, 12])
def test_sakata(N):
    assert verify_sakata(N).passed


def test_sakata_mutation_detected():
    N = 6
    mutated = list(sakata_rhs(N).coeffs)
    mutated[3] = -mutated[3]
    report = compare_series("sakata", N, TruncatedSeries(N, mutated), series_exp(log_gamma_series(N)))
    assert not report.passed
    assert {m.degree for m in report.mismatches} == {3}
    assert report.mismatches[0].index == (3,)


def test_main_degree_two():
    a = log_gamma_series(2)
    lhs = series_exp(a) * series_exp(series_flip(a))
    assert lhs[2] == s_poly(2) + s_poly(2) == -C((2,))


@pytest.mark.parametrize("N", [2, 5, 8, 12])
def test_main(N):
    report = verify_main(N)
    assert report.passed, report.mismatches[:5]


def test_main_odd_degrees_vanish():
    a = log_gamma_series(11)
    lhs = series_exp(a) * series_exp(series_flip(a))
    assert all(lhs[n].is_zero() for n in range(1, 12, 2))


def test_main_mutation_detected():
    N = 6
    rhs = list(rhs_main(N).coeffs)
    rhs[4] = C((4,))
    a = log_gamma_series(N)
    report = compare_series("main", N, TruncatedSeries(N, rhs), series_exp(a) * series_exp(series_flip(a)))
    assert {(m.degree, m.index) for m in report.mismatches} == {(4, (4,)), (4, (2, 2))}


@pytest.mark.parametrize("N", [4, 8, 12])
def test_reduction_agrees_with_main(N):
    assert verify_reduction(N).passed == verify_main(N).passed is True
    assert all(verify_eq2(n).passed for n in range(1, N // 2 + 1))


def test_eq2_hand_values():
    assert eq2_lhs(1) == -C((2,))
    assert eq2_lhs(2) == C((2, 2))
    assert eq2_lhs(3) == -C((2, 2, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_eq2(n):
    assert verify_eq2(n).passed


def test_eq2_rejects_zero():
    with pytest.raises(ValueError):
        verify_eq2(0)
    with pytest.raises(ValueError):
        eq2_lhs(0)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11])
def test_odd_vanishing(n):
    assert verify_odd_vanishing(n).passed
    assert alternating_convolution(n).is_zero()


@pytest.mark.parametrize("n", [0, 2, -1])
def test_odd_vanishing_rejects(n):
    with pytest.raises(ValueError):
        verify_odd_vanishing(n)


def test_binomial_lemma_hand_values():
    assert binomial_lemma_sides(4) == (6, 6)
    assert binomial_lemma_sides(5) == (0, 0)
    assert binomial_lemma_sides(6) == (10, 10)


def test_binomial_lemma_residual():
    for k in range(4, 201):
        assert binomial_lemma_residual(k) == 0
        lhs, rhs = binomial_lemma_sides(k)
        assert lhs == rhs
    assert verify_binomial(200).passed
    with pytest.raises(ValueError):
        binomial_lemma_residual(3)


@pytest.mark.parametrize(
    "ix, value",
    [((2, 2, 2), -1), ((3, 3), 0), ((4, 2), 0), ((1, 2, 3), 0), ((2,), -1), ((2, 2), 1), ((2, 3, 3), 0)],
)
def test_predicted_coefficient(ix, value):
    assert predicted_coefficient(ix) == value


def test_predicted_coefficient_rejects_odd():
    with pytest.raises(ValueError):
        predicted_coefficient((2, 3))
    with pytest.raises(ValueError):
        predicted_coefficient(())


@pytest.mark.parametrize("n", range(1, 6))
def test_case_analysis(n):
    report = verify_case_analysis(n)
    assert report.passed
    lhs = eq2_lhs(n)
    assert lhs.support() == [(2,) * n]
    assert lhs.coefficient((2,) * n) == (-1) ** n


def test_case_analysis_enumerates_all_compositions():
    assert len(compositions(4)) == 8
    assert len(compositions(10)) == 2 ** 9


def test_report_shape():
    r = verify_eq2(2)
    assert r.to_dict() == {"identity": "eq2", "parameter": 2, "status": "pass", "mismatches": []}
