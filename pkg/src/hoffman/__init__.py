"""Exact computations in the harmonic (stuffle) algebra of multiple zeta value indices."""

from .algebra import (
    Combination,
    coefficient_of,
    depth,
    index_stuffle,
    is_admissible,
    linear_combine,
    make_index,
    stuffle,
    weight,
)
from .report import Mismatch, Report
from .series import TruncatedSeries, series_coefficient, series_exp, series_flip, series_mul

__all__ = [
    "Combination",
    "Mismatch",
    "Report",
    "TruncatedSeries",
    "coefficient_of",
    "depth",
    "index_stuffle",
    "is_admissible",
    "linear_combine",
    "make_index",
    "series_coefficient",
    "series_exp",
    "series_flip",
    "series_mul",
    "stuffle",
    "weight",
]
