"""
Indices, rational linear combinations of indices, and the harmonic (stuffle)
product.

An index is a plain tuple of positive integers; ``()`` is the empty index.
A :class:`Combination` is an immutable sparse map ``index -> Fraction`` with
no zero coefficients stored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Tuple

Index = Tuple[int, ...]

EMPTY: Index = ()


def make_index(parts: Iterable[int]) -> Index:
    ix = tuple(int(k) for k in parts)
    for k in ix:
        if k < 1:
            raise ValueError(f"index entries must be >= 1, got {k} in {list(ix)}")
    return ix


def weight(ix: Index) -> int:
    return sum(ix)


def depth(ix: Index) -> int:
    return len(ix)


def is_admissible(ix: Index) -> bool:
    """Empty, or last entry at least 2 (exactly where the nested zeta sum converges)."""
    return not ix or ix[-1] >= 2


def sort_key(ix: Index):
    """Canonical order: weight, then depth, then entries lexicographically."""
    return (sum(ix), len(ix), ix)


def format_index(ix: Index) -> str:
    return "[" + ",".join(str(k) for k in ix) + "]"


_INDEX_RE = re.compile(r"^\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*$")


def parse_index(text: str) -> Index:
    m = _INDEX_RE.match(text)
    if m is None:
        raise ValueError(f"not an index: {text!r}")
    body = m.group(1).strip()
    if not body:
        return EMPTY
    return make_index(int(p) for p in body.split(","))


def format_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Combination:
    """A finite Q-linear combination of indices, in canonical sparse form.

    Arithmetic operators are overloaded: ``+``/``-`` are the vector-space
    operations, ``c * u`` with a rational ``c`` scales, and ``u * v`` between
    two combinations is the stuffle product.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Index, object] | None = None):
        clean = {}
        if terms:
            for ix, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[make_index(ix)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict) -> "Combination":
        # caller guarantees valid tuple keys and nonzero Fraction values
        self = object.__new__(cls)
        self._terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls) -> "Combination":
        return cls._trusted({})

    @classmethod
    def one(cls) -> "Combination":
        return cls._trusted({EMPTY: Fraction(1)})

    @classmethod
    def from_index(cls, ix: Iterable[int], coeff=1) -> "Combination":
        return cls({tuple(ix): coeff})

    @property
    def terms(self) -> Mapping[Index, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: sort_key(t[0]))

    def support(self):
        return sorted(self._terms, key=sort_key)

    def coefficient(self, ix: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(ix), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self, w: int) -> bool:
        return all(sum(ix) == w for ix in self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Combination):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return Combination._trusted({ix: -c for ix, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        return linear_combine(1, self, 1, other)

    def __sub__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        return linear_combine(1, self, -1, other)

    def scale(self, a) -> "Combination":
        a = Fraction(a)
        if not a:
            return Combination.zero()
        return Combination._trusted({ix: a * c for ix, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Combination):
            return stuffle(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        return format_combination(self)

    def __repr__(self):
        return f"Combination({format_combination(self)!r})"


def linear_combine(a, u: Combination, b, v: Combination) -> Combination:
    """``a*u + b*v`` with cancelled terms dropped."""
    a = Fraction(a)
    b = Fraction(b)
    out = {}
    if a:
        for ix, c in u._terms.items():
            out[ix] = a * c
    if b:
        for ix, c in v._terms.items():
            s = out.get(ix, 0) + b * c
            if s:
                out[ix] = s
            else:
                out.pop(ix, None)
    return Combination._trusted(out)


def coefficient_of(u: Combination, ix: Iterable[int]) -> Fraction:
    return u.coefficient(ix)


def _unsigned_term(c: Fraction, ix: Index) -> str:
    if c == 1:
        return format_index(ix)
    return f"{format_fraction(c)}*{format_index(ix)}"


def format_combination(u: Combination) -> str:
    """Signed sum in canonical order, e.g. ``-1/2*[2] + [2,3]``; zero is ``0``."""
    items = u.items()
    if not items:
        return "0"
    out = []
    for i, (ix, c) in enumerate(items):
        neg = c < 0
        body = _unsigned_term(-c if neg else c, ix)
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


@lru_cache(maxsize=None)
def _stuffle_pair(k: Index, l: Index) -> Tuple[Tuple[Index, int], ...]:
    # k <= l in canonical order; coefficients of an index product are positive integers
    if not k:
        return ((l, 1),)
    kr, k_ = k[-1], k[:-1]
    ls, l_ = l[-1], l[:-1]
    acc: dict = {}
    for sub, tail in ((index_stuffle(k_, l), kr), (index_stuffle(k, l_), ls), (index_stuffle(k_, l_), kr + ls)):
        for ix, c in sub:
            key = ix + (tail,)
            acc[key] = acc.get(key, 0) + c
    return tuple(acc.items())


def index_stuffle(k: Index, l: Index) -> Tuple[Tuple[Index, int], ...]:
    """Stuffle of two single indices as ``((index, multiplicity), ...)``.

    Recurses on the last entries; memoized on the canonically ordered pair.
    """
    if sort_key(l) < sort_key(k):
        k, l = l, k
    return _stuffle_pair(k, l)


def stuffle(u: Combination, v: Combination) -> Combination:
    """Bilinear harmonic product of two combinations."""
    acc: dict = {}
    for k, a in u._terms.items():
        for l, b in v._terms.items():
            ab = a * b
            for ix, m in index_stuffle(k, l):
                acc[ix] = acc.get(ix, 0) + ab * m
    return Combination._trusted({ix: c for ix, c in acc.items() if c})


def clear_cache() -> None:
    _stuffle_pair.cache_clear()
