"""Independent reference computations used only by the tests."""

from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb


def quasi_shuffle_bruteforce(u, v):
    """Stuffle of two indices by enumerating order-preserving surjective interleavings.

    Each term picks a target length t and strictly increasing position maps for
    u and v into 0..t-1 whose images cover every position; entries landing on
    the same position are added.
    """
    r, s = len(u), len(v)
    out = Counter()
    for t in range(max(r, s), r + s + 1):
        for pu in combinations(range(t), r):
            rest = [p for p in range(t) if p not in pu]
            # v must cover the positions u misses, and may share any of u's
            need = len(rest)
            if need > s:
                continue
            for pv in combinations(range(t), s):
                if not set(rest) <= set(pv):
                    continue
                word = [0] * t
                for i, p in enumerate(pu):
                    word[p] += u[i]
                for i, p in enumerate(pv):
                    word[p] += v[i]
                out[tuple(word)] += 1
    return dict(out)


def all_compositions(k, min_part=1):
    """Every composition of k from the 2^(k-1) subsets of cut points, filtered by part size."""
    if k <= 0:
        return []
    out = []
    for mask in range(1 << (k - 1)):
        parts, run = [], 1
        for i in range(k - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        if min(parts) >= min_part:
            out.append(tuple(parts))
    return out


def indices_up_to(wmax, admissible_only=False):
    out = [()]
    for w in range(1, wmax + 1):
        out.extend(all_compositions(w))
    if admissible_only:
        out = [ix for ix in out if not ix or ix[-1] >= 2]
    return out


def zeta_bruteforce(ix, M):
    """Plain truncated nested sum over 0 < m_1 < ... < m_r <= M (no tail)."""
    # prefix[m] = sum over chains ending strictly below m
    prefix = [1.0] * (M + 2)
    for k in ix:
        nxt = [0.0] * (M + 2)
        acc = 0.0
        for m in range(1, M + 1):
            nxt[m] = acc
            acc += prefix[m] / m**k
        nxt[M + 1] = acc
        prefix = nxt
    return prefix[M + 1]


def binomial_lemma_sides(k):
    lhs = 0
    for m in range(2, k - 1):
        lhs += (-1) ** m * comb(k, m) * (m - 1) * (k - m - 1)
    return lhs, (1 + (-1) ** k) * (k - 1)


def exp_coefficients_scalar(a, N):
    """exp of a scalar power series with a[0] = 0, via the derivative recurrence."""
    e = [Fraction(0)] * (N + 1)
    e[0] = Fraction(1)
    for n in range(1, N + 1):
        e[n] = sum(k * a[k] * e[n - k] for k in range(1, n + 1)) / n
    return e
