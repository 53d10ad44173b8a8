"""Monomials as exponent tuples, under grevlex with t_1 > ... > t_s.

Ties between equal-degree monomials are broken by the rightmost nonzero
entry of the exponent difference: if it is negative the first monomial is
the larger.  Within a fixed degree, descending grevlex coincides with
ascending lexicographic order of the reversed exponent tuple.
"""

from __future__ import annotations

from itertools import combinations


def degree(m):
    return sum(m)


def is_squarefree(m):
    return all(e <= 1 for e in m)


def support(m):
    """1-based variable indices with nonzero exponent, as a frozenset."""
    return frozenset(i + 1 for i, e in enumerate(m) if e)


def from_support(subset, s):
    exps = [0] * s
    for i in subset:
        exps[i - 1] = 1
    return tuple(exps)


def divides(m1, m2):
    return all(a <= b for a, b in zip(m1, m2))


def grevlex_cmp(m1, m2):
    """-1, 0 or 1 according to m1 < m2, m1 == m2, m1 > m2."""
    d1, d2 = sum(m1), sum(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    for a, b in zip(reversed(m1), reversed(m2)):
        if a != b:
            return 1 if a < b else -1
    return 0


def grevlex_less(m1, m2):
    return grevlex_cmp(m1, m2) < 0


def grevlex_key(m):
    """Sort key: ascending order under this key is ascending grevlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def count_degree_monomials(s, d):
    from math import comb

    return comb(s + d - 1, d)


def degree_monomials(s, d):
    """All degree-d monomials in s variables, descending grevlex
    (t_1^d first)."""
    out = []
    # Stars and bars: bar positions determine the exponent vector.
    for bars in combinations(range(d + s - 1), s - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + s - 2 - prev)
        out.append(tuple(exps))
    out.sort(key=grevlex_key, reverse=True)
    return out


def squarefree_monomials(s, d):
    """Square-free degree-d monomials, descending grevlex."""
    if d > s:
        return []
    out = [from_support(frozenset(c), s) for c in combinations(range(1, s + 1), d)]
    out.sort(key=grevlex_key, reverse=True)
    return out


def format_monomial(m):
    if not any(m):
        return "1"
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"t{i}")
        elif e > 1:
            parts.append(f"t{i}^{e}")
    return "*".join(parts)
