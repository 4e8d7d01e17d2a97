"""Indexed variables z[N,mu], degree-graded monomials, and the custom term order.

The order compares (i) standard degree ascending, (ii) total mu-weight
DESCENDING (a larger mu-sum makes a monomial smaller), (iii) total N-sum
ascending, and (iv) a lexicographic tie-break on the variables.  The
tie-break enumeration of the variables is a free choice; both variants used
here are exposed and every downstream count is invariant under the switch.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ZeroPolynomial

TIE_BREAK_DEFAULT = "default"
TIE_BREAK_ALT = "alt"
TIE_BREAKS = (TIE_BREAK_DEFAULT, TIE_BREAK_ALT)


@dataclass(frozen=True)
class IndexPair:
    """A point (N, mu) indexing one variable z[N,mu]."""

    N: int
    mu: int


def variable_key(pair: IndexPair, tie_break: str = TIE_BREAK_DEFAULT):
    """Enumeration key of the variable z[N,mu] used by the lex tie-break."""
    if tie_break == TIE_BREAK_DEFAULT:
        return (pair.mu, pair.N)
    if tie_break == TIE_BREAK_ALT:
        return (pair.N, pair.mu)
    raise ValueError(f"unknown tie-break {tie_break!r}")


class MultiDegree(NamedTuple):
    degree: int
    sum_n: int
    sum_mu: int

    def __add__(self, other):
        return MultiDegree(
            self.degree + other.degree, self.sum_n + other.sum_n, self.sum_mu + other.sum_mu
        )


@dataclass(frozen=True, init=False)
class Monomial:
    """Product of indexed variables; factors are stored canonically sorted."""

    factors: tuple[IndexPair, ...]

    def __init__(self, factors):
        ordered = tuple(sorted(factors, key=lambda f: (f.mu, f.N)))
        object.__setattr__(self, "factors", ordered)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.factors + other.factors)

    def __repr__(self):
        return format_monomial(self) or "1"


def multidegree(m: Monomial) -> MultiDegree:
    """(degree, sum of N, sum of mu); additive under monomial products."""
    return MultiDegree(
        len(m.factors),
        sum(f.N for f in m.factors),
        sum(f.mu for f in m.factors),
    )


def compare(m1: Monomial, m2: Monomial, tie_break: str = TIE_BREAK_DEFAULT) -> int:
    """Total order; returns -1, 0 or 1.  Zero only for identical monomials."""
    d1, d2 = len(m1.factors), len(m2.factors)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    md1, md2 = multidegree(m1), multidegree(m2)
    if md1.sum_mu != md2.sum_mu:
        # the larger total mu-weight sorts LOWER
        return -1 if md1.sum_mu > md2.sum_mu else 1
    if md1.sum_n != md2.sum_n:
        return -1 if md1.sum_n < md2.sum_n else 1
    return _compare_tie(m1, m2, tie_break)


def _compare_tie(m1: Monomial, m2: Monomial, tie_break: str) -> int:
    c1 = Counter(variable_key(f, tie_break) for f in m1.factors)
    c2 = Counter(variable_key(f, tie_break) for f in m2.factors)
    for key in sorted(set(c1) | set(c2)):
        a, b = c1.get(key, 0), c2.get(key, 0)
        if a != b:
            # more copies of the enumeration-smaller variable => larger monomial
            return 1 if a > b else -1
    return 0


def sort_monomials(monomials, tie_break: str = TIE_BREAK_DEFAULT) -> list[Monomial]:
    """Ascending under the term order."""
    return sorted(
        monomials, key=functools.cmp_to_key(lambda a, b: compare(a, b, tie_break))
    )


def leading_term(poly, tie_break: str = TIE_BREAK_DEFAULT):
    """(coefficient, monomial) of the order-maximal term.

    Accepts a GeneratorPoly or any iterable of (coefficient, Monomial) pairs.
    """
    terms = getattr(poly, "terms", poly)
    best = None
    for coeff, mono in terms:
        if best is None or compare(mono, best[1], tie_break) > 0:
            best = (coeff, mono)
    if best is None:
        raise ZeroPolynomial("the zero polynomial has no leading term")
    return best


def format_monomial(m: Monomial) -> str:
    """Stable serialization, e.g. "z[0,1]*z[2,3]"; empty string for degree 0."""
    return "*".join(f"z[{f.N},{f.mu}]" for f in m.factors)
