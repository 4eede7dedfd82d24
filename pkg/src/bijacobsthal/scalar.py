"""Scalar bi-periodic sequences.

A bi-periodic sequence is a second-order linear recurrence whose multiplier
alternates between two nonzero constants a and b with the parity of the
index.  Four kinds are provided; which of a/b applies at even indices is a
classic foot-gun, so the whole table is pinned here and unit-tested:

    kind                     t0  t1   even step      odd step
    ------------------------ --- ---  -------------  -------------
    BP_JACOBSTHAL (jhat)      0   1   a*t[n-1]+2*t[n-2]  b*t[n-1]+2*t[n-2]
    BP_JACOBSTHAL_LUCAS       2   a   b*t[n-1]+2*t[n-2]  a*t[n-1]+2*t[n-2]
    BP_FIBONACCI              0   1   a*t[n-1]+t[n-2]    b*t[n-1]+t[n-2]
    BP_LUCAS                  2   a   b*t[n-1]+t[n-2]    a*t[n-1]+t[n-2]

Setting a = b = 1 specializes BP_JACOBSTHAL to the classical Jacobsthal
numbers 0, 1, 1, 3, 5, 11, 21, 43, 85, ... and BP_JACOBSTHAL_LUCAS to the
classical Jacobsthal-Lucas numbers 2, 1, 5, 7, 17, 31, ...

The only negative index supported is n = -1 for BP_JACOBSTHAL, whose
backward extension jhat(-1) = 1/2 is forced by the recurrence at n = 1 and
is needed by the matrix closed form at n = 0.  No other negative-index
extension is defined here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact import Mat2, as_rational
from .report import IdentityReport, LUCAS_RELATIONS, failed, passed


@dataclass(frozen=True)
class BiParams:
    """Validated parameter pair (a, b), both nonzero exact rationals.

    `ab` and `disc` = ab*(ab+8) are derived; disc is the discriminant of
    the characteristic equation x^2 - ab*x - 2ab = 0 shared by the
    Jacobsthal-kind sequences.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a == 0 or self.b == 0:
            raise ValueError("bi-periodic parameters a and b must both be nonzero")

    @property
    def ab(self) -> Fraction:
        return self.a * self.b

    @property
    def disc(self) -> Fraction:
        return self.ab * (self.ab + 8)


class SeqKind(enum.Enum):
    BP_JACOBSTHAL = "jhat"
    BP_JACOBSTHAL_LUCAS = "jlucas"
    BP_FIBONACCI = "fibonacci"
    BP_LUCAS = "lucas"

    @property
    def even_uses_a(self) -> bool:
        """True when the multiplier at even indices is a (else it is b)."""
        return self in (SeqKind.BP_JACOBSTHAL, SeqKind.BP_FIBONACCI)

    @property
    def lag_coefficient(self) -> int:
        """Coefficient of t[n-2]: 2 for the Jacobsthal kinds, 1 otherwise."""
        if self in (SeqKind.BP_JACOBSTHAL, SeqKind.BP_JACOBSTHAL_LUCAS):
            return 2
        return 1

    def initial_terms(self, params: BiParams) -> tuple[Fraction, Fraction]:
        if self in (SeqKind.BP_JACOBSTHAL, SeqKind.BP_FIBONACCI):
            return (Fraction(0), Fraction(1))
        return (Fraction(2), params.a)

    def multiplier(self, params: BiParams, n: int) -> Fraction:
        if (n % 2 == 0) == self.even_uses_a:
            return params.a
        return params.b


# Memo table per (kind, a, b).  Bounded: oldest series are evicted once the
# table holds _CACHE_MAX_SERIES distinct parameter points.  All writers
# compute identical values, so concurrent use is benign under the GIL.
_CACHE_MAX_SERIES = 64
_term_cache: dict[tuple[SeqKind, Fraction, Fraction], list[Fraction]] = {}


def clear_caches() -> None:
    """Drop all memoized sequence prefixes (used by benchmarks and tests)."""
    _term_cache.clear()


def _series(kind: SeqKind, params: BiParams, upto: int) -> list[Fraction]:
    key = (kind, params.a, params.b)
    terms = _term_cache.get(key)
    if terms is None:
        while len(_term_cache) >= _CACHE_MAX_SERIES:
            _term_cache.pop(next(iter(_term_cache)))
        terms = list(kind.initial_terms(params))
        _term_cache[key] = terms
    lag = kind.lag_coefficient
    while len(terms) <= upto:
        n = len(terms)
        terms.append(kind.multiplier(params, n) * terms[-1] + lag * terms[-2])
    return terms


def scalar_term(kind: SeqKind, params: BiParams, n: int) -> Fraction:
    """Exact nth term by the forward recurrence (memoized per kind/params).

    n = -1 is accepted only for BP_JACOBSTHAL and returns 1/2.
    """
    if n == -1:
        if kind is SeqKind.BP_JACOBSTHAL:
            return Fraction(1, 2)
        raise ValueError(f"index -1 is only defined for {SeqKind.BP_JACOBSTHAL}")
    if n < -1:
        raise ValueError(f"index {n} is out of domain (minimum is -1)")
    return _series(kind, params, n)[n]


def scalar_term_fast(kind: SeqKind, params: BiParams, n: int) -> Fraction:
    """Exact nth term in O(log n) ring operations.

    Terms of a fixed index parity satisfy the order-2 recurrence
    y[m] = (ab + 2c) * y[m-1] - c^2 * y[m-2] with c the lag coefficient
    (c = 2 gives the familiar (ab+4, -4) doubling pair), so the term is read
    off a binary power of that recurrence's companion matrix.
    """
    if n < 0:
        raise ValueError(f"index {n} is out of domain (minimum is 0)")
    if n <= 3:
        return scalar_term(kind, params, n)
    p = n & 1
    k = (n - p) // 2
    c = kind.lag_coefficient
    y0 = scalar_term(kind, params, p)
    y1 = scalar_term(kind, params, p + 2)
    companion = Mat2(params.ab + 2 * c, Fraction(-c * c), Fraction(1), Fraction(0))
    power = companion ** (k - 1)
    return power.e11 * y1 + power.e12 * y0


_CLASSICAL = BiParams(Fraction(1), Fraction(1))


def classical_jacobsthal(n: int) -> Fraction:
    """Classical Jacobsthal number: 0, 1, 1, 3, 5, 11, 21, 43, 85, ..."""
    if n < 0:
        raise ValueError("classical sequences are defined for n >= 0")
    return scalar_term(SeqKind.BP_JACOBSTHAL, _CLASSICAL, n)


def classical_jacobsthal_lucas(n: int) -> Fraction:
    """Classical Jacobsthal-Lucas number: 2, 1, 5, 7, 17, 31, ..."""
    if n < 0:
        raise ValueError("classical sequences are defined for n >= 0")
    return scalar_term(SeqKind.BP_JACOBSTHAL_LUCAS, _CLASSICAL, n)


def verify_lucas_relations(params: BiParams, n_max: int) -> IdentityReport:
    """Check both cross-relations between jhat and its Lucas companion.

    For 1 <= n <= n_max, exactly:

        C[n] = 2*jhat[n-1] + jhat[n+1]
        (ab + 8) * jhat[n] = 2*C[n-1] + C[n+1]

    A failing index is reported with the exact residual, not raised.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    jhat = lambda i: scalar_term(SeqKind.BP_JACOBSTHAL, params, i)
    cluc = lambda i: scalar_term(SeqKind.BP_JACOBSTHAL_LUCAS, params, i)
    shift = params.ab + 8
    for n in range(1, n_max + 1):
        lhs = cluc(n)
        rhs = 2 * jhat(n - 1) + jhat(n + 1)
        if lhs != rhs:
            return failed(
                LUCAS_RELATIONS, params, (1, n_max), n, lhs - rhs,
                note="C[n] = 2*jhat[n-1] + jhat[n+1] failed",
            )
        lhs = shift * jhat(n)
        rhs = 2 * cluc(n - 1) + cluc(n + 1)
        if lhs != rhs:
            return failed(
                LUCAS_RELATIONS, params, (1, n_max), n, lhs - rhs,
                note="(ab+8)*jhat[n] = 2*C[n-1] + C[n+1] failed",
            )
    return passed(LUCAS_RELATIONS, params, (1, n_max))
