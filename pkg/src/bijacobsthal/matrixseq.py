"""The bi-periodic Jacobsthal matrix sequence, by four independent methods.

The sequence of 2x2 matrices is

    J[0] = I,   J[1] = [[b, 2b/a], [1, 0]],
    J[n] = a * J[n-1] + 2 * J[n-2]   (n even)
    J[n] = b * J[n-1] + 2 * J[n-2]   (n odd)

with a on the even step.  (A variant statement with a and b swapped is in
circulation; it contradicts the explicit low-index matrices and the scalar
closed form, see ERRATA.md.)  Each term packages three consecutive scalar
terms:

    J[n] = [[(b/a)^e * jhat[n+1],  2(b/a) * jhat[n]],
            [jhat[n],              2(b/a)^e * jhat[n-1]]],   e = parity(n)

which is the `term_closed` route.  `term_binet` evaluates the closed form
over the formal extension Q(sqrt(D)), D = ab(ab+8), and `term_fast` runs
log-time scalar doubling through the same assembly.  The four routes are
mutually independent implementations and cross-check one another.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import Mat2, QuadNum, parity
from .scalar import BiParams, SeqKind, scalar_term, scalar_term_fast


class DegenerateDiscriminantError(ValueError):
    """Raised when ab = -8 makes the characteristic roots coincide.

    The printed closed-form coefficients divide by alpha - beta = sqrt(D),
    so they are undefined there.  Only the root-based route refuses; the
    recurrence, closed-form, and fast routes all still work at ab = -8.
    """


def generator_matrix(params: BiParams) -> Mat2:
    """J[1] = [[b, 2b/a], [1, 0]]."""
    return Mat2(params.b, 2 * params.b / params.a, Fraction(1), Fraction(0))


def iter_terms(params: BiParams) -> Iterator[Mat2]:
    """Yield J[0], J[1], J[2], ... freshly (no cache), by the recurrence."""
    prev = Mat2.identity()
    cur = generator_matrix(params)
    yield prev
    yield cur
    n = 2
    while True:
        mult = params.a if n % 2 == 0 else params.b
        prev, cur = cur, mult * cur + 2 * prev
        yield cur
        n += 1


# Bounded per-params memo of recurrence prefixes, same policy as the scalar
# cache: oldest parameter points evicted, growth on demand, benign races.
_CACHE_MAX_SERIES = 64
_matrix_cache: dict[tuple[Fraction, Fraction], list[Mat2]] = {}


def clear_caches() -> None:
    _matrix_cache.clear()


def term_recurrence(params: BiParams, n: int) -> Mat2:
    """J[n] by the definitional recurrence (memoized per params)."""
    if n < 0:
        raise ValueError("matrix terms are defined for n >= 0")
    key = (params.a, params.b)
    terms = _matrix_cache.get(key)
    if terms is None:
        while len(_matrix_cache) >= _CACHE_MAX_SERIES:
            _matrix_cache.pop(next(iter(_matrix_cache)))
        terms = [Mat2.identity(), generator_matrix(params)]
        _matrix_cache[key] = terms
    while len(terms) <= n:
        m = len(terms)
        mult = params.a if m % 2 == 0 else params.b
        terms.append(mult * terms[-1] + 2 * terms[-2])
    return terms[n]


def _assemble(params: BiParams, n: int, jm1: Fraction, jn: Fraction,
              jp1: Fraction) -> Mat2:
    """Build J[n] from jhat[n-1], jhat[n], jhat[n+1] via the closed form."""
    ratio = params.b / params.a
    rpow = ratio if parity(n) else Fraction(1)
    return Mat2(rpow * jp1, 2 * ratio * jn, jn, 2 * rpow * jm1)


def term_closed(params: BiParams, n: int) -> Mat2:
    """J[n] assembled from scalar terms (n = 0 consumes jhat[-1] = 1/2)."""
    if n < 0:
        raise ValueError("matrix terms are defined for n >= 0")
    jhat = SeqKind.BP_JACOBSTHAL
    return _assemble(
        params, n,
        scalar_term(jhat, params, n - 1),
        scalar_term(jhat, params, n),
        scalar_term(jhat, params, n + 1),
    )


def term_fast(params: BiParams, n: int) -> Mat2:
    """J[n] in O(log n) ring operations: scalar doubling plus assembly."""
    if n < 0:
        raise ValueError("matrix terms are defined for n >= 0")
    jhat = SeqKind.BP_JACOBSTHAL
    if n == 0:
        jm1 = scalar_term(jhat, params, -1)
    else:
        jm1 = scalar_term_fast(jhat, params, n - 1)
    return _assemble(
        params, n, jm1,
        scalar_term_fast(jhat, params, n),
        scalar_term_fast(jhat, params, n + 1),
    )


def det_closed(params: BiParams, n: int) -> Fraction:
    """det J[n] = 2^n * (-b/a)^parity(n), exactly."""
    if n < 0:
        raise ValueError("matrix terms are defined for n >= 0")
    value = Fraction(2) ** n
    if parity(n):
        value *= -params.b / params.a
    return value


def char_roots(params: BiParams) -> tuple[QuadNum, QuadNum]:
    """Roots alpha, beta of x^2 - ab*x - 2ab = 0 in Q(sqrt(D)).

    alpha = (ab + sqrt(D))/2 and beta = (ab - sqrt(D))/2 with
    D = ab(ab+8); sqrt(D) stays formal, so negative and perfect-square D
    flow through the same code path.
    """
    half_ab = params.ab / 2
    half = Fraction(1, 2)
    return (
        QuadNum(half_ab, half, params.disc),
        QuadNum(half_ab, -half, params.disc),
    )


def _power_ratio(alpha: QuadNum, k: int) -> Fraction:
    """(alpha^k - beta^k) / (alpha - beta) as an exact rational.

    beta is conj(alpha), so alpha^k - beta^k is twice the sqrt(D) component
    of alpha^k times sqrt(D); dividing by alpha - beta = sqrt(D) leaves
    twice that component.  No division by a quadratic number is needed.
    """
    return 2 * (alpha ** k).coeff


@dataclass(frozen=True)
class BinetCoeffs:
    """Coefficient matrices of the root-based closed form for one index n.

    The closed form used here is

        J[n] = a_mat * u(n) + b_mat * u(2*floor(n/2) + 2),

    where u(k) = (alpha^k - beta^k)/(alpha - beta) is always rational.
    a_mat carries the parity-selected numerator matrix, [[0, 2b/a], [1, -b]]
    for odd n (that is J[1] - b*J[0]) and [[-2, 2b], [a, -2-ab]] for even n
    (that is a*J[1] - 2*J[0] - ab*J[0]), divided by (ab)^floor(n/2); b_mat
    is b^parity(n) * I divided by (ab)^(floor(n/2) + 1).  The division by
    alpha - beta is already folded into using u(k) instead of raw powers.
    """

    a_mat: Mat2
    b_mat: Mat2
    n: int
    alpha: QuadNum
    beta: QuadNum


def binet_coeffs(params: BiParams, n: int) -> BinetCoeffs:
    if n < 0:
        raise ValueError("matrix terms are defined for n >= 0")
    if params.disc == 0:
        raise DegenerateDiscriminantError(
            "ab = -8 gives a repeated characteristic root; the root-based "
            "closed form is undefined there"
        )
    alpha, beta = char_roots(params)
    half = n // 2
    scale = params.ab ** half
    if parity(n):
        numerator = generator_matrix(params) - params.b * Mat2.identity()
        b_num = params.b
    else:
        numerator = (
            params.a * generator_matrix(params)
            - (2 + params.ab) * Mat2.identity()
        )
        b_num = Fraction(1)
    return BinetCoeffs(
        a_mat=numerator / scale,
        b_mat=(b_num / (scale * params.ab)) * Mat2.identity(),
        n=n,
        alpha=alpha,
        beta=beta,
    )


def term_binet(params: BiParams, n: int) -> Mat2:
    """J[n] via powers of the characteristic roots in Q(sqrt(D)).

    Requires disc != 0 (ab != -8); raises DegenerateDiscriminantError
    otherwise.  The sqrt(D) parts cancel exactly and the result is a
    rational matrix equal to the recurrence value.
    """
    coeffs = binet_coeffs(params, n)
    u_n = _power_ratio(coeffs.alpha, n)
    u_even = _power_ratio(coeffs.alpha, 2 * (n // 2) + 2)
    return coeffs.a_mat * u_n + coeffs.b_mat * u_even
