"""Exact identity checks with counterexample reporting.

Each `verify_*` function turns one stated identity into a machine-checked
fact over a parameter point and an index range.  The direct computation
(term-by-term summation, the definitional recurrence) is always the
normative side; printed closed forms are the hypotheses under test.  A
refuted identity is a FAIL report carrying the first failing index and the
exact residual, never an exception.

Two checks are known to fail and are kept on purpose (see ERRATA.md):

* WEIGHTED_SUM_T6: the printed closed form for sum_k J[k]/x^k is wrong for
  x != 1 (at x = 1 it reduces exactly to the plain summation formula).  A
  corrected, machine-validated form is provided alongside.
* the printed root relation beta + 2 = -beta/alpha, which is false for
  every admissible parameter pair; the correct companion identity is
  beta + 2 = beta^2/(ab).

Grid points that make an identity degenerate (ab = 1 for the plain sum,
a vanishing weighted-sum denominator, x = 0) yield SKIPPED reports with a
reason, never silent omissions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Mat2, QuadNum, as_rational, parity
from .genfunc import build_ogf, series_coeffs
from .matrixseq import (
    char_roots,
    det_closed,
    generator_matrix,
    term_binet,
    term_closed,
    term_fast,
    term_recurrence,
)
from .report import (
    ALL_IDENTITIES,
    CASSINI,
    CROSS_METHOD,
    DET,
    DOUBLING,
    IdentityReport,
    LUCAS_RELATIONS,
    ROOT_IDENTITIES,
    SERIES_MATCH,
    SUM_T5,
    WEIGHTED_SUM_T6,
    failed,
    passed,
    skipped,
)
from .scalar import BiParams, SeqKind, scalar_term, verify_lucas_relations


def verify_cassini(params: BiParams, n_max: int) -> IdentityReport:
    """(b/a)^e * j[n-1]*j[n+1] - (b/a)^(1-e) * j[n]^2 = (-1)^e * 2^(n-1).

    j is the bi-periodic Jacobsthal scalar, e = parity(n), 1 <= n <= n_max.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    ratio = params.b / params.a
    jhat = lambda i: scalar_term(SeqKind.BP_JACOBSTHAL, params, i)
    for n in range(1, n_max + 1):
        e = parity(n)
        lhs = ratio ** e * jhat(n - 1) * jhat(n + 1) - ratio ** (1 - e) * jhat(n) ** 2
        rhs = (-1) ** e * Fraction(2) ** (n - 1)
        if lhs != rhs:
            return failed(CASSINI, params, (1, n_max), n, lhs - rhs)
    return passed(CASSINI, params, (1, n_max))


def verify_det(params: BiParams, n_max: int) -> IdentityReport:
    """det(J[n]) computed entrywise equals 2^n * (-b/a)^parity(n)."""
    if n_max < 0:
        raise ValueError("n_max must be at least 0")
    for n in range(n_max + 1):
        lhs = term_recurrence(params, n).det()
        rhs = det_closed(params, n)
        if lhs != rhs:
            return failed(DET, params, (0, n_max), n, lhs - rhs)
    return passed(DET, params, (0, n_max))


def verify_doubling(params: BiParams, m_max: int) -> IdentityReport:
    """Index-doubling recurrences, both parities, for 2 <= m <= m_max:

        J[2m]   = (ab+4) * J[2m-2] - 4 * J[2m-4]
        J[2m+1] = (ab+4) * J[2m-1] - 4 * J[2m-3]

    first_failure is reported in m-space, matching the checked range.
    """
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    shift = params.ab + 4
    for m in range(2, m_max + 1):
        lhs = term_recurrence(params, 2 * m)
        rhs = shift * term_recurrence(params, 2 * m - 2) - 4 * term_recurrence(params, 2 * m - 4)
        if lhs != rhs:
            return failed(DOUBLING, params, (2, m_max), m, lhs - rhs,
                          note="even-index doubling failed")
        lhs = term_recurrence(params, 2 * m + 1)
        rhs = shift * term_recurrence(params, 2 * m - 1) - 4 * term_recurrence(params, 2 * m - 3)
        if lhs != rhs:
            return failed(DOUBLING, params, (2, m_max), m, lhs - rhs,
                          note="odd-index doubling failed")
    return passed(DOUBLING, params, (2, m_max))


def sum_direct(params: BiParams, n: int) -> Mat2:
    """sum_{k=0}^{n-1} J[k] by plain term-by-term addition (the oracle)."""
    if n < 1:
        raise ValueError("partial sums are defined for n >= 1")
    total = Mat2.zero()
    for k in range(n):
        total = total + term_recurrence(params, k)
    return total


def sum_closed_form(params: BiParams, n: int) -> Mat2:
    """Closed form for sum_{k=0}^{n-1} J[k]; requires ab != 1.

    [J[n]*(1 - a^e*b^(1-e)) + 2*J[n-1]*(1 - a^(1-e)*b^e)
     + J[1]*(a-1) + J[0]*(2b-ab-1)] / (1-ab),   e = parity(n).
    """
    if n < 1:
        raise ValueError("partial sums are defined for n >= 1")
    if params.ab == 1:
        raise ZeroDivisionError("closed form divides by 1 - ab")
    e = parity(n)
    sel_n = params.a if e else params.b            # a^e * b^(1-e)
    sel_n1 = params.b if e else params.a           # a^(1-e) * b^e
    j0 = Mat2.identity()
    j1 = generator_matrix(params)
    numerator = (
        term_recurrence(params, n) * (1 - sel_n)
        + term_recurrence(params, n - 1) * (2 * (1 - sel_n1))
        + j1 * (params.a - 1)
        + j0 * (2 * params.b - params.ab - 1)
    )
    return numerator / (1 - params.ab)


def verify_sum_t5(params: BiParams, n_max: int) -> IdentityReport:
    """Closed-form partial sum against the direct sum, 1 <= n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if params.ab == 1:
        return skipped(SUM_T5, params, (1, n_max), "denominator 1-ab vanishes")
    running = Mat2.zero()
    for n in range(1, n_max + 1):
        running = running + term_recurrence(params, n - 1)
        closed = sum_closed_form(params, n)
        if closed != running:
            return failed(SUM_T5, params, (1, n_max), n, closed - running)
    return passed(SUM_T5, params, (1, n_max))


def _t6_denominator(params: BiParams, x: Fraction) -> Fraction:
    return x * x - (params.ab + 4) * x + 4


def weighted_sum_direct(params: BiParams, x: Fraction, n: int) -> Mat2:
    """sum_{k=0}^{n-1} J[k] / x^k term by term (the oracle); x != 0."""
    x = as_rational(x)
    if n < 1:
        raise ValueError("partial sums are defined for n >= 1")
    if x == 0:
        raise ZeroDivisionError("weights divide by powers of x")
    total = Mat2.zero()
    weight = Fraction(1)
    for k in range(n):
        total = total + term_recurrence(params, k) * weight
        weight /= x
    return total


def weighted_sum_printed_form(params: BiParams, x: Fraction, n: int) -> Mat2:
    """The printed closed form for sum_{k=0}^{n-1} J[k]/x^k, verbatim.

    [J[n]*(2 - x - a^e*b^(1-e)*x) + 2*J[n-1]*(2 - a^(1-e)*b^e - x)
     + x^2*(J[1] - b*J[0]) + x*(-2*J[1] + 3b*J[0] + a*J[1] - J[0] - ab*J[0])]
    / (x^2 - (ab+4)*x + 4),   e = parity(n).

    This is a checker input, not a trusted formula: it reduces to the plain
    summation form at x = 1 but is refuted by the direct sum for x != 1.
    """
    x = as_rational(x)
    if n < 1:
        raise ValueError("partial sums are defined for n >= 1")
    den = _t6_denominator(params, x)
    if den == 0:
        raise ZeroDivisionError("x^2 - (ab+4)x + 4 vanishes at this x")
    e = parity(n)
    sel_n = params.a if e else params.b
    sel_n1 = params.b if e else params.a
    j0 = Mat2.identity()
    j1 = generator_matrix(params)
    numerator = (
        term_recurrence(params, n) * (2 - x - sel_n * x)
        + term_recurrence(params, n - 1) * (2 * (2 - sel_n1 - x))
        + (j1 - params.b * j0) * (x * x)
        + (-2 * j1 + 3 * params.b * j0 + params.a * j1 - j0 - params.ab * j0) * x
    )
    return numerator / den


def weighted_sum_corrected_form(params: BiParams, x: Fraction, n: int) -> Mat2:
    """Corrected closed form for sum_{k=0}^{n-1} J[k]/x^k (see ERRATA.md).

    Derived by telescoping the weighted sum against the generating-function
    denominator and eliminating J[n+1], J[n-2] with one forward and one
    backward recurrence step:

        [x^4*J[0] + x^3*J[1] + x^2*(a*J[1] - (ab+2)*J[0])
         + x*(2b*J[0] - 2*J[1])
         - x^(2-n) * J[n]   * (x^2 + a^e*b^(1-e)*x - 2)
         - 2*x^(1-n) * J[n-1] * (x^2 + a^(1-e)*b^e*x - 2)]
        / (x^4 - (ab+4)*x^2 + 4),   e = parity(n).

    Validated against weighted_sum_direct over the whole default grid; the
    denominator vanishes exactly when x^2 hits a shifted root alpha+2 or
    beta+2 (at x = 1 or x = 2 that means ab = 1).
    """
    x = as_rational(x)
    if n < 1:
        raise ValueError("partial sums are defined for n >= 1")
    if x == 0:
        raise ZeroDivisionError("weights divide by powers of x")
    den = x ** 4 - (params.ab + 4) * x ** 2 + 4
    if den == 0:
        raise ZeroDivisionError("x^4 - (ab+4)x^2 + 4 vanishes at this x")
    e = parity(n)
    sel_n = params.a if e else params.b
    sel_n1 = params.b if e else params.a
    j0 = Mat2.identity()
    j1 = generator_matrix(params)
    numerator = (
        j0 * x ** 4
        + j1 * x ** 3
        + (params.a * j1 - (params.ab + 2) * j0) * x ** 2
        + (2 * params.b * j0 - 2 * j1) * x
        - term_recurrence(params, n) * (x ** (2 - n) * (x * x + sel_n * x - 2))
        - term_recurrence(params, n - 1) * (2 * x ** (1 - n) * (x * x + sel_n1 * x - 2))
    )
    return numerator / den


def verify_weighted_sum_t6(params: BiParams, x: Fraction,
                           n_max: int) -> IdentityReport:
    """Printed weighted-sum closed form against the direct weighted sum.

    The direct sum is normative.  Expected outcome: PASS at x = 1 (where
    the form reduces to the plain summation formula), FAIL for x != 1.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    x = as_rational(x)
    if x == 0:
        return skipped(WEIGHTED_SUM_T6, params, (1, n_max), "x = 0", x=x)
    if _t6_denominator(params, x) == 0:
        return skipped(WEIGHTED_SUM_T6, params, (1, n_max),
                       "denominator x^2-(ab+4)x+4 vanishes", x=x)
    running = Mat2.zero()
    weight = Fraction(1)
    for n in range(1, n_max + 1):
        running = running + term_recurrence(params, n - 1) * weight
        weight /= x
        printed = weighted_sum_printed_form(params, x, n)
        if printed != running:
            return failed(WEIGHTED_SUM_T6, params, (1, n_max), n,
                          printed - running, x=x)
    return passed(WEIGHTED_SUM_T6, params, (1, n_max), x=x)


def root_claim_beta_shift_holds(params: BiParams) -> bool:
    """Truth value of the printed relation beta + 2 = -beta/alpha.

    Expected False for every admissible parameter pair: combined with the
    true identities it would force ab = 0.  Kept as an erratum detector.
    """
    alpha, beta = char_roots(params)
    return beta + 2 == -beta / alpha


def verify_root_identities(params: BiParams) -> IdentityReport:
    """Exact identities for the characteristic roots in Q(sqrt(D)).

        alpha + beta = ab          alpha * beta = -2ab
        (alpha+2)(beta+2) = 4      alpha + 2 = alpha^2/(ab)
        beta + 2 = beta^2/(ab)

    disc = 0 is fine here, nothing divides by alpha - beta.  The report's
    note additionally records the truth value of the known-bad printed
    relation beta + 2 = -beta/alpha.
    """
    alpha, beta = char_roots(params)
    ab = params.ab
    checks: list[tuple[str, QuadNum, QuadNum]] = [
        ("alpha+beta = ab", alpha + beta, QuadNum.from_rational(ab, params.disc)),
        ("alpha*beta = -2ab", alpha * beta, QuadNum.from_rational(-2 * ab, params.disc)),
        ("(alpha+2)(beta+2) = 4", (alpha + 2) * (beta + 2),
         QuadNum.from_rational(4, params.disc)),
        ("alpha+2 = alpha^2/ab", alpha + 2, alpha * alpha / ab),
        ("beta+2 = beta^2/ab", beta + 2, beta * beta / ab),
    ]
    claim = root_claim_beta_shift_holds(params)
    note = f"printed claim beta+2 = -beta/alpha holds: {claim}"
    for name, lhs, rhs in checks:
        diff = lhs - rhs
        if not diff.is_zero():
            residual = diff.rat if diff.rat != 0 else diff.coeff
            return failed(ROOT_IDENTITIES, params, (0, 0), 0, residual,
                          note=f"{name} failed with difference {diff}; {note}")
    return passed(ROOT_IDENTITIES, params, (0, 0), note=note)


def verify_series_match(params: BiParams, count: int) -> IdentityReport:
    """Generating-function expansion against the recurrence, coefficient
    by coefficient for 0 <= m < count."""
    if count < 1:
        raise ValueError("count must be at least 1")
    coeffs = series_coeffs(build_ogf(params), count)
    for m, coeff in enumerate(coeffs):
        term = term_recurrence(params, m)
        if coeff != term:
            return failed(SERIES_MATCH, params, (0, count - 1), m, coeff - term)
    return passed(SERIES_MATCH, params, (0, count - 1))


def verify_cross_method(params: BiParams, n_max: int) -> IdentityReport:
    """Agreement of all term routes for 0 <= n <= n_max.

    At disc = 0 (ab = -8) the root-based route is undefined, so the check
    is restricted to the recurrence, closed-form, and fast routes; the
    restriction is noted on the report rather than skipping the point.
    """
    if n_max < 0:
        raise ValueError("n_max must be at least 0")
    with_binet = params.disc != 0
    note = None if with_binet else "root-based route skipped: ab = -8 repeated root"
    methods = [("closed", term_closed), ("fast", term_fast)]
    if with_binet:
        methods.append(("binet", term_binet))
    for n in range(n_max + 1):
        reference = term_recurrence(params, n)
        for name, method in methods:
            value = method(params, n)
            if value != reference:
                return failed(CROSS_METHOD, params, (0, n_max), n,
                              value - reference,
                              note=f"{name} route disagrees with recurrence")
    return passed(CROSS_METHOD, params, (0, n_max), note=note)


DEFAULT_PARAM_VALUES = tuple(Fraction(v) for v in (-3, -2, -1, 1, 2, 3))
DEFAULT_X_VALUES = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3))
DEFAULT_N_MAX = 128


@dataclass(frozen=True)
class GridSpec:
    """A verification sweep: parameter values, index bound, suites, weights.

    Zero parameter values are rejected outright; degenerate combinations of
    otherwise-valid values are handled downstream as SKIPPED reports.
    """

    a_values: tuple[Fraction, ...]
    b_values: tuple[Fraction, ...]
    n_max: int = DEFAULT_N_MAX
    suites: tuple[str, ...] = ALL_IDENTITIES
    x_values: tuple[Fraction, ...] = DEFAULT_X_VALUES

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_values",
                           tuple(as_rational(v) for v in self.a_values))
        object.__setattr__(self, "b_values",
                           tuple(as_rational(v) for v in self.b_values))
        object.__setattr__(self, "x_values",
                           tuple(as_rational(v) for v in self.x_values))
        object.__setattr__(self, "suites", tuple(self.suites))
        if not self.a_values or not self.b_values:
            raise ValueError("grid needs at least one a value and one b value")
        if any(v == 0 for v in self.a_values + self.b_values):
            raise ValueError("grid parameter values must be nonzero")
        unknown = set(self.suites) - set(ALL_IDENTITIES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        if self.n_max < 4:
            raise ValueError("n_max must be at least 4")


def default_grid(n_max: int = DEFAULT_N_MAX,
                 suites: tuple[str, ...] = ALL_IDENTITIES) -> GridSpec:
    return GridSpec(DEFAULT_PARAM_VALUES, DEFAULT_PARAM_VALUES,
                    n_max=n_max, suites=suites)


def _run_point(params: BiParams, grid: GridSpec) -> list[IdentityReport]:
    out: list[IdentityReport] = []
    for suite in grid.suites:
        if suite == CASSINI:
            out.append(verify_cassini(params, grid.n_max))
        elif suite == DET:
            out.append(verify_det(params, grid.n_max))
        elif suite == DOUBLING:
            out.append(verify_doubling(params, max(2, grid.n_max // 2)))
        elif suite == LUCAS_RELATIONS:
            out.append(verify_lucas_relations(params, grid.n_max))
        elif suite == SUM_T5:
            out.append(verify_sum_t5(params, grid.n_max))
        elif suite == WEIGHTED_SUM_T6:
            for x in grid.x_values:
                out.append(verify_weighted_sum_t6(params, x, grid.n_max))
        elif suite == ROOT_IDENTITIES:
            out.append(verify_root_identities(params))
        elif suite == SERIES_MATCH:
            out.append(verify_series_match(params, grid.n_max + 1))
        elif suite == CROSS_METHOD:
            out.append(verify_cross_method(params, grid.n_max))
    return out


def run_grid(grid: GridSpec) -> list[IdentityReport]:
    """Run every requested suite at every grid point.

    Points are independent, so this could fan out across workers; the
    result is sorted by (a, b, identity, x) either way, making the output
    a pure function of the GridSpec.
    """
    reports: list[IdentityReport] = []
    for a in grid.a_values:
        for b in grid.b_values:
            reports.extend(_run_point(BiParams(a, b), grid))
    reports.sort(key=lambda r: (
        r.params.a, r.params.b, r.identity,
        r.x if r.x is not None else Fraction(0),
    ))
    return reports


def expected_failure(report: IdentityReport) -> bool:
    """True when a FAIL is one of the documented errata outcomes."""
    return (
        report.status == "FAIL"
        and report.identity == WEIGHTED_SUM_T6
        and report.x is not None
        and report.x != 1
    )
