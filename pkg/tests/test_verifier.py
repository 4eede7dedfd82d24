from fractions import Fraction as F

import pytest

from bijacobsthal.exact import Mat2
from bijacobsthal.matrixseq import term_recurrence
from bijacobsthal.report import (
    ALL_IDENTITIES,
    CROSS_METHOD,
    SUM_T5,
    WEIGHTED_SUM_T6,
)
from bijacobsthal.scalar import BiParams, SeqKind, scalar_term
from bijacobsthal.verifier import (
    GridSpec,
    expected_failure,
    run_grid,
    sum_closed_form,
    sum_direct,
    verify_cassini,
    verify_cross_method,
    verify_det,
    verify_doubling,
    verify_root_identities,
    verify_series_match,
    verify_sum_t5,
    verify_weighted_sum_t6,
    root_claim_beta_shift_holds,
    weighted_sum_corrected_form,
    weighted_sum_direct,
    weighted_sum_printed_form,
)

GRID_VALUES = tuple(F(v) for v in (-3, -2, -1, 1, 2, 3))
GRID = [BiParams(a, b) for a in GRID_VALUES for b in GRID_VALUES]


def test_cassini_hand_values():
    p = BiParams(2, 1)
    jhat = lambda n: scalar_term(SeqKind.BP_JACOBSTHAL, p, n)
    # n = 2: jhat1*jhat3 - (b/a)*jhat2^2 = 4 - 2 = 2 = 2^1
    assert jhat(1) * jhat(3) - F(1, 2) * jhat(2) ** 2 == 2
    # n = 1 forces the value: -(jhat1)^2 = -1 = (-1)^1 * 2^0
    assert p.b / p.a * jhat(0) * jhat(2) - jhat(1) ** 2 == -1
    assert verify_cassini(p, 256).status == "PASS"
    assert verify_cassini(BiParams(3, 5), 256).status == "PASS"


def test_det_suite():
    p = BiParams(2, 1)
    assert term_recurrence(p, 3).det() == -8 * p.b / p.a == -4
    assert verify_det(p, 128).status == "PASS"
    assert verify_det(BiParams(-2, 3), 128).status == "PASS"


def test_doubling_hand_values():
    p = BiParams(2, 1)
    assert term_recurrence(p, 4) == 6 * term_recurrence(p, 2) - 4 * Mat2.identity()
    q = BiParams(1, 1)
    assert term_recurrence(q, 5) == \
        5 * term_recurrence(q, 3) - 4 * term_recurrence(q, 1)
    assert verify_doubling(p, 64).status == "PASS"
    with pytest.raises(ValueError):
        verify_doubling(p, 1)


def test_sum_t5_values():
    p = BiParams(2, 1)
    expected = Mat2(12, 7, 7, 5)
    assert sum_direct(p, 4) == expected
    assert sum_closed_form(p, 4) == expected
    assert sum_closed_form(p, 4) == \
        2 * term_recurrence(p, 3) - term_recurrence(p, 1) + Mat2.identity()
    # n = 2 closed form collapses to J0 + J1
    assert sum_closed_form(p, 2) == Mat2.identity() + term_recurrence(p, 1)
    assert verify_sum_t5(p, 128).status == "PASS"


def test_sum_t5_degenerate_skips():
    report = verify_sum_t5(BiParams(1, 1), 64)
    assert report.status == "SKIPPED"
    assert report.skip_reason == "denominator 1-ab vanishes"
    report = verify_sum_t5(BiParams(F(-1, 2), -2), 64)
    assert report.status == "SKIPPED"
    with pytest.raises(ZeroDivisionError):
        sum_closed_form(BiParams(1, 1), 4)


def test_weighted_sum_direct_values():
    p = BiParams(2, 1)
    assert weighted_sum_direct(p, F(2), 2) == Mat2(F(3, 2), F(1, 2), F(1, 2), 1)
    assert weighted_sum_direct(p, F(1), 4) == sum_direct(p, 4)
    with pytest.raises(ZeroDivisionError):
        weighted_sum_direct(p, F(0), 2)


def test_weighted_sum_printed_form_refuted_for_x_not_1():
    p = BiParams(2, 1)
    assert weighted_sum_printed_form(p, F(2), 2) == Mat2(3, 1, 1, 2)
    report = verify_weighted_sum_t6(p, F(2), 16)
    assert report.status == "FAIL"
    assert report.first_failure == 1
    assert report.x == 2
    # x = 3 at n = 2 fails with a residual that is not a scalar multiple of
    # the identity (a genuinely structural mismatch)
    direct = weighted_sum_direct(p, F(3), 2)
    printed = weighted_sum_printed_form(p, F(3), 2)
    residual = printed - direct
    assert residual != Mat2.zero()
    assert residual.e11 * residual.e22 != residual.e12 * residual.e21 or \
        residual.e12 != 0


def test_weighted_sum_printed_form_matches_plain_sum_at_x_1():
    for params in (BiParams(2, 1), BiParams(-3, 2), BiParams(3, 5)):
        for n in range(1, 33):
            assert weighted_sum_printed_form(params, F(1), n) == \
                sum_closed_form(params, n)
        assert verify_weighted_sum_t6(params, F(1), 64).status == "PASS"


def test_weighted_sum_skips():
    assert verify_weighted_sum_t6(BiParams(2, 1), F(0), 8).skip_reason == "x = 0"
    report = verify_weighted_sum_t6(BiParams(1, 1), F(1), 8)
    assert report.status == "SKIPPED"
    assert "vanishes" in report.skip_reason


@pytest.mark.parametrize("params", GRID, ids=str)
def test_weighted_sum_corrected_form_matches_oracle(params):
    for x in (F(1), F(2), F(1, 2), F(3), F(-4, 3)):
        if x ** 4 - (params.ab + 4) * x ** 2 + 4 == 0:
            continue
        for n in range(1, 33):
            assert weighted_sum_corrected_form(params, x, n) == \
                weighted_sum_direct(params, x, n)


def test_root_identities_suite():
    for params in GRID + [BiParams(2, -4), BiParams(F(1, 3), F(5, 7))]:
        report = verify_root_identities(params)
        assert report.status == "PASS"
        assert "holds: False" in report.note
        assert root_claim_beta_shift_holds(params) is False


def test_root_claim_numeric_values_at_1_1():
    # at a = b = 1 the roots are 2 and -1: beta + 2 = 1 while -beta/alpha = 1/2
    from bijacobsthal.matrixseq import char_roots
    alpha, beta = char_roots(BiParams(1, 1))
    collapse = lambda q: q.rat + q.coeff * 3  # sqrt(9) = 3 numerically
    assert collapse(alpha) == 2
    assert collapse(beta) == -1
    assert collapse(beta + 2) == 1
    assert collapse(-beta / alpha) == F(1, 2)


def test_series_and_cross_method_suites():
    assert verify_series_match(BiParams(2, 1), 64).status == "PASS"
    assert verify_cross_method(BiParams(1, 1), 128).status == "PASS"
    report = verify_cross_method(BiParams(2, -4), 64)
    assert report.status == "PASS"
    assert "ab = -8" in report.note


def test_run_grid_ordering_and_skips():
    grid = GridSpec(
        a_values=(F(2), F(1), F(-1)),
        b_values=(F(1), F(-1)),
        n_max=16,
        suites=(SUM_T5, WEIGHTED_SUM_T6, CROSS_METHOD),
        x_values=(F(1), F(2)),
    )
    reports = run_grid(grid)
    # sorted by (a, b, identity, x), pure function of the grid spec
    keys = [(r.params.a, r.params.b, r.identity, r.x or F(0)) for r in reports]
    assert keys == sorted(keys)
    shuffled = GridSpec(
        a_values=(F(1), F(-1), F(2)),
        b_values=(F(-1), F(1)),
        n_max=16,
        suites=(CROSS_METHOD, SUM_T5, WEIGHTED_SUM_T6),
        x_values=(F(1), F(2)),
    )
    assert run_grid(shuffled) == reports
    by_key = {(str(r.params.a), str(r.params.b), r.identity, str(r.x)): r
              for r in reports}
    assert by_key[("1", "1", SUM_T5, "None")].status == "SKIPPED"
    assert by_key[("-1", "-1", SUM_T5, "None")].status == "SKIPPED"
    assert by_key[("1", "1", WEIGHTED_SUM_T6, "1")].status == "SKIPPED"
    assert by_key[("1", "1", WEIGHTED_SUM_T6, "2")].status == "FAIL"
    assert by_key[("2", "1", SUM_T5, "None")].status == "PASS"


def test_run_grid_determinism_and_residual_recheck():
    grid = GridSpec((F(2),), (F(1),), n_max=12,
                    suites=(WEIGHTED_SUM_T6,), x_values=(F(2),))
    first = run_grid(grid)
    second = run_grid(grid)
    assert first == second
    (report,) = first
    assert report.status == "FAIL"
    n = report.first_failure
    recomputed = weighted_sum_printed_form(report.params, report.x, n) - \
        weighted_sum_direct(report.params, report.x, n)
    assert recomputed == report.residual
    assert recomputed != Mat2.zero()


def test_expected_failure_classifier():
    p = BiParams(2, 1)
    t6_fail = verify_weighted_sum_t6(p, F(2), 8)
    assert expected_failure(t6_fail)
    t6_pass = verify_weighted_sum_t6(p, F(1), 8)
    assert not expected_failure(t6_pass)
    assert not expected_failure(verify_sum_t5(p, 8))


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec((F(0),), (F(1),))
    with pytest.raises(ValueError):
        GridSpec((F(1),), ())
    with pytest.raises(ValueError):
        GridSpec((F(1),), (F(2),), suites=("NOT_A_SUITE",))
    with pytest.raises(ValueError):
        GridSpec((F(1),), (F(2),), n_max=2)


def test_default_grid_all_suites_small():
    grid = GridSpec(GRID_VALUES, GRID_VALUES, n_max=16, suites=ALL_IDENTITIES)
    reports = run_grid(grid)
    assert len(reports) == 36 * (len(ALL_IDENTITIES) - 1 + 4)
    for report in reports:
        if report.status == "FAIL":
            assert expected_failure(report), report.to_plain()
