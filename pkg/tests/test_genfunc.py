from fractions import Fraction as F

import pytest

from bijacobsthal.exact import Mat2
from bijacobsthal.genfunc import (
    Mat2Poly,
    RationalOGF,
    build_ogf,
    component_form,
    series_coeffs,
)
from bijacobsthal.matrixseq import generator_matrix, term_recurrence
from bijacobsthal.scalar import BiParams

GRID = [BiParams(a, b)
        for a in (-3, -2, -1, 1, 2, 3)
        for b in (-3, -2, -1, 1, 2, 3)]


def test_mat2poly_trims_trailing_zeros():
    poly = Mat2Poly((Mat2.identity(), Mat2.zero(), Mat2.zero()))
    assert len(poly.coeffs) == 1
    assert poly.degree == 0
    assert poly.coefficient(5) == Mat2.zero()
    assert poly == Mat2Poly((Mat2.identity(),))


def test_ogf_denominator_must_be_monic_in_x0():
    with pytest.raises(ValueError):
        RationalOGF(Mat2Poly((Mat2.identity(),)), (F(2), F(0)))


def test_numerator_structure():
    p = BiParams(2, 1)
    ogf = build_ogf(p)
    j0, j1 = Mat2.identity(), generator_matrix(p)
    assert ogf.numerator.coefficient(0) == j0
    assert ogf.numerator.coefficient(1) == j1
    assert ogf.numerator.coefficient(2) == Mat2(-2, 2, 2, -4)
    assert ogf.numerator.coefficient(2) == p.a * j1 - (p.ab + 2) * j0
    assert ogf.numerator.coefficient(3) == 2 * p.b * j0 - 2 * j1
    assert ogf.denominator == (1, 0, -6, 0, 4)


def test_denominator_generic():
    for params in (BiParams(3, 5), BiParams(-2, 3), BiParams(F(1, 2), F(4, 3))):
        den = build_ogf(params).denominator
        assert den == (1, 0, -(params.ab + 4), 0, 4)


def test_component_form_entries():
    p = BiParams(2, 1)
    (p11, p12), (p21, p22) = component_form(p)
    assert p21 == (0, 1, p.a, -2)
    assert p22 == (1, 0, -(p.ab + 2), 2 * p.b)
    assert component_form(BiParams(1, 1))[0][0] == (1, 1, -2)
    assert p11 == (1, p.b, -2)
    assert p12 == (0, 2 * p.b / p.a, 2 * p.b, -4 * p.b / p.a)


@pytest.mark.parametrize("params", GRID, ids=str)
def test_component_form_matches_numerator(params):
    ogf = build_ogf(params)
    rows = component_form(params)
    getters = ((lambda m: m.e11, lambda m: m.e12),
               (lambda m: m.e21, lambda m: m.e22))
    for i in (0, 1):
        for j in (0, 1):
            poly = rows[i][j]
            entries = [getters[i][j](ogf.numerator.coefficient(k)) for k in range(4)]
            while entries and entries[-1] == 0:
                entries.pop()
            assert tuple(entries) == poly


def test_series_low_coefficients():
    p = BiParams(2, 1)
    coeffs = series_coeffs(build_ogf(p), 3)
    assert coeffs[0] == Mat2.identity()
    assert coeffs[1] == generator_matrix(p)
    assert coeffs[2] == Mat2(4, 2, 2, 2)
    with pytest.raises(ValueError):
        series_coeffs(build_ogf(p), 0)


@pytest.mark.parametrize("params", GRID, ids=str)
def test_series_matches_recurrence(params):
    coeffs = series_coeffs(build_ogf(params), 128)
    for m, coeff in enumerate(coeffs):
        assert coeff == term_recurrence(params, m)


@pytest.mark.parametrize("params", [BiParams(2, 1), BiParams(-3, -2), BiParams(1, 3)],
                         ids=str)
def test_series_times_denominator_reproduces_numerator(params):
    # exact convolution: (sum c_m x^m) * d(x) must equal the numerator in
    # every degree the truncated series can still witness
    ogf = build_ogf(params)
    coeffs = series_coeffs(ogf, 128)
    den = ogf.denominator
    for m in range(125):
        acc = Mat2.zero()
        for i in range(min(m, len(den) - 1) + 1):
            acc = acc + den[i] * coeffs[m - i]
        assert acc == ogf.numerator.coefficient(m)
        if m > 3:
            assert acc == Mat2.zero()
