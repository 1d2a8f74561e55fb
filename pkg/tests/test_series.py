import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from poplab.poly import Poly, Q, Y
from poplab.series import (
    NonIntegralCoefficientError, QEgfSeries, SeriesError, TruncatedSeries, bgf_row, bgf_table,
    cos_series, egf_counts, exp_series, fixpoint_solve, gauss_binomial, gf_counts, ode_residual,
    ode_solve, q_factorial, q_integer, q_mul, sec_series, sin_series, tan_series,
)

X = TruncatedSeries.x


# -- polynomials -----------------------------------------------------------------

def test_poly_basics():
    p = (1 + Y) * (1 - Y)
    assert p == 1 - Y ** 2
    assert p.degree("y") == 2 and p.degree("q") == 0
    assert p.coefficients("y") == [1, 0, -1]
    assert (Y + Q).subs(y=2) == 2 + Q
    assert str(1 + 2 * Y - Y * Q) == "1 + 2*y - y*q"


def test_poly_exact_division():
    assert ((1 + Y) ** 3).exact_div(1 + Y) == (1 + Y) ** 2
    with pytest.raises(ArithmeticError):
        (1 + Y ** 2).exact_div(1 + Y)
    with pytest.raises(ZeroDivisionError):
        Y.exact_div(0)
    with pytest.raises(ArithmeticError):
        Y.inverse()


small_polys = st.builds(
    lambda terms: Poly({(a, b): Fraction(c) for a, b, c in terms}),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3)), max_size=4),
)


@settings(max_examples=150, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if b:
        assert (a * b).exact_div(b) == a


# -- truncated series ---------------------------------------------------------------

def test_known_expansions():
    assert egf_counts(exp_series(8)) == [1] * 9
    involutions = (X(10) + X(10, 2) * Fraction(1, 2)).exp()
    assert egf_counts(involutions) == [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496]
    bell = (exp_series(10) - 1).exp()
    assert egf_counts(bell) == [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
    assert egf_counts(tan_series(9) + sec_series(9)) == [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]
    s, c = sin_series(10), cos_series(10)
    assert s * s + c * c == TruncatedSeries.constant(1, 10)


def test_inverse_and_division():
    geo = (1 - X(6)).inverse()
    assert gf_counts(geo) == [1] * 7
    assert (geo * (1 - X(6))) == TruncatedSeries.constant(1, 6)
    with pytest.raises(SeriesError):
        X(5).inverse()
    with pytest.raises(SeriesError):
        TruncatedSeries([Y, 1], 3).inverse()


def test_compose_exp_sqrt_errors():
    with pytest.raises(SeriesError):
        exp_series(4).compose(1 + X(4))
    with pytest.raises(SeriesError):
        (1 + X(4)).exp()
    with pytest.raises(SeriesError):
        (2 + X(4)).sqrt()
    with pytest.raises(SeriesError):
        TruncatedSeries([1], 0).derivative()
    with pytest.raises(SeriesError):
        TruncatedSeries([1, 1], -1)


def test_sqrt_and_compose():
    f = (1 - X(8) * 4).sqrt()
    catalan = (1 - f).div_x(1) * Fraction(1, 2)
    assert gf_counts(catalan) == [1, 1, 2, 5, 14, 42, 132, 429]
    assert exp_series(6).compose(X(6) * 2) == TruncatedSeries.from_function(
        lambda n: Fraction(2 ** n, math.factorial(n)), 6)


def test_div_x_and_truncation():
    f = X(5, 2) + X(5, 3)
    assert f.div_x(2) == TruncatedSeries([1, 1, 0, 0], 3)
    with pytest.raises(SeriesError):
        f.div_x(3)
    with pytest.raises(SeriesError):
        f[6]
    with pytest.raises(SeriesError):
        f.truncate(7)
    assert f.mul_x().order == 6


def test_integer_readout():
    with pytest.raises(NonIntegralCoefficientError):
        gf_counts(TruncatedSeries([1, Fraction(1, 2)]))
    with pytest.raises(NonIntegralCoefficientError):
        egf_counts(TruncatedSeries([1, 0, Fraction(1, 3)]))
    # y - exp((y-1)x) has constant term y - 1, which is not a unit
    with pytest.raises(SeriesError):
        (Y - 1) / (Y - (X(5) * (Y - 1)).exp())


def test_bgf_table_and_row():
    f = TruncatedSeries([1, Y, Y + Y ** 2], 2)
    assert bgf_table(f, egf=False) == {(0, 0): 1, (1, 1): 1, (2, 1): 1, (2, 2): 1}
    assert bgf_row(f, 2, egf=False) == [0, 1, 1]


def test_exact_div_coeffs():
    f = TruncatedSeries([2 * Y, 2 * Y + 2 * Y ** 2], 1)
    assert f.exact_div_coeffs(2 * Y) == TruncatedSeries([1, 1 + Y], 1)
    with pytest.raises(ArithmeticError):
        TruncatedSeries([1 + Y], 0).exact_div_coeffs(Y)


# -- solvers -----------------------------------------------------------------------

def test_ode_tan():
    # tan' = 1 + tan^2
    one = TruncatedSeries.constant(1, 10)
    p = ode_solve(one, None, one, 0, 11)
    assert p == tan_series(11)
    assert ode_residual(p, one, None, one) == TruncatedSeries.constant(0, 10)


def test_ode_precision_check():
    with pytest.raises(SeriesError):
        ode_solve(TruncatedSeries.constant(1, 3), None, None, 0, 8)


def test_fixpoint_catalan():
    c = fixpoint_solve(lambda f: 1 + X(9) * f * f, 9)
    assert gf_counts(c) == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def test_fixpoint_rejects_non_contracting():
    with pytest.raises(SeriesError):
        fixpoint_solve(lambda f: f * 2 + 1, 4)


# -- q-analogues --------------------------------------------------------------------

def test_q_integers():
    assert gauss_binomial(2, 1) == 1 + Q
    assert gauss_binomial(4, 2) == 1 + Q + 2 * Q ** 2 + Q ** 3 + Q ** 4
    assert gauss_binomial(3, 5) == 0
    assert q_integer(3) == 1 + Q + Q ** 2
    assert q_factorial(3).subs(q=1) == 6
    for n in range(7):
        for i in range(n + 1):
            assert gauss_binomial(n, i).subs(q=1) == math.comb(n, i)


def test_q_mul_specializes_to_binomial_convolution():
    a = QEgfSeries([1, 2 + Q, Q, 3], 3)
    b = QEgfSeries([1, 1, Q ** 2, 1], 3)
    prod = q_mul(a, b)
    at1 = prod.subs(q=1)
    for n in range(4):
        expect = sum(math.comb(n, i) * a[i].subs(q=1) * b[n - i].subs(q=1) for i in range(n + 1))
        assert at1[n] == expect
    assert prod.to_egf() == a.to_egf() * b.to_egf()


def test_q_inverse_and_x_times():
    e = QEgfSeries([1] * 6, 5)
    inv = e.inverse()
    assert e * inv == QEgfSeries([1], 5)
    xt = e.x_times()
    assert xt.order == 6 and xt[3] == q_integer(3)
    with pytest.raises(SeriesError):
        QEgfSeries([Q, 1], 2).inverse()
