"""Curves, derivative tables, symbolic Wronskians, and their closed forms."""

import random
from fractions import Fraction
from math import factorial

import pytest

from oscmean.errors import BadDimension, BadIndex, BadOrder
from oscmean.logpoly import LogPoly, lp_diff
from oscmean.wronskian import (
    Curve,
    closed_form_v,
    deriv_table,
    det_symbolic,
    factorial_product,
    full_wronskian_closed_form,
    make_conjecture_curve,
    make_log_curve,
    make_monomial_curve,
    normal_field,
    orthogonality_residuals,
    recursion_deriv,
    wronskian_full,
    wronskian_minor,
)

T = LogPoly.term(1, 1, 0)


# -- constructors -------------------------------------------------------------


def test_log_curve_components():
    assert make_log_curve(2).components == (T, LogPoly.term(1, 1, 1))
    assert make_log_curve(3).components == (
        T,
        LogPoly.term(1, 1, 1),
        LogPoly.term(1, 1, 2),
    )


def test_log_curve_needs_two_components():
    with pytest.raises(BadDimension):
        make_log_curve(1)


def test_conjecture_curve_components():
    assert make_conjecture_curve(3).components == (
        T,
        LogPoly.term(1, 2, 0),
        LogPoly.term(1, 0, 1),
    )
    assert make_conjecture_curve(4).components[2] == LogPoly.term(1, 3, 0)
    with pytest.raises(BadDimension):
        make_conjecture_curve(2)


def test_monomial_curve():
    curve = make_monomial_curve([1, 2, 3, 4])
    assert curve.components[3] == LogPoly.term(1, 4, 0)
    inverse = make_monomial_curve([1, -1])
    assert inverse.components[1] == LogPoly.term(1, -1, 0)
    with pytest.raises(BadDimension):
        make_monomial_curve([1, 1])
    with pytest.raises(BadDimension):
        make_monomial_curve([0, 1])


def test_curve_rejects_zero_component():
    with pytest.raises(BadDimension):
        Curve((T, LogPoly.zero()))


# -- derivative tables ---------------------------------------------------------


def test_deriv_table_rows():
    curve = make_log_curve(3)
    table = deriv_table(curve, 2)
    assert table.rows[0] == curve.components
    for r in range(2):
        assert table.rows[r + 1] == tuple(lp_diff(p) for p in table.rows[r])
    # x_2'(t) = log t + 1 and x_1'(t) = 1
    assert table.entry(1, 2) == LogPoly({(0, 1): 1, (0, 0): 1})
    assert table.entry(1, 1) == LogPoly.constant(1)


def test_deriv_table_second_order_shift():
    # x_{k+1}''(t) = (k/t) x_k'(t) on the log curve
    table = deriv_table(make_log_curve(6), 2)
    for k in range(1, 6):
        lhs = table.entry(2, k + 1)
        rhs = LogPoly.term(k, -1, 0) * table.entry(1, k)
        assert lhs == rhs


def test_deriv_table_bad_ranges():
    table = deriv_table(make_log_curve(3), 2)
    with pytest.raises(BadOrder):
        table.entry(3, 1)
    with pytest.raises(BadIndex):
        table.entry(0, 4)
    with pytest.raises(BadOrder):
        deriv_table(make_log_curve(3), -1)


# -- order-reduction recursion ---------------------------------------------------


def test_recursion_base_case():
    # x_2''(t) = 1/t
    assert recursion_deriv(1, 2) == LogPoly.term(1, -1, 0)


def test_recursion_matches_direct_differentiation():
    # independent route: recursion on one side, repeated lp_diff on the other
    table = deriv_table(make_log_curve(7), 6)
    for k in range(1, 7):
        for r in range(2, 7):
            assert recursion_deriv(k, r) == table.entry(r, k + 1)


def test_recursion_third_derivative_cross_check():
    p = LogPoly.term(1, 1, 2)  # t (log t)^2
    expected = lp_diff(lp_diff(lp_diff(p)))
    assert recursion_deriv(2, 3) == expected


def test_recursion_rejects_low_order():
    with pytest.raises(BadOrder):
        recursion_deriv(3, 1)
    with pytest.raises(BadIndex):
        recursion_deriv(0, 2)


# -- symbolic determinants -------------------------------------------------------


def random_matrix(rng, n):
    def poly():
        return LogPoly(
            {
                (rng.randint(-2, 2), rng.randint(0, 2)): Fraction(
                    rng.randint(-5, 5), rng.randint(1, 3)
                )
                for _ in range(rng.randint(1, 3))
            }
        )

    return [[poly() for _ in range(n)] for _ in range(n)]


def test_expansion_order_independence():
    rng = random.Random(404)
    for n in (2, 3, 4):
        for _ in range(8):
            m = random_matrix(rng, n)
            memo = det_symbolic(m)
            assert memo == det_symbolic(m, expansion="row0")
            assert memo == det_symbolic(m, expansion="col0")


def test_det_rejects_ragged_matrix():
    with pytest.raises(BadDimension):
        det_symbolic([[T], [T, T]])


# -- Wronskian minors --------------------------------------------------------------


def test_monomial_minors_worked_example():
    curve = make_monomial_curve([1, 2, 3, 4])
    assert wronskian_minor(curve, 1) == LogPoly.term(48, 3, 0)
    assert wronskian_minor(curve, 2) == LogPoly.term(72, 2, 0)
    assert wronskian_minor(curve, 3) == LogPoly.term(48, 1, 0)
    assert wronskian_minor(curve, 4) == LogPoly.term(12, 0, 0)


def test_log_curve_minors_n3():
    curve = make_log_curve(3)
    assert wronskian_minor(curve, 1) == LogPoly({(-1, 2): 1, (-1, 1): 2, (-1, 0): 2})
    assert wronskian_minor(curve, 2) == LogPoly({(-1, 1): 2, (-1, 0): 2})
    assert wronskian_minor(curve, 3) == LogPoly.term(1, -1, 0)


def test_minor_index_out_of_range():
    curve = make_log_curve(3)
    with pytest.raises(BadIndex):
        wronskian_minor(curve, 0)
    with pytest.raises(BadIndex):
        wronskian_minor(curve, 4)


def test_minor_expansion_cross_check():
    # the production path (memoized) against plain column expansion
    curve = make_log_curve(4)
    table = deriv_table(curve, 3)
    kept = [1, 2, 4]
    matrix = [[table.entry(r, c) for c in kept] for r in range(1, 4)]
    assert wronskian_minor(curve, 3) == det_symbolic(matrix, expansion="col0")


# -- closed forms -------------------------------------------------------------------


def test_closed_form_small_cases():
    assert closed_form_v(1, 3) == LogPoly({(-1, 2): 1, (-1, 1): 2, (-1, 0): 2})
    assert closed_form_v(3, 3) == LogPoly.term(1, -1, 0)
    assert closed_form_v(2, 2) == LogPoly.constant(1)
    assert closed_form_v(1, 2) == LogPoly({(0, 1): 1, (0, 0): 1})
    with pytest.raises(BadIndex):
        closed_form_v(0, 3)
    with pytest.raises(BadIndex):
        closed_form_v(4, 3)


def test_minors_equal_closed_forms():
    for n in range(2, 6):
        curve = make_log_curve(n)
        for k in range(1, n + 1):
            assert wronskian_minor(curve, k) == closed_form_v(k, n)


def test_full_wronskian_log_curve():
    assert wronskian_full(make_log_curve(3)) == LogPoly.constant(2)
    # 0!1!2!3! = 12 over t^2
    assert wronskian_full(make_log_curve(4)) == LogPoly.term(12, -2, 0)
    for n in range(3, 7):
        assert wronskian_full(make_log_curve(n)) == full_wronskian_closed_form(n)
        assert wronskian_full(make_log_curve(n)).value_at_one() == factorial_product(n)


def test_minor_recursions():
    for n in range(2, 5):
        for k in range(1, n + 1):
            lhs = closed_form_v(k + 1, n + 1)
            rhs = LogPoly.term(Fraction(factorial(n), k), -(n - 1), 0) * closed_form_v(k, n)
            assert lhs == rhs
        lead = LogPoly.term(factorial_product(n), -(n * (n - 1)) // 2, n) + LogPoly.term(
            factorial(n), -(n - 1), 0
        ) * closed_form_v(1, n)
        assert closed_form_v(1, n + 1) == lead


# -- normal field and orthogonality ---------------------------------------------------


def test_normal_field_monomial_worked_example():
    field = normal_field(make_monomial_curve([1, 2, 3, 4]))
    assert field == (
        LogPoly.term(48, 3, 0),
        LogPoly.term(-72, 2, 0),
        LogPoly.term(48, 1, 0),
        LogPoly.term(-12, 0, 0),
    )


def test_normal_field_log_curves():
    assert normal_field(make_log_curve(2)) == (
        LogPoly({(0, 1): 1, (0, 0): 1}),
        LogPoly.constant(-1),
    )
    n3 = normal_field(make_log_curve(3))
    assert n3[1] == -closed_form_v(2, 3)


def test_derivatives_at_one():
    table = deriv_table(make_log_curve(7), 6)
    for k in range(2, 8):
        for r in range(0, k - 1):
            assert table.entry(r, k).value_at_one() == 0
    for r in range(2, 8):
        assert table.entry(r - 1, r).value_at_one() == factorial(r - 1)


def test_orthogonality_residuals_vanish():
    for n in (2, 3, 4):
        assert all(r.is_zero() for r in orthogonality_residuals(n))
    with pytest.raises(BadDimension):
        orthogonality_residuals(1)
