"""Determinants, the lines rule and kernels over exact rationals."""
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import NoKernelError, UsageError
from models.matrix import RingMatrix
from models.polynomial import MultiPoly, VarTable
from services import exactla


def constant_matrix(rows):
    return RingMatrix.from_rows(rows)


def square_ints(n):
    return st.lists(
        st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n
    )


def test_symbolic_2x2(poly):
    names = 'a b a1 b1'
    m = RingMatrix.from_rows([[poly('a', names), poly('b', names)], [poly('a1', names), poly('b1', names)]])
    expected = poly('a*b1 - a1*b', names)
    assert exactla.det_permutation_rule(m) == expected
    assert exactla.det_fraction_free(m) == expected
    assert exactla.homogeneous_condition(m) == expected


@pytest.mark.parametrize('rows, expected', [
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 10]], -3),
    ([[1, 2, 3], [0, 0, 0], [7, 8, 10]], 0),
    ([[1, 2], [2, 4]], 0),
])
def test_known_determinants(rows, expected):
    m = constant_matrix(rows)
    assert exactla.det_permutation_rule(m) == expected
    assert exactla.det_fraction_free(m) == expected


def test_non_square_rejected():
    with pytest.raises(UsageError):
        exactla.det_fraction_free(constant_matrix([[1, 2, 3], [4, 5, 6]]))


@pytest.mark.property_based
@given(square_ints(5))
@settings(max_examples=40)
def test_engines_agree_with_sympy(rows):
    m = constant_matrix(rows)
    expected = sympy.Matrix(rows).det()
    assert exactla.det_permutation_rule(m) == exactla.det_fraction_free(m)
    assert exactla.det_fraction_free(m).constant_value() == Fraction(int(expected))


@pytest.mark.property_based
@given(square_ints(6))
@settings(max_examples=15)
def test_engines_agree_6x6(rows):
    m = constant_matrix(rows)
    assert exactla.det_permutation_rule(m) == exactla.det_fraction_free(m)


@pytest.mark.property_based
@given(square_ints(4), st.lists(st.integers(-6, 6), min_size=4, max_size=4))
@settings(max_examples=40)
def test_polynomial_last_row(rows, slopes):
    # constant rows above, entries c + s*y on the last row
    y = MultiPoly.var('y', VarTable(('y',)))
    last = [y * s + c for s, c in zip(slopes, rows[-1])]
    m = RingMatrix.from_rows(rows[:-1] + [last], y.vars)
    assert exactla.det_fraction_free(m) == exactla.det_permutation_rule(m)


def test_polynomial_last_row_under_dependent_rows(poly):
    y = poly('y', 'y')
    m = RingMatrix.from_rows([[1, 2, 3], [2, 4, 6], [y, y + 1, 5]], y.vars)
    assert exactla.det_fraction_free(m).is_zero()


def test_lines_rule_solve_numeric():
    result = exactla.lines_rule_solve(constant_matrix([[1, 1], [1, -1]]), [2, 0])
    assert result.solvable
    den = result.denominator.constant_value()
    assert [v.constant_value() / den for v in result.values] == [1, 1]


def test_lines_rule_solve_symbolic(poly):
    names = 'a b c a1 b1 c1'
    def p(text):
        return poly(text, names)

    coeffs = RingMatrix.from_rows([[p('a'), p('b')], [p('a1'), p('b1')]])
    result = exactla.lines_rule_solve(coeffs, [p('-c'), p('-c1')])
    assert result.solvable
    x_num, y_num = result.values
    den = result.denominator
    assert x_num * p('a*b1 - a1*b') == den * p('b*c1 - b1*c')
    assert y_num * p('a*b1 - a1*b') == den * p('c*a1 - c1*a')


def test_lines_rule_solve_singular():
    result = exactla.lines_rule_solve(constant_matrix([[1, 1], [1, 1]]), [1, 2])
    assert not result.solvable
    assert result.denominator.is_zero()


def test_final_line_lies_in_kernel():
    m = constant_matrix([[1, 2, 3, 4], [0, 1, 5, 2], [2, 0, 1, 1]])
    line = [c.constant_value() for c in exactla.final_line(m)]
    for row in m.row_lists():
        assert sum(e.constant_value() * v for e, v in zip(row, line)) == 0
    assert any(line)


@pytest.mark.parametrize('rows', [
    [[1, 1, -2]],
    [[1, 0, -1], [0, 1, -1]],
    [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 1]],
])
def test_nullspace_vector(rows):
    vector = exactla.nullspace_vector(constant_matrix(rows))
    assert any(vector)
    for row in rows:
        assert sum(Fraction(a) * b for a, b in zip(row, vector)) == 0


def test_nullspace_vector_up_to_scale():
    vector = exactla.nullspace_vector(constant_matrix([[1, 0, -1], [0, 1, -1]]))
    assert vector[0] == vector[1] == vector[2] != 0


def test_no_kernel():
    with pytest.raises(NoKernelError):
        exactla.nullspace_vector(constant_matrix([[1, 0], [0, 1]]))


def test_rank():
    assert exactla.rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    echelon = exactla.RowEchelon(2)
    assert echelon.add([1, 1])
    assert not echelon.add([2, 2])
    assert echelon.is_independent([0, 1])
    assert echelon.rank == 1
