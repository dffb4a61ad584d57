"""Solvable classes, radical roots and the two-radical polynomials."""
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import DegenerateClassError, UsageError
from services import resolvent1762
from services.polyring import collect_wrt
from services.sysio import render_report
from tests.oracle import to_sympy

nonzero_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6).filter(bool)


def test_cubic_class():
    cls = resolvent1762.solvable_class(3, -3, 2)
    assert cls.coeffs == (1, 0, -3, 2)
    assert cls.e2 == 1
    assert cls.e1 == -2
    assert cls.quadratic() == (1, 2, 1)


@pytest.mark.property_based
@given(nonzero_rationals, st.fractions(min_value=-20, max_value=20, max_denominator=6))
@settings(max_examples=50)
def test_cubic_class_reproduces_the_equation(p, q):
    assert resolvent1762.solvable_class(3, p, q).coeffs == (1, 0, p, q)


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_class_coefficients_match_expansion(n):
    cls = resolvent1762.solvable_class(n, Fraction(-7, 2), Fraction(5, 3))
    x, a, b = sympy.symbols('x a b')
    expanded = sympy.expand(sympy.cancel((a * (x + b) ** n - b * (x + a) ** n) / (a - b)))
    expanded = sympy.Poly(expanded, x)
    e1, e2 = sympy.Rational(str(cls.e1)), sympy.Rational(str(cls.e2))
    for k, c in enumerate(cls.coeffs):
        coeff = expanded.coeff_monomial(x ** (n - k))
        # a and b enter only through a + b and ab
        value = sympy.expand(coeff).subs(b, e1 - a)
        value = sympy.expand(value)
        value = sympy.rem(value, a ** 2 - e1 * a + e2, a)
        assert sympy.simplify(value - sympy.Rational(str(c))) == 0


def test_quartic_class(poly):
    cls = resolvent1762.solvable_class(4, -6, -8)
    assert cls.coeffs == (1, 0, -6, -8, -3)
    assert cls.equation() == poly('x^4 - 6*x^2 - 8*x - 3', 'x')


def test_radical_root_of_repeated_endpoints():
    cls = resolvent1762.solvable_class(3, -3, 2)
    root = resolvent1762.radical_root(cls, digits=15)
    assert root.branch == 0
    assert abs(root.value + 2) < 1e-12


def test_radical_root_complex_endpoints():
    cls = resolvent1762.solvable_class(3, -3, -1)
    a, b = resolvent1762.class_endpoints(cls)
    assert abs(sympy.im(a)) > 0.5
    root = resolvent1762.radical_root(cls, digits=20)
    assert root.residual < 1e-18
    value = complex(root.value)
    assert abs(value ** 3 - 3 * value - 1) < 1e-12


@pytest.mark.parametrize('n, p, q', [(4, -6, -8), (5, -10, 4), (6, Fraction(-15, 2), 3)])
def test_radical_root_satisfies_class(n, p, q):
    cls = resolvent1762.solvable_class(n, p, q)
    root = resolvent1762.radical_root(cls, digits=20)
    assert root.residual < 1e-18


def test_degenerate_class():
    with pytest.raises(DegenerateClassError):
        resolvent1762.solvable_class(3, 0, 1)
    with pytest.raises(UsageError):
        resolvent1762.solvable_class(2, -1, 1)


def test_solve_class_report():
    report = resolvent1762.solve_class(3, -3, 2, digits=12)
    text = render_report(report)
    assert '(E): x^3 - 3*x + 2 = 0' in text
    assert 'branch: 0' in text
    assert report.e1 == -2
    assert 'I' not in report.root


def test_two_radical_cubic(poly):
    names = 'x a b'
    assert resolvent1762.two_radical_minpoly(3) == poly('x^3 - 3*a*b*x - a^2*b - a*b^2', names)


def test_two_radical_cubic_numeric(poly):
    # a = 2, b = 1: x = 4^(1/3) + 2^(1/3)
    specialized = resolvent1762.two_radical_minpoly(3, 2, 1)
    assert specialized == poly('x^3 - 6*x - 6', 'x')
    assert resolvent1762.two_radical_residual(3, 2, 1) < 1e-9


def test_two_radical_quartic(poly):
    expected = poly('x^4 - 2*a*b*x^2 - 4*a^2*b*x - a^3*b + a^2*b^2', 'x a b')
    assert resolvent1762.two_radical_minpoly(4) == expected
    assert resolvent1762.two_radical_residual(4, 3, 2) < 1e-9


@pytest.mark.property_based
@pytest.mark.parametrize('n', [3, 4])
@given(a=nonzero_rationals, b=nonzero_rationals)
@settings(max_examples=50, deadline=None)
def test_two_radical_residuals(n, a, b):
    assert resolvent1762.two_radical_residual(n, a, b) < 1e-10


def test_two_radical_needs_both_values():
    with pytest.raises(UsageError):
        resolvent1762.two_radical_minpoly(3, a=2)


@pytest.mark.parametrize('n', [3, 4])
def test_series_agrees_with_elimination(n):
    terms = resolvent1762.series_comparison(n)
    assert [t.power for t in terms] == list(range(n, -1, -1))
    assert all(t.agrees for t in terms)


def test_cubic_cofactor_degree():
    cofactor = resolvent1762.two_radical_cofactor(3)
    assert collect_wrt(cofactor, 'x').m == 6
    full = cofactor * resolvent1762.two_radical_minpoly(3)
    x, a, b = sympy.symbols('x a b')
    u = sympy.Symbol('u')
    expected = sympy.resultant(u ** 3 - a ** 2 * b, (x - u) ** 3 - a * b ** 2, u)
    assert sympy.expand(to_sympy(full) - expected) == 0 or sympy.expand(to_sympy(full) + expected) == 0


@pytest.mark.slow
def test_quartic_cofactor_degree():
    assert collect_wrt(resolvent1762.two_radical_cofactor(4), 'x').m == 12


def test_two_radical_degree_limit():
    with pytest.raises(UsageError):
        resolvent1762.two_radical_minpoly(5)
    with pytest.raises(UsageError):
        resolvent1762.series_comparison(2)
