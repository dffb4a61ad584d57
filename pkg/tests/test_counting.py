"""Term counts, finite differences and degree bounds."""
import itertools
import logging
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import ConstraintViolationError, UnboundVariableError, UsageError
from models.polynomial import MultiPoly, VarTable
from services import counting
from services.counting import DiffSpec, RemovalSpec


def brute_force_removals(n, T, bounds, names):
    count = 0
    for exps in counting.enumerate_monomials(n, T):
        power = dict(zip(names, exps))
        if not any(power[var] >= p for var, p in bounds):
            count += 1
    return count


@pytest.mark.parametrize('n, T, expected', [(1, 4, 5), (1, 0, 1), (2, 3, 10), (3, 3, 20), (2, -1, 0)])
def test_num_terms_complete(n, T, expected):
    assert counting.num_terms_complete(n, T) == expected


def test_num_terms_matches_enumeration():
    for n in range(1, 4):
        for T in range(6):
            assert counting.num_terms_complete(n, T) == len(list(counting.enumerate_monomials(n, T)))


def test_num_terms_needs_a_variable():
    with pytest.raises(UsageError):
        counting.num_terms_complete(0, 3)


def test_default_variable_names():
    assert counting.default_variable_names(2) == ('u', 'x')
    assert counting.default_variable_names(6) == ('u', 'x', 'y', 'z', 'x5', 'x6')


def test_finite_difference_cubic(poly):
    names = 'x k'
    p = poly('x^3 - 5*x^2 + 3*x - 6', names)
    k = MultiPoly.var('k', VarTable(('x', 'k')))
    result = counting.finite_difference(p, DiffSpec((('x', k),)))
    assert result == poly('3*x^2*k + 3*x*k^2 - 10*x*k + k^3 - 5*k^2 + 3*k', names)


def test_finite_difference_constant(poly):
    assert counting.finite_difference(poly('7', 'x'), DiffSpec((('x', 2),))).is_zero()


def test_finite_difference_rising_product(poly):
    names = 'x a b'
    p = poly('(x + a)*(x + a + b)*(x + a + 2*b)', names)
    b = MultiPoly.var('b', VarTable(('x', 'a', 'b')))
    result = counting.finite_difference(p, DiffSpec((('x', b),)))
    assert result == poly('3*b*(x + a + b)*(x + a + 2*b)', names)


XY = VarTable(('x', 'y'))

polys_xy = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9), max_size=6,
).map(lambda terms: MultiPoly(XY, terms))


@pytest.mark.property_based
@given(polys_xy, st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=50)
def test_finite_differences_commute(p, a, b):
    forward = counting.finite_difference(p, DiffSpec((('x', a), ('y', b))))
    backward = counting.finite_difference(p, DiffSpec((('y', b), ('x', a))))
    assert forward == backward
    twice = counting.finite_difference(p, DiffSpec((('x', a), ('x', b))))
    assert twice == counting.finite_difference(p, DiffSpec((('x', b), ('x', a))))


def test_finite_difference_unknown_variable(poly):
    with pytest.raises(UnboundVariableError):
        counting.finite_difference(poly('x^2', 'x'), DiffSpec((('y', 1),)))


def test_terms_after_removals_worked_example():
    spec = RemovalSpec((('u', 2), ('x', 1)))
    assert counting.terms_after_removals(2, 3, spec) == 2


def test_empty_removal_is_complete_count():
    assert counting.terms_after_removals(3, 4, RemovalSpec(())) == counting.num_terms_complete(3, 4)


def test_removal_variable_must_be_named():
    with pytest.raises(UsageError):
        counting.terms_after_removals(2, 3, RemovalSpec((('z', 1),)))


@pytest.mark.property_based
@given(st.data())
@settings(max_examples=80)
def test_removals_match_enumeration(data):
    n = data.draw(st.integers(1, 4))
    T = data.draw(st.integers(0, 8))
    names = counting.default_variable_names(n)
    chosen = data.draw(st.lists(st.sampled_from(names), unique=True, max_size=n))
    bounds = tuple((var, data.draw(st.integers(1, 4))) for var in chosen)
    expected = brute_force_removals(n, T, bounds, names)
    assert counting.terms_after_removals(n, T, RemovalSpec(bounds)) == expected


@pytest.mark.property_based
@given(st.data())
@settings(max_examples=60)
def test_removal_order_does_not_matter(data):
    n = data.draw(st.integers(1, 4))
    T = data.draw(st.integers(0, 8))
    names = counting.default_variable_names(n)
    chosen = data.draw(st.lists(st.sampled_from(names), unique=True, min_size=1, max_size=n))
    bounds = [(var, data.draw(st.integers(1, T + 1))) for var in chosen]
    shuffled = data.draw(st.permutations(bounds))
    assert counting.terms_after_removals(n, T, RemovalSpec(tuple(bounds))) == counting.terms_after_removals(
        n, T, RemovalSpec(tuple(shuffled))
    )


def test_removal_spec_parse():
    assert RemovalSpec.parse('u:2,x:1').bounds == (('u', 2), ('x', 1))
    assert RemovalSpec.parse('').bounds == ()
    for text in ('u2', 'u:two', 'u:0', 'u:1,u:2'):
        with pytest.raises(UsageError):
            RemovalSpec.parse(text)


def test_progression_lemma_two_rows():
    assert counting.progression_lemma_sum((3, 5), 1) == 9
    assert counting.progression_lemma_sum((3, 5, 7), 0) == 15


@pytest.mark.property_based
@given(st.lists(st.integers(-10, 10), min_size=1, max_size=5), st.integers(-3, 3))
@settings(max_examples=40)
def test_every_transversal_has_the_lemma_sum(first_row, k):
    expected = counting.progression_lemma_sum(first_row, k)
    assert all(s == expected for s in counting.transversal_sums(first_row, k))


def test_progression_table_rows_grow_by_k():
    table = counting.progression_table((1, 2), Fraction(1, 2))
    assert table == [[1, 2], [Fraction(3, 2), Fraction(5, 2)]]


@pytest.mark.parametrize('degrees, expected', [((2, 1, 1), 2), ((5,), 5), ((3, 2, 2), 12), ((2, 3), 6)])
def test_resultant_degree_complete(degrees, expected):
    assert counting.resultant_degree_complete(degrees) == expected


@pytest.mark.slow
def test_degree_theorem_exhaustive():
    for n in range(1, 5):
        for degrees in itertools.product(range(1, 6), repeat=n):
            value = counting.degree_by_differences(degrees)
            assert value.is_constant()
            assert value == math.prod(degrees)


def test_degree_by_differences_is_constant():
    value = counting.degree_by_differences((3, 2, 2))
    assert value.is_constant()
    assert value == 12


def test_resultant_degree_rejects_zero_degree():
    with pytest.raises(UsageError):
        counting.resultant_degree_complete((2, 0))


@pytest.mark.parametrize('t', [1, 2, 3, 4])
def test_optimal_n2_symmetric(t):
    assert counting.optimal_n2_1764(t, t, t, 0, 0, 0) == Fraction(3 * t, 2) - t - 1


def test_degree_bound_3eq_at_zero():
    m, mp, ms = 3, 3, 2
    closed = m * mp - m - mp + ms + 1
    assert counting.degree_bound_3eq_1764(m, mp, ms, 0, 0, 0, 0) == closed


def test_degree_bound_3eq_infeasible():
    with pytest.raises(ConstraintViolationError):
        counting.degree_bound_3eq_1764(3, 3, 2, 0, 0, 0, -1)
    with pytest.raises(ConstraintViolationError):
        counting.degree_bound_3eq_1764(3, 3, 2, 0, 0, 0, 2)


def test_sweep_records_shortfall(caplog):
    with caplog.at_level(logging.WARNING, logger='services.counting'):
        sweep = counting.sweep_3eq_1764(2, 2, 2)
    assert sweep.points == ((0, 3),)
    assert sweep.minimum == 3
    assert sweep.product == 8
    assert not sweep.consistent
    assert 'falls below the product' in caplog.text


def test_sweep_without_feasible_point():
    with pytest.raises(ConstraintViolationError):
        counting.sweep_3eq_1764(1, 1, 1)
