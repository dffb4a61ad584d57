"""System file parsing, diagnostics and report rendering."""
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import ParseError
from models.polynomial import MultiPoly, VarTable
from models.report import EliminationReport
from services import sysio
from services.sysio import parse_polynomial, parse_system, render_report

XYZ = VarTable(('x', 'y', 'z'))

polys_xyz = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)),
    st.fractions(min_value=-50, max_value=50, max_denominator=9),
    max_size=6,
).map(lambda terms: MultiPoly(XYZ, terms))


def diagnostics_of(text):
    with pytest.raises(ParseError) as info:
        parse_system(text)
    return info.value.diagnostics


def linear_report(poly):
    p = poly('2*x - 1', 'x')
    return EliminationReport(
        resultant=p,
        apparent=p,
        stripped_factor=MultiPoly.const(1, p.vars),
        method='sylvester',
        trace=['sylvester layout 2x2'],
    )


def test_two_equation_system(poly):
    system = parse_system('vars: x y\nkeep: y\nx^2*y + 3*x - 1/2 = 0\nx - y = 0')
    assert len(system.equations) == 2
    assert system.keep == 'y'
    assert system.eliminated == ('x',)
    assert system.equations[0] == poly('x^2*y + 3*x - 1/2', 'x y')


def test_implicit_zero_right_hand_side(poly):
    system = parse_system('vars: x\nx^2 + 1')
    assert system.equations == (poly('x^2 + 1', 'x'),)


def test_equation_with_both_sides(poly):
    system = parse_system('vars: x y\nx^2 = y + 1')
    assert system.equations[0] == poly('x^2 - y - 1', 'x y')


def test_params_and_directives(poly):
    system = parse_system('# quadrics\nvars: x\nparams: A B\nmethod: bezoutian\nseed: 4\nA*x^2 + B = 0\nx - 1 = 0')
    assert system.params == ('A', 'B')
    assert system.method == 'bezoutian'
    assert system.seed == 4
    assert system.equations[0] == poly('A*x^2 + B', 'x A B')


def test_operator_precedence(poly):
    assert parse_polynomial('-x^2', ['x']) == poly('0 - x*x', 'x')
    assert parse_polynomial('2*(x + 1)^2', ['x']) == poly('2*x^2 + 4*x + 2', 'x')
    assert parse_polynomial('x - 1 - 1', ['x']) == poly('x - 2', 'x')


def test_undeclared_variable_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial('x + z = 0', ['x'])
    diagnostic = info.value.diagnostics[0]
    assert (diagnostic.line, diagnostic.column) == (1, 5)
    assert "'z'" in diagnostic.message


def test_undeclared_variable_in_file():
    diagnostics = diagnostics_of('vars: x\nx + z = 0')
    assert str(diagnostics[0]) == "line 2, column 5: undeclared variable 'z'"


def test_implicit_multiplication_is_rejected():
    diagnostics = diagnostics_of('vars: x\n2x = 0')
    assert diagnostics[0].line == 2
    assert diagnostics[0].column == 2
    assert "'*'" in diagnostics[0].expected


def test_negation_after_operator_lists_only_atoms():
    with pytest.raises(ParseError) as info:
        parse_polynomial('2*-x', ['x'])
    diagnostic = info.value.diagnostics[0]
    assert diagnostic.column == 3
    assert diagnostic.expected == ('number', 'variable', "'('")


@pytest.mark.parametrize('text, column', [
    ('x^-1', 3),
    ('x^1/2', 3),
    ('(x + 1', 7),
    ('x $ 1', 3),
    ('1/0*x', 1),
])
def test_syntax_error_positions(text, column):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, ['x'])
    assert info.value.diagnostics[0].column == column


def test_duplicate_directive():
    diagnostics = diagnostics_of('vars: x\nvars: y\nx = 0')
    assert 'duplicate' in diagnostics[0].message
    assert diagnostics[0].line == 2


def test_duplicate_variable():
    diagnostics = diagnostics_of('vars: x x\nx = 0')
    assert 'x' in diagnostics[0].message


def test_unknown_method_lists_choices():
    diagnostics = diagnostics_of('vars: x\nmethod: lagrange\nx = 0')
    assert diagnostics[0].expected == sysio.METHODS


def test_missing_vars_and_keep():
    assert 'vars' in diagnostics_of('x = 0')[0].message
    with pytest.raises(ParseError) as info:
        parse_system('vars: x y\nx - y = 0', require_keep=True)
    assert 'keep' in info.value.diagnostics[0].message


def test_keep_must_be_declared():
    assert 'keep' in diagnostics_of('vars: x\nkeep: y\nx = 0')[0].message


def test_bad_seed():
    assert 'seed' in diagnostics_of('vars: x\nseed: -1\nx = 0')[0].message


def test_every_bad_line_is_reported_in_order():
    diagnostics = diagnostics_of('vars: x\nx + y = 0\nmethod: nope\nx ^ = 0')
    assert [d.line for d in diagnostics] == [2, 3, 4]


def test_json_rendering(poly):
    payload = json.loads(render_report(linear_report(poly), 'json'))
    assert payload['schema'] == sysio.SCHEMA_VERSION == 1
    assert payload['resultant'] == {'(1)': '2/1', '(0)': '-1/1'}
    assert 'trace' not in payload
    assert 'trace' in json.loads(render_report(linear_report(poly), 'json', trace=True))


def test_text_rendering(poly):
    text = render_report(linear_report(poly))
    assert 'resultant: 2*x - 1' in text.splitlines()
    assert 'trace:' not in text
    traced = render_report(linear_report(poly), trace=True)
    assert traced.splitlines()[-2:] == ['trace:', '  sylvester layout 2x2']


def test_rendering_is_deterministic(poly):
    first = render_report(linear_report(poly), 'json', trace=True)
    assert render_report(linear_report(poly), 'json', trace=True) == first


@pytest.mark.property_based
@given(polys_xyz)
@settings(max_examples=500)
def test_render_then_parse_is_identity(p):
    assert parse_polynomial(sysio.render_polynomial(p), XYZ) == p


@pytest.mark.property_based
@given(polys_xyz.filter(lambda p: not p.is_zero()), st.data())
@settings(max_examples=100)
def test_error_position_not_after_mutation(p, data):
    text = sysio.render_polynomial(p)
    site = data.draw(st.integers(0, len(text)))
    bad = data.draw(st.sampled_from(['$', ')']))
    mutated = text[:site] + bad + text[site:]
    with pytest.raises(ParseError) as info:
        parse_polynomial(mutated, XYZ)
    assert info.value.diagnostics[0].column <= site + 1


def test_system_report_echoes_canonical_form(samples):
    system = parse_system((samples / 'line_and_conic.psys').read_text(encoding='utf-8'))
    lines = sysio.system_report(system).text_lines()
    assert lines[0] == 'vars: x y'
    assert 'keep: y' in lines
    assert 'x^2 + x*y + y^2 - 5 = 0' in lines
