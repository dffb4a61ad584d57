"""sympy as an independent oracle for the exact algebra."""
import sympy


def to_sympy(p):
    """MultiPoly -> sympy expression over symbols named like its variables"""
    symbols = [sympy.Symbol(n) for n in p.vars]
    total = sympy.Integer(0)
    for mono, coeff in p.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for s, e in zip(symbols, mono):
            term *= s ** e
        total += term
    return sympy.expand(total)


def assert_proportional(p, q):
    """p = c * q for a nonzero rational c"""
    assert not p.is_zero() and not q.is_zero()
    ratio = p.exact_div(q)
    assert ratio.is_constant() and ratio.constant_value() != 0
