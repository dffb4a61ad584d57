"""Solvable classes of equations of any degree and their radical roots.

An equation x^n + p*x^(n-2) + q*x^(n-3) + ... = 0 belongs to the class of
(a, b) when it coincides with

    (E)  (a*(x + b)^n - b*(x + a)^n) / (a - b) = 0

whose coefficient of x^(n-k) is -C(n,k) * ab * h_(k-2)(a, b), h_j being the
complete homogeneous symmetric polynomial of degree j. Only a + b and ab
enter, so the coefficients stay rational even when a and b are not. The
roots are the sums of n-1 mean proportionals between a and b.

For the two-radical sums x = u + v with u^n = a^(n-1)*b and v^n = a^(n-2)*b^2
the full elimination of u and v has degree n^2 in x and mixes every pair of
branches. The coherent branches satisfy u^2 = a*v; the factor they carry is
split off by its gcd with the elimination of u against u^2 + a*u - a*x = 0.

Radical evaluation is the only floating-point code in the package; it runs
on sympy's arbitrary-precision evalf.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from config import Config
from exceptions import BranchFailureError, DegenerateClassError, UsageError
from models.base import ReportMixin
from models.polynomial import MultiPoly, VarTable
from models.report import ClassReport
from services.polyring import collect_wrt, polynomial_vars
from services.resultant2 import resultant

logger = logging.getLogger(__name__)

TWO_RADICAL_DEGREES = (3, 4)


@dataclass(frozen=True)
class SolvableClass(ReportMixin):
    """Class data; coeffs are the coefficients of (E), x^n first"""
    n: int
    p: Fraction
    q: Fraction
    e1: Fraction
    e2: Fraction
    coeffs: tuple

    def equation(self, var='x'):
        table = VarTable((var,))
        return MultiPoly(table, {(self.n - k,): c for k, c in enumerate(self.coeffs)})

    def quadratic(self):
        """Coefficients of X^2 - (a+b)X + ab, whose roots are a and b"""
        return (Fraction(1), -self.e1, self.e2)


@dataclass(frozen=True)
class RadicalRoot(ReportMixin):
    value: object
    branch: int
    residual: object


@dataclass(frozen=True)
class SeriesTerm(ReportMixin):
    power: int
    series: MultiPoly
    eliminated: MultiPoly
    agrees: bool


def solvable_class(n, p, q):
    """Equation (E) matching x^n + p*x^(n-2) + q*x^(n-3) + ...

    Raises:
        DegenerateClassError: p = 0 (the general case only is handled)
    """
    if not isinstance(n, int) or n < 3:
        raise UsageError(f"class degree must be an integer >= 3, got {n!r}")
    p, q = Fraction(p), Fraction(q)
    if p == 0:
        raise DegenerateClassError("p = 0 leaves ab = 0: no class of the general form")
    e2 = -p / math.comb(n, 2)
    e1 = -q / (math.comb(n, 3) * e2)
    h = [Fraction(1), e1]
    for _ in range(2, n - 1):
        h.append(e1 * h[-1] - e2 * h[-2])
    coeffs = [Fraction(1), Fraction(0)]
    coeffs.extend(-math.comb(n, k) * e2 * h[k - 2] for k in range(2, n + 1))
    return SolvableClass(n, p, q, e1, e2, tuple(coeffs))


def _rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _tolerance(digits):
    return sympy.Rational(1, 10 ** (digits - 2))


def _relative_residual(coeffs, x, dps):
    exact = [_rational(c) for c in coeffs]
    value = sympy.Integer(0)
    for c in exact:
        value = value * x + c
    scale = 1 + max(abs(c) for c in exact)
    return sympy.N(abs(sympy.N(value, dps)) / scale, dps)


def class_endpoints(cls):
    """a and b as exact sympy numbers (complex when the discriminant is negative)"""
    e1, e2 = _rational(cls.e1), _rational(cls.e2)
    root = sympy.sqrt(e1 ** 2 - 4 * e2)
    return (e1 + root) / 2, (e1 - root) / 2


def _chop(x, tolerance):
    """Zero a real or imaginary part below tolerance * (1 + |x|)"""
    bound = tolerance * (1 + abs(x))
    real, imag = sympy.re(x), sympy.im(x)
    if abs(imag) < bound:
        imag = 0
    if abs(real) < bound:
        real = 0
    return real + imag * sympy.I


def radical_root(cls, digits=None):
    """x = sum of the n-1 radicals (a^(n-j) * b^j)^(1/n), branches chosen coherently.

    With alpha, beta principal n-th roots of a and b, branch t uses
    alpha^(n-j) * (beta * w^t)^j, w = exp(2*pi*i/n); the first branch whose
    relative residual on (E) is below 10^(-digits+2) is returned.

    Raises:
        BranchFailureError: no branch meets the residual bound
    """
    digits = Config.RADICAL_DIGITS if digits is None else digits
    n = cls.n
    dps = digits + 10
    a, b = class_endpoints(cls)
    alpha = sympy.N(sympy.root(a, n), dps)
    beta = sympy.N(sympy.root(b, n), dps)
    tolerance = _tolerance(digits)
    best = None
    for t in range(n):
        b_t = sympy.N(beta * sympy.exp(2 * sympy.pi * sympy.I * t / n), dps)
        x = sympy.N(sympy.Add(*(alpha ** (n - j) * b_t ** j for j in range(1, n))), dps)
        residual = _relative_residual(cls.coeffs, x, dps)
        logger.debug(f"radical_root: branch {t} residual {sympy.N(residual, 5)}")
        if residual < tolerance:
            return RadicalRoot(_chop(sympy.N(x, dps), tolerance), t, residual)
        if best is None or residual < best:
            best = residual
    raise BranchFailureError(
        f"no branch of the radical sum satisfies (E) within 1e-{digits - 2} (best {sympy.N(best, 5)})"
    )


def solve_class(n, p, q, digits=None):
    """Class equation and one radical root as a ClassReport"""
    digits = Config.RADICAL_DIGITS if digits is None else digits
    cls = solvable_class(n, p, q)
    root = radical_root(cls, digits)
    a, b = class_endpoints(cls)
    trace = [
        f"ab = -p/C({n},2) = {cls.e2}",
        f"a + b = -q/(C({n},3)*ab) = {cls.e1}",
        f"a, b = {sympy.N(a, digits)}, {sympy.N(b, digits)}",
    ]
    trace.extend(f"coefficient of x^{n - k}: {c}" for k, c in enumerate(cls.coeffs))
    return ClassReport(
        n=n,
        e1=cls.e1,
        e2=cls.e2,
        equation=cls.equation(),
        root=str(sympy.N(root.value, digits)),
        branch=root.branch,
        residual=str(sympy.N(root.residual, 3)),
        trace=trace,
    )


# -- two-radical families ------------------------------------------------

def _check_two_radical_degree(n):
    if n not in TWO_RADICAL_DEGREES:
        raise UsageError(f"two-radical polynomials are available for n in {TWO_RADICAL_DEGREES}, got {n}")


@lru_cache
def _two_radical_elimination(n):
    """Full elimination of u, v from u^n = a^(n-1)b, v^n = a^(n-2)b^2, x = u + v,
    and its coherent factor, monic in x.

    The coherent factor is the gcd of the full elimination with the
    elimination of u against u^2 + a*u - a*x = 0.
    """
    _, u, x, A, B = polynomial_vars('u', 'x', 'a', 'b')
    first = u ** n - A ** (n - 1) * B
    second = (x - u) ** n - A ** (n - 2) * B ** 2
    branch = u ** 2 + A * u - A * x
    full = resultant(collect_wrt(first, 'u'), collect_wrt(second, 'u')).restrict(('x', 'a', 'b'))
    coherent = resultant(collect_wrt(first, 'u'), collect_wrt(branch, 'u')).restrict(('x', 'a', 'b'))
    lead = collect_wrt(coherent, 'x').leading
    if len(lead.terms) != 1:
        raise ArithmeticError(f"unexpected leading coefficient {lead}")
    coherent = coherent.exact_div(lead)
    if not coherent.divides(full):
        raise BranchFailureError(f"coherent branches of degree {n} do not divide the full elimination")
    logger.debug(f"two_radical: n={n}, full elimination of degree {full.degree_in('x')}")
    return full, coherent


def two_radical_minpoly(n, a=None, b=None):
    """Polynomial in x (over a, b) satisfied by x = (a^(n-1)b)^(1/n) + (a^(n-2)b^2)^(1/n).

    The full elimination admits every pair of branches; the coherent ones,
    u^2 = a*v, carry the factor returned here, monic in x. With rational `a`
    and `b` the parameters are substituted afterwards and the result lives
    over (x,).

    Raises:
        BranchFailureError: the coherent factor does not divide the full elimination
    """
    _check_two_radical_degree(n)
    poly = _two_radical_elimination(n)[1]
    if a is None and b is None:
        return poly
    if a is None or b is None:
        raise UsageError("give both a and b, or neither")
    return poly.specialize({'a': Fraction(a), 'b': Fraction(b)}).restrict(('x',))


def two_radical_cofactor(n):
    """Quotient of the full elimination by two_radical_minpoly: the incoherent branches"""
    _check_two_radical_degree(n)
    full, coherent = _two_radical_elimination(n)
    return full.exact_div(coherent)


def two_radical_value(n, a, b, digits=None):
    """Numeric x = u + u^2/a with u the principal root of a^(n-1)*b"""
    _check_two_radical_degree(n)
    digits = Config.RADICAL_DIGITS if digits is None else digits
    if Fraction(a) == 0:
        raise DegenerateClassError("a = 0 leaves the second radical undetermined")
    a, b = _rational(a), _rational(b)
    u = sympy.root(a ** (n - 1) * b, n)
    return sympy.N(u + u ** 2 / a, digits + 10)


def two_radical_residual(n, a, b, digits=None):
    """Relative residual of two_radical_value on two_radical_minpoly"""
    digits = Config.RADICAL_DIGITS if digits is None else digits
    poly = two_radical_minpoly(n, a, b)
    coeffs = [poly.coeff((k,)) for k in range(n, -1, -1)]
    return _relative_residual(coeffs, two_radical_value(n, a, b, digits), digits + 10)


def series_polynomial(n):
    """x^n minus the published series, as far as its coefficients are nonzero.

    The constant terms are a^(n-1)b +- a^(n-2)b^2 (+ for odd n); the
    coefficient of x^(p-1) is n * prod((n-p-i)/2, i < p-2) * a^(n-p) * b.
    """
    _check_two_radical_degree(n)
    _, x, A, B = polynomial_vars('x', 'a', 'b')
    sign = 1 if n % 2 else -1
    rhs = A ** (n - 1) * B + sign * A ** (n - 2) * B ** 2
    for p in range(2, n + 1):
        factor = Fraction(n)
        for i in range(p - 2):
            factor *= Fraction(n - p - i, 2)
        if factor == 0:
            break
        rhs = rhs + factor * A ** (n - p) * B * x ** (p - 1)
    return x ** n - rhs


def series_comparison(n):
    """Term-by-term agreement between the series and the eliminated polynomial"""
    series = series_polynomial(n)
    eliminated = two_radical_minpoly(n).with_vars(series.vars)
    series_view = collect_wrt(series, 'x')
    eliminated_view = collect_wrt(eliminated, 'x')
    terms = []
    for power in range(n, -1, -1):
        s = series_view.coeff_of_power(power)
        e = eliminated_view.coeff_of_power(power)
        terms.append(SeriesTerm(power, s, e, s == e))
    disagreements = [t.power for t in terms if not t.agrees]
    if disagreements:
        logger.info(f"series_comparison: n={n} differs at powers {disagreements}")
    return terms
