"""Polynomial ring operations and the one-variable reorganization.

The arithmetic itself lives on MultiPoly; this service adds the checks
callers rely on (shared VarTable, bound variables) and the operations that
regroup a polynomial by powers of a main variable.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from exceptions import DegenerateInputError, UsageError
from models.polynomial import MultiPoly, UniView, VarTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerReduction:
    """Result of substitute_power: multiplier * p == view (mod relation)"""
    view: UniView
    multiplier: MultiPoly
    steps: int


def _same_table(p, q):
    if p.vars != q.vars:
        raise UsageError(f"mismatched variable tables: {list(p.vars)} vs {list(q.vars)}")


def add(p, q):
    _same_table(p, q)
    return p + q


def sub(p, q):
    _same_table(p, q)
    return p - q


def mul(p, q):
    _same_table(p, q)
    return p * q


def evaluate(p, point):
    """Exact value of p at `point` (a map from variable name to rational)"""
    return p.eval(point)


def polynomial_vars(*names):
    """Shorthand returning the table and one MultiPoly per variable"""
    table = VarTable(tuple(names))
    return (table,) + tuple(MultiPoly.var(n, table) for n in names)


def collect_wrt(p, main):
    """Regroup p as sum(coeffs[i] * main^(m - i)).

    Args:
        p: nonzero MultiPoly
        main: name of the main variable (must be in p's table)

    Returns:
        UniView whose coefficients are free of `main`
    """
    if p.is_zero():
        raise DegenerateInputError("cannot collect the zero polynomial")
    idx = p.vars.index(main)
    m = p.degree_in(main)
    buckets = [dict() for _ in range(m + 1)]
    for mono, coeff in p.terms.items():
        power = mono[idx]
        rest = mono[:idx] + (0,) + mono[idx + 1:]
        buckets[m - power][rest] = coeff
    coeffs = tuple(MultiPoly(p.vars, bucket) for bucket in buckets)
    return UniView(main, p.vars, coeffs)


def reassemble(view):
    return view.reassemble()


def substitute_power(p, relation):
    """Reduce p below the degree of `relation` without leaving the ring.

    Each step multiplies the working coefficient list by the relation's
    leading coefficient A and cancels the top power, so exactly
    deg p - deg relation + 1 steps run and the multiplier is A^steps.

    Returns:
        PowerReduction with the reduced view, the multiplier and the step count
    """
    if relation.is_zero() or relation.m < 1:
        raise UsageError("relation must have degree at least 1 in the main variable")
    if p.main != relation.main:
        raise UsageError(f"main variables differ: {p.main} vs {relation.main}")
    one = MultiPoly.const(1, relation.vars)
    if p.is_zero() or p.m < relation.m:
        return PowerReduction(p, one, 0)
    _same_table(p.coeffs[0], relation.coeffs[0])
    work, multiplier, steps = pseudo_reduce(p.coeffs, relation)
    logger.debug(f"substitute_power: {steps} step(s) modulo degree {relation.m}")
    return PowerReduction(UniView.from_coeffs(p.main, p.vars, work), multiplier, steps)


def pseudo_reduce(coeffs, relation):
    """Reduce a nominal coefficient list (leading zeros allowed) by `relation`.

    Runs exactly len(coeffs) - len(relation.coeffs) + 1 steps whatever the
    actual degree, so the multiplier depends only on the nominal shape.

    Returns:
        (coefficient list of length deg relation, multiplier, steps)
    """
    lead = relation.leading
    zero = MultiPoly.zero(lead.vars)
    width = len(relation.coeffs)
    work = list(coeffs)
    steps = max(len(work) - width + 1, 0)
    for _ in range(steps):
        top = work[0]
        shifted = list(relation.coeffs) + [zero] * (len(work) - width)
        work = [lead * c - top * r for c, r in zip(work, shifted)][1:]
    if len(work) < width - 1:
        work = [zero] * (width - 1 - len(work)) + work
    return work, lead ** steps, steps


def lagrange_interpolate(xs, ys):
    """Coefficients, constant term first, of the polynomial through (xs[i], ys[i]).

    The values may be rationals or MultiPoly sharing one table; the
    coefficients come back in the same kind.
    """
    xs = [Fraction(x) for x in xs]
    if len(set(xs)) != len(xs) or len(xs) != len(ys):
        raise UsageError("interpolation needs one value per distinct node")
    # master numerator (t - x1)(t - x2)...(t - xn)
    root = [Fraction(1)]
    for x in xs:
        root = [s - x * r for s, r in zip([Fraction(0)] + root, root + [Fraction(0)])]
    n = len(xs)
    polys = bool(ys) and isinstance(ys[0], MultiPoly)
    zero = MultiPoly.zero(ys[0].vars) if polys else Fraction(0)
    coeffs = [zero] * n
    for x, y in zip(xs, ys):
        # root / (t - x) by synthetic division
        quotient = [Fraction(0)] * n
        quotient[-1] = root[-1]
        for k in range(n - 1, 0, -1):
            quotient[k - 1] = root[k] + x * quotient[k]
        denominator = sum(c * x ** k for k, c in enumerate(quotient))
        for k, q in enumerate(quotient):
            if q:
                factor = q / denominator
                coeffs[k] = coeffs[k] + (y.scale(factor) if polys else Fraction(y) * factor)
    return coeffs
