"""Two-equation elimination.

Sylvester layout, resultant, the Bézoutian for equal and unequal degrees,
the two-equation degree bound and the Bézout identity. Sign conventions:
Sylvester columns hold the f-block first, powers descending, so
resultant(f, g) is the classical Res(f, g). The Bézoutian determinant is
eps(m) * Res with eps(m) = (-1)^(m(m+1)/2). For deg f = m > n = deg g the
reduced Bézoutian satisfies

    det = (-1)^(n(n-1)/2 + mn) * A'^((n-1)(m-n)) * Res(f, g)

where A' is the leading coefficient of g.
"""
import logging
from enum import Enum
from fractions import Fraction

from exceptions import DegenerateInputError, NotCoprimeError, UsageError
from models.layouts import BezoutianLayout, IdentityWitness, SylvesterLayout, UnequalBezoutianLayout
from models.matrix import RingMatrix
from models.polynomial import MultiPoly, UniView
from models.report import EliminationReport
from services import exactla
from services.polyring import collect_wrt, pseudo_reduce

logger = logging.getLogger(__name__)


class OracleVerdict(Enum):
    AGREE = 'agree'
    DISAGREE = 'disagree'
    SKIPPED = 'skipped'


def _check_pair(f, g):
    if f.is_zero() or g.is_zero():
        raise DegenerateInputError("both polynomials must be nonzero in the main variable")
    if f.main != g.main:
        raise UsageError(f"main variables differ: {f.main} vs {g.main}")
    if f.vars != g.vars:
        raise UsageError("polynomials must share one variable table")


def _mul_lists(a, b, zero):
    """Product of two descending coefficient lists"""
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _sub_lists(a, b, zero):
    """Difference of descending lists aligned on the constant term"""
    width = max(len(a), len(b))
    a = [zero] * (width - len(a)) + list(a)
    b = [zero] * (width - len(b)) + list(b)
    return [x - y for x, y in zip(a, b)]


def sylvester_matrix(f, g):
    """Sylvester layout of f (degree m) and g (degree m')"""
    _check_pair(f, g)
    m, mp = f.m, g.m
    if m < 1 or mp < 1:
        raise UsageError(f"sylvester_matrix needs degrees >= 1 in {f.main}, got {m} and {mp}")
    zero = MultiPoly.zero(f.vars)
    size = m + mp
    rows = [[zero] * size for _ in range(size)]
    for j in range(mp):
        for i, c in enumerate(f.coeffs):
            rows[i + j][j] = c
    for j in range(m):
        for i, c in enumerate(g.coeffs):
            rows[i + j][mp + j] = c
    logger.debug(f"sylvester_matrix: {size}x{size} for degrees {m}, {mp}")
    return SylvesterLayout(f, g, RingMatrix.from_rows(rows, f.vars))


def resultant(f, g):
    return exactla.det_fraction_free(sylvester_matrix(f, g).matrix)


def bezoutian_sign(m):
    return -1 if (m * (m + 1) // 2) % 2 else 1


def bezoutian_matrix(f, g):
    """Symmetric m x m matrix whose row i is g_i*f - f_i*g.

    f_i and g_i are the truncations keeping the i highest coefficients, so
    the top powers cancel and each difference has degree m-1.
    """
    _check_pair(f, g)
    if f.m != g.m:
        raise UsageError(
            f"bezoutian_matrix needs equal degrees (got {f.m} and {g.m}); use bezoutian_unequal"
        )
    m = f.m
    if m < 1:
        raise UsageError("bezoutian_matrix needs degree >= 1")
    zero = MultiPoly.zero(f.vars)
    rows, provenance = [], []
    for i in range(1, m + 1):
        fi, gi = list(f.coeffs[:i]), list(g.coeffs[:i])
        diff = _sub_lists(_mul_lists(gi, f.coeffs, zero), _mul_lists(fi, g.coeffs, zero), zero)
        rows.append(diff[-m:])
        provenance.append((UniView.from_coeffs(f.main, f.vars, fi), UniView.from_coeffs(f.main, f.vars, gi)))
    return BezoutianLayout(f, g, RingMatrix.from_rows(rows, f.vars), tuple(provenance))


def bezoutian_unequal(f, g):
    """Reduced Bézoutian for deg f = m > deg g = n.

    g is first lifted to g*x^(m-n); the first n difference rows (degree
    m-1) are then brought down to degree n-1 by exactly m-n substitution
    steps modulo g each. The returned layout carries the extraneous power
    of g's leading coefficient and the sign relating det to resultant(f, g).
    """
    _check_pair(f, g)
    m, n = f.m, g.m
    if not m > n >= 1:
        raise UsageError(f"bezoutian_unequal needs deg f > deg g >= 1, got {m} and {n}")
    zero = MultiPoly.zero(f.vars)
    lifted = list(g.coeffs) + [zero] * (m - n)
    rows = []
    for i in range(1, n + 1):
        diff = _sub_lists(
            _mul_lists(lifted[:i], f.coeffs, zero), _mul_lists(list(f.coeffs[:i]), lifted, zero), zero
        )
        reduced, _, _ = pseudo_reduce(diff[-m:], g)
        rows.append(reduced)
    exponent = (n - 1) * (m - n)
    sign = -1 if (n * (n - 1) // 2 + m * n) % 2 else 1
    logger.debug(f"bezoutian_unequal: m={m} n={n}, {n * (m - n)} substitution steps in total")
    return UnequalBezoutianLayout(
        f, g, RingMatrix.from_rows(rows, f.vars), g.leading ** exponent, sign, n * (m - n)
    )


def effective_offset(view):
    """Smallest p with deg(coeff_i) <= p + i for every coefficient"""
    return max(d - i for i, d in enumerate(view.p_offsets) if d != float('-inf'))


def degree_bound_two(m, mp, p, pp):
    """G = mm' + mp' + m'p"""
    if m < 1 or mp < 1:
        raise UsageError("degree_bound_two needs m, m' >= 1")
    return m * mp + m * pp + mp * p


# -- univariate helpers (ascending Fraction lists) ------------------------

def _ascending(view):
    if not view.is_univariate():
        raise UsageError(f"'{view}' has non-constant coefficients")
    return list(reversed(view.rational_coeffs()))


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a, b):
    a, b = _trim(a), _trim(b)
    quotient = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        quotient[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        a = _trim(a)
    return _trim(quotient), a


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _sub(a, b):
    width = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (width - len(a))
    b = list(b) + [Fraction(0)] * (width - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _to_view(coeffs, like):
    zero = MultiPoly.zero(like.vars)
    desc = [MultiPoly.const(c, like.vars) if c else zero for c in reversed(_trim(coeffs))]
    return UniView.from_coeffs(like.main, like.vars, desc)


def extended_gcd(P, Q):
    """Extended Euclid: (g, s, t) with s*P + t*Q = g and g monic"""
    a, b = _trim(_ascending(P)), _trim(_ascending(Q))
    if not a and not b:
        raise UsageError("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1))
        t0, t1 = t1, _sub(t0, _mul(q, t1))
    lead = r0[-1]
    g, s, t = ([x / lead for x in xs] for xs in (r0, s0, t0))
    return _to_view(g, P), _to_view(s, P), _to_view(t, P)


def gcd_euclid(P, Q):
    """Monic gcd of two univariate polynomials"""
    return extended_gcd(P, Q)[0]


def bezout_identity(P, Q):
    """Witness L1, L2 with L1*P + L2*Q = 1, deg L1 < deg Q and deg L2 < deg P.

    The coefficients come from the Sylvester system with right-hand side
    (0, ..., 0, 1), solved by the lines rule.

    Raises:
        NotCoprimeError: the resultant vanishes
    """
    _check_pair(P, Q)
    if not (P.is_univariate() and Q.is_univariate()):
        raise UsageError("bezout_identity needs rational coefficients")
    vars = P.vars
    zero_view = UniView.zero(P.main, vars)
    if P.m == 0:
        return IdentityWitness(_to_view([1 / P.rational_coeffs()[0]], P), zero_view)
    if Q.m == 0:
        return IdentityWitness(zero_view, _to_view([1 / Q.rational_coeffs()[0]], P))
    layout = sylvester_matrix(P, Q)
    size = layout.matrix.rows
    constants = [0] * (size - 1) + [1]
    solution = exactla.lines_rule_solve(layout.matrix, constants)
    if not solution.solvable:
        raise NotCoprimeError(f"'{P}' and '{Q}' have a common factor (resultant is 0)")
    den = solution.denominator.constant_value()
    values = [v.constant_value() / den for v in solution.values]
    mp = Q.m
    l1 = [MultiPoly.const(v, vars) for v in values[:mp]]
    l2 = [MultiPoly.const(v, vars) for v in values[mp:]]
    return IdentityWitness(
        UniView.from_coeffs(P.main, vars, l1), UniView.from_coeffs(P.main, vars, l2)
    )


def specialization_oracle(f, g, y0, var=None):
    """Compare resultant(f, g) at var=y0 with the resultant of the specialized pair"""
    _check_pair(f, g)
    if var is None:
        others = {n for c in f.coeffs + g.coeffs for n in c.variables()}
        if len(others) != 1:
            raise UsageError(f"cannot infer the coefficient variable from {sorted(others)}")
        var = others.pop()
    point = {var: Fraction(y0)}
    if f.leading.specialize(point).is_zero() or g.leading.specialize(point).is_zero():
        logger.debug(f"specialization_oracle: leading coefficient vanishes at {var}={y0}")
        return OracleVerdict.SKIPPED
    symbolic = resultant(f, g).eval(point)
    fs = collect_wrt(f.reassemble().specialize(point), f.main)
    gs = collect_wrt(g.reassemble().specialize(point), g.main)
    direct = resultant(fs, gs).constant_value()
    return OracleVerdict.AGREE if symbolic == direct else OracleVerdict.DISAGREE


def eliminate_pair(f, g, method='sylvester', keep=None):
    """Two-equation elimination as an EliminationReport.

    sylvester: apparent = resultant, stripped factor 1.
    bezoutian: equal degrees give apparent = eps(m) * resultant; unequal
    degrees give apparent = sign * A'^k * resultant.
    """
    _check_pair(f, g)
    one = MultiPoly.const(1, f.vars)
    trace = [f"eliminate {f.main} from", f"  f = {f}", f"  g = {g}"]
    if method == 'sylvester':
        layout = sylvester_matrix(f, g)
        matrix = layout.matrix
        apparent = exactla.det_fraction_free(matrix)
        stripped = one
        trace.append(f"Sylvester matrix {matrix.rows}x{matrix.cols} (f-block {g.m} columns, g-block {f.m})")
    elif method == 'bezoutian':
        swapped = f.m < g.m
        if swapped:
            f, g = g, f
            trace.append("operands swapped so that deg f >= deg g")
        if f.m == g.m:
            layout = bezoutian_matrix(f, g)
            stripped = one * bezoutian_sign(f.m)
            trace.append(f"Bezoutian {f.m}x{f.m}, rows g_i*f - f_i*g")
        else:
            layout = bezoutian_unequal(f, g)
            stripped = layout.extraneous * layout.sign
            trace.append(
                f"reduced Bezoutian {g.m}x{g.m}: g lifted by x^{f.m - g.m}, "
                f"{layout.substitution_exponent} substitution steps"
            )
        if swapped and (f.m * g.m) % 2:
            stripped = -stripped
        matrix = layout.matrix
        apparent = exactla.det_fraction_free(matrix)
    else:
        raise UsageError(f"unknown two-equation method '{method}'")
    trace.extend('  ' + line for line in matrix.text_lines())
    result = apparent.exact_div(stripped)
    trace.append(f"final line: {apparent}")
    notes = []
    if result.is_zero():
        notes.append("resultant vanishes identically: infinite solution set (common component)")
    bound = None
    if len(f.vars) == 2:
        bound = degree_bound_two(f.m, g.m, effective_offset(f), effective_offset(g))
    keep_names = tuple(keep) if keep else tuple(n for n in f.vars if n != f.main)
    return EliminationReport(
        resultant=result.restrict(keep_names),
        apparent=apparent.restrict(keep_names),
        stripped_factor=stripped.restrict(keep_names),
        method=method,
        plan=None,
        matrices=[matrix],
        degree_bound=bound,
        notes=notes,
        trace=trace,
    )
