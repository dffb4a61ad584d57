"""Term counting for complete polynomials and the finite-difference calculus.

N(n, T) is the number of monomials of degree <= T in n variables,
extended by N(n, T) = 0 for T < 0 so that the removal formulas stay total.
Removing the terms divisible by u^A, x^B, ... is the iterated difference
of N with steps -A, -B, ... (up to the sign (-1)^k).
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from exceptions import ConstraintViolationError, UnboundVariableError, UsageError
from models.base import ReportMixin
from models.polynomial import MultiPoly, VarTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiffSpec:
    """Ordered (variable, step) pairs; step is a rational or a MultiPoly"""
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple(tuple(s) for s in self.steps))


@dataclass(frozen=True)
class RemovalSpec:
    """Ordered (variable, power) pairs on distinct variables"""
    bounds: tuple

    def __post_init__(self):
        bounds = tuple((str(v), int(p)) for v, p in self.bounds)
        object.__setattr__(self, 'bounds', bounds)
        names = [v for v, _ in bounds]
        if len(set(names)) != len(names):
            raise UsageError(f"removal variables must be distinct, got {names}")
        for var, power in bounds:
            if power < 1:
                raise UsageError(f"removal power for {var} must be >= 1, got {power}")

    @classmethod
    def parse(cls, text):
        """Read "u:2,x:1" (empty text gives the empty spec)"""
        bounds = []
        for item in filter(None, (part.strip() for part in text.split(','))):
            var, sep, power = item.partition(':')
            if not sep or not power.strip().isdigit():
                raise UsageError(f"bad removal item '{item}' (expected var:power)")
            bounds.append((var.strip(), int(power)))
        return cls(tuple(bounds))

    @property
    def powers(self):
        return [p for _, p in self.bounds]


def default_variable_names(n):
    """u, x, y, z, then x5, x6, ..."""
    base = ('u', 'x', 'y', 'z')
    return base[:n] + tuple(f"x{i}" for i in range(5, n + 1))


def num_terms_complete(n, T):
    """N(u...n)^T = (T+1)(T+2)...(T+n) / n!"""
    if n < 1:
        raise UsageError(f"number of variables must be >= 1, got {n}")
    if T < 0:
        return 0
    return math.comb(T + n, n)


def enumerate_monomials(n, T):
    """Every exponent vector of n variables with total degree <= T"""
    for exps in itertools.product(range(T + 1), repeat=n):
        if sum(exps) <= T:
            yield exps


def finite_difference(p, spec):
    """Apply X -> X(var + step) - X for each listed step, in order"""
    for var, step in spec.steps:
        if var not in p.vars:
            raise UnboundVariableError(var, f"difference variable '{var}' is not in {list(p.vars)}")
        x = MultiPoly.var(var, p.vars)
        p = p.substitute({var: x + step}) - p
    return p


def _iterated_difference(n, T, steps):
    if not steps:
        return num_terms_complete(n, T)
    *earlier, last = steps
    return _iterated_difference(n, T - last, earlier) - _iterated_difference(n, T, earlier)


def terms_after_removals(n, T, spec, names=None):
    """Number of terms of (u...n)^T divisible by none of the listed powers"""
    names = tuple(names) if names is not None else default_variable_names(n)
    for var, _ in spec.bounds:
        if var not in names:
            raise UsageError(f"removal variable '{var}' is not among {list(names)}")
    k = len(spec.bounds)
    value = _iterated_difference(n, T, spec.powers)
    return value if k % 2 == 0 else -value


def progression_lemma_sum(first_row, k):
    """S + k*n(n-1)/2 for an n-row table whose rows grow by k"""
    n = len(first_row)
    if n < 1:
        raise UsageError("progression table needs at least one entry")
    return sum(Fraction(v) for v in first_row) + Fraction(k) * n * (n - 1) / 2


def progression_table(first_row, k):
    n = len(first_row)
    return [[Fraction(first_row[j]) + Fraction(k) * i for j in range(n)] for i in range(n)]


def transversal_sums(first_row, k):
    """Sum of every transversal (one entry per row and per column)"""
    table = progression_table(first_row, k)
    n = len(table)
    for columns in itertools.permutations(range(n)):
        yield sum(table[i][j] for i, j in enumerate(columns))


def degree_by_differences(degrees):
    """(1/n!) d^n[(T+t)^n] with steps (t, t1, ..., t_{n-1}) over a symbolic T"""
    degrees = list(degrees)
    n = len(degrees)
    table = VarTable(('T',))
    T = MultiPoly.var('T', table)
    expr = (T + degrees[0]) ** n
    result = finite_difference(expr, DiffSpec(tuple(('T', d) for d in degrees)))
    return result / math.factorial(n)


def resultant_degree_complete(degrees):
    """Degree of the resultant of complete equations: the product of the degrees"""
    degrees = list(degrees)
    if not degrees or any(d < 1 for d in degrees):
        raise UsageError(f"degrees must all be >= 1, got {degrees}")
    product = math.prod(degrees)
    by_differences = degree_by_differences(degrees)
    if by_differences != product:
        raise ArithmeticError(f"difference evaluation gave {by_differences}, expected {product}")
    return product


# -- three equations, 1764 memoir ------------------------------------------

@dataclass(frozen=True)
class ThreeEquationSweep(ReportMixin):
    """Feasible (n'', G) points with their minimum, set against m*m'*m''"""
    points: tuple
    minimum: int
    minimizer: int
    product: int
    consistent: bool


def _first_multiplier_degree(mp, n2):
    return mp - n2 - 2


def degree_bound_3eq_1764(m, mp, ms, p, pp, ps, n2):
    """G for three equations with multiplier degrees n = m' - n'' - 2, n'' given.

    Raises:
        ConstraintViolationError: n'' outside the feasible region
    """
    n = _first_multiplier_degree(mp, n2)
    violated = []
    if n2 < 0:
        violated.append("n'' >= 0")
    if m + n < ms + n2:
        violated.append("m + n >= m'' + n''")
    if mp - 2 < n2:
        violated.append("m' - 2 >= n''")
    if violated:
        raise ConstraintViolationError(f"n''={n2} violates {', '.join(violated)}")
    return (
        m * mp + p * mp + pp * m - m - mp + ms - p - pp + ps + 1
        - (p + pp - ps + m + mp - ms - n2 - 2) * n2
    )


def optimal_n2_1764(m, mp, ms, p, pp, ps):
    """Unconstrained minimizer of G in n'' (may be fractional)"""
    return Fraction(m + mp + ms + p + pp + ps, 2) - ms - ps - 1


def sweep_3eq_1764(m, mp, ms, p=0, pp=0, ps=0):
    points = []
    for n2 in range(0, max(mp - 1, 0)):
        try:
            points.append((n2, degree_bound_3eq_1764(m, mp, ms, p, pp, ps, n2)))
        except ConstraintViolationError:
            continue
    if not points:
        raise ConstraintViolationError(f"no feasible n'' for degrees ({m}, {mp}, {ms})")
    minimizer, minimum = min(points, key=lambda item: (item[1], item[0]))
    product = m * mp * ms
    consistent = minimum >= product
    if not consistent:
        logger.warning(
            f"1764 bound {minimum} (n''={minimizer}) falls below the product of degrees {product}"
        )
    return ThreeEquationSweep(tuple(points), minimum, minimizer, product, consistent)
