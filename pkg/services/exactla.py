"""Exact linear algebra over the polynomial ring.

Two determinant engines are provided. The lines rule expands the matrix
equation by equation: each unknown of the current word is exchanged for its
coefficient, the sign alternating with the position of the exchanged
unknown, and identical residual words are merged. It is exponential and
kept for reference and cross-checking. The fraction-free (Bareiss)
elimination is the fast path; its divisions are exact polynomial divisions.
"""
import logging
from fractions import Fraction

from config import Config
from exceptions import NoKernelError, UsageError
from models.matrix import LinearSolveResult, RingMatrix
from models.polynomial import MultiPoly

logger = logging.getLogger(__name__)


def _require_square(m):
    if not m.is_square():
        raise UsageError(f"matrix must be square, got {m.rows}x{m.cols}")


def _expand_lines(m, row_indices):
    """Run the lines rule over the given rows.

    Returns:
        dict mapping each residual word (tuple of remaining column indices)
        to its coefficient
    """
    lines = {tuple(range(m.cols)): MultiPoly.const(1, m.vars)}
    for i in row_indices:
        following = {}
        for word, coeff in lines.items():
            for pos, j in enumerate(word):
                entry = m[i, j]
                if entry.is_zero():
                    continue
                rest = word[:pos] + word[pos + 1:]
                term = coeff * entry
                if pos % 2:
                    term = -term
                previous = following.get(rest)
                following[rest] = term if previous is None else previous + term
        lines = {w: c for w, c in following.items() if not c.is_zero()}
        if not lines:
            break
    return lines


def det_permutation_rule(m):
    """Determinant by the lines rule (reference engine, n <= PERMUTATION_RULE_MAX)"""
    _require_square(m)
    limit = Config.PERMUTATION_RULE_MAX
    if m.rows > limit:
        raise UsageError(
            f"lines-rule determinant limited to {limit}x{limit} "
            f"(got {m.rows}x{m.rows}); use det_fraction_free"
        )
    if m.rows == 0:
        return MultiPoly.const(1, m.vars)
    lines = _expand_lines(m, range(m.rows))
    return lines.get((), MultiPoly.zero(m.vars))


def _choose_pivot(a, k):
    best = None
    for i in range(k, len(a)):
        entry = a[i][k]
        if entry.is_zero():
            continue
        key = (0 if entry.is_constant() else 1, len(entry.terms), i)
        if best is None or key < best[0]:
            best = (key, i)
    return None if best is None else best[1]


def det_fraction_free(m):
    """Bareiss determinant with exact polynomial division"""
    _require_square(m)
    n = m.rows
    one = MultiPoly.const(1, m.vars)
    if n == 0:
        return one
    if all(e.is_constant() for e in m.entries):
        rows = [[e.constant_value() for e in r] for r in m.row_lists()]
        return MultiPoly.const(rational_det(rows), m.vars)
    if n > 1 and all(e.is_constant() for e in m.entries[:-m.cols]):
        return _det_by_last_row(m)
    a = m.row_lists()
    sign = 1
    previous = one
    for k in range(n - 1):
        pivot_row = _choose_pivot(a, k)
        if pivot_row is None:
            return MultiPoly.zero(m.vars)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            lead = a[i][k]
            for j in range(k + 1, n):
                value = pivot * a[i][j]
                if not lead.is_zero():
                    value = value - lead * a[k][j]
                a[i][j] = value.exact_div(previous)
            a[i][k] = MultiPoly.zero(m.vars)
        previous = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def rational_det(rows):
    """Determinant of a rational matrix by Gaussian elimination"""
    a = [[Fraction(v) for v in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor:
                a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
    return det


def _det_by_last_row(m):
    """Determinant of a matrix whose rows are constant except the last.

    The cofactors along the last row form a kernel vector of the constant
    block; a single minor fixes their scale.
    """
    n = m.rows
    block = [[e.constant_value() for e in r] for r in m.row_lists()[:-1]]
    echelon = RowEchelon(n)
    if sum(1 for r in block if echelon.add(r)) < n - 1:
        return MultiPoly.zero(m.vars)
    vector, free = _kernel_vector(echelon)
    minor = rational_det([r[:free] + r[free + 1:] for r in block])
    scale = minor if (n - 1 + free) % 2 == 0 else -minor
    total = MultiPoly.zero(m.vars)
    for entry, v in zip(m.row(n - 1), vector):
        if v and not entry.is_zero():
            total = total + entry.scale(v)
    return total.scale(scale)


def determinant(m):
    return det_fraction_free(m)


def homogeneous_condition(coeffs):
    """Equation of condition for a nontrivial solution of coeffs * v = 0"""
    _require_square(coeffs)
    return det_fraction_free(coeffs)


def final_line(m):
    """Last line of the lines rule for n equations in n+1 unknowns.

    Entry j is the coefficient of unknown j once every equation has been
    used; equivalently the cofactor of column j along an appended row of
    unknowns. The vector lies in the kernel of m.
    """
    if m.cols != m.rows + 1:
        raise UsageError(f"final line needs n x (n+1) rows, got {m.rows}x{m.cols}")
    n = m.rows
    if n <= Config.PERMUTATION_RULE_MAX:
        lines = _expand_lines(m, range(n))
        return [lines.get((j,), MultiPoly.zero(m.vars)) for j in range(n + 1)]
    rows = m.row_lists()
    coefficients = []
    for j in range(n + 1):
        minor = RingMatrix.from_rows([r[:j] + r[j + 1:] for r in rows], m.vars)
        cofactor = det_fraction_free(minor)
        coefficients.append(cofactor if (n + j) % 2 == 0 else -cofactor)
    return coefficients


def lines_rule_solve(coeffs, constants):
    """Solve coeffs * values = denominator * constants by the lines rule.

    The constant column enters as the coefficient of a fictitious last
    unknown t, so the final line carries every numerator and, as the
    coefficient of t, the common denominator.

    Returns:
        LinearSolveResult; solvable is False when the denominator vanishes
    """
    _require_square(coeffs)
    if len(constants) != coeffs.rows:
        raise UsageError(f"expected {coeffs.rows} constants, got {len(constants)}")
    rows = []
    for row, c in zip(coeffs.row_lists(), constants):
        c = c if isinstance(c, MultiPoly) else MultiPoly.const(c, coeffs.vars)
        rows.append(row + [-c])
    line = final_line(RingMatrix.from_rows(rows, coeffs.vars))
    denominator = line[-1]
    solvable = not denominator.is_zero()
    if not solvable:
        logger.debug("lines_rule_solve: denominator vanishes, system is singular")
    return LinearSolveResult(line[:-1], denominator, solvable, line)


class RowEchelon:
    """Incremental echelon form over the rationals, used for rank tests"""

    def __init__(self, width):
        self.width = width
        self._pivots = []

    @property
    def rank(self):
        return len(self._pivots)

    def reduce(self, row):
        row = [Fraction(v) for v in row]
        if len(row) != self.width:
            raise UsageError(f"row of length {len(row)} in echelon of width {self.width}")
        for col, prow in self._pivots:
            factor = row[col]
            if factor:
                row = [a - factor * b for a, b in zip(row, prow)]
        return row

    def is_independent(self, row):
        return any(self.reduce(row))

    def add(self, row):
        """Insert `row`; returns False when it is dependent on earlier rows"""
        reduced = self.reduce(row)
        col = next((j for j, v in enumerate(reduced) if v), None)
        if col is None:
            return False
        pivot = reduced[col]
        self._pivots.append((col, [v / pivot for v in reduced]))
        return True


def rank(rows, width=None):
    rows = [list(r) for r in rows]
    if width is None:
        width = len(rows[0]) if rows else 0
    echelon = RowEchelon(width)
    for r in rows:
        echelon.add(r)
    return echelon.rank


def _kernel_vector(echelon):
    """Kernel vector with a 1 at the first free column.

    Returns:
        (vector, index of the free column)
    """
    width = echelon.width
    pivots = echelon._pivots
    # back-substitute to reduced form
    reduced = [list(r) for _, r in pivots]
    for idx in range(len(pivots) - 1, -1, -1):
        col = pivots[idx][0]
        for other in range(idx):
            factor = reduced[other][col]
            if factor:
                reduced[other] = [a - factor * b for a, b in zip(reduced[other], reduced[idx])]
    pivot_cols = {col for col, _ in pivots}
    free = next((j for j in range(width) if j not in pivot_cols), None)
    if free is None:
        raise NoKernelError("matrix has full column rank; only the trivial solution exists")
    vector = [Fraction(0)] * width
    vector[free] = Fraction(1)
    for (col, _), row in zip(pivots, reduced):
        vector[col] = -row[free]
    return vector, free


def _rational_kernel_vector(rows, width):
    echelon = RowEchelon(width)
    for r in rows:
        echelon.add(r)
    return _kernel_vector(echelon)[0]


def nullspace_vector(coeffs):
    """A nonzero rational kernel vector of a constant matrix.

    With n rows and n+1 columns the final-line cofactors are tried first;
    when they all vanish (rank below n) elimination supplies the vector.
    """
    for entry in coeffs.entries:
        if not entry.is_constant():
            raise UsageError("nullspace_vector needs constant entries")
    rows = [[e.constant_value() for e in r] for r in coeffs.row_lists()]
    if coeffs.cols == coeffs.rows + 1:
        line = [c.constant_value() for c in final_line(coeffs)]
        if any(line):
            return line
        logger.debug("nullspace_vector: cofactors vanish, falling back to elimination")
    return _rational_kernel_vector(rows, coeffs.cols)
