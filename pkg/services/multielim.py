"""Elimination for n equations in n unknowns through the equation-somme.

Each equation E_j is multiplied by a multiplier polynomial M_j with
indeterminate coefficients and the products are added. Forcing the unwanted
monomials of sum(M_j * E_j) to vanish gives a homogeneous linear system in
the indeterminates; its condition of solvability is the (apparent)
resultant.

somme1 (first method): multipliers are complete in every unknown. The
highest equation, of degree t, gets a multiplier of degree
T >= t_1 + ... + t_(n-1) (the other degrees), raised if needed until the
equation-somme of degree t + T can hold the final equation of degree
prod(t_i). Every monomial holding an eliminated unknown vanishes, and so do
the powers of the kept unknown above prod(t_i); the coefficient rows of the
lower powers are folded into one last row whose cofactor expansion is the
final equation.

somme2 (second method): the kept unknown is buried in the coefficients,
multipliers are complete in the eliminated unknowns only, and every
monomial of the equation-somme, of degree sum(t_i - 1) + 1, must vanish.

Both methods leave some indeterminates free (the Koszul syzygies
M_i = m*E_j, M_j = -m*E_i lie in the kernel). They are pinned by
arbitrary equations taken from a deterministic family; the determinant of
the arbitrary rows against the syzygies is the predicted superfluous
factor.
"""
import logging
import math
import random
from dataclasses import replace
from fractions import Fraction

from config import Config
from exceptions import CommonComponentError, SizeGuardError, UsageError
from models.matrix import RingMatrix
from models.polynomial import MultiPoly, VarTable, grlex_key
from models.report import EliminationReport, MultiplierPlan
from services import exactla
from services.counting import RemovalSpec, enumerate_monomials, num_terms_complete, terms_after_removals
from services.polyring import collect_wrt, lagrange_interpolate
from services.resultant2 import gcd_euclid

logger = logging.getLogger(__name__)

METHOD_FIRST = 'somme1'
METHOD_SECOND = 'somme2'


def _multiplier_key(exps):
    # degree first, then the last variable before the earlier ones
    return (sum(exps), tuple(reversed(exps)))


def _sample_point(names, seed):
    """Nonzero random integers for every name, reproducible from `seed`"""
    rng = random.Random(seed)
    bound = Config.SPECIALIZATION_BOUND
    return {name: rng.choice((-1, 1)) * rng.randint(1, bound) for name in names}


def first_method_degree(degrees):
    """Degree of the first method's equation-somme.

    The multiplier of the highest equation has the least degree T with
    T >= (sum of the other degrees) and t + T >= prod(degrees).
    """
    t = max(degrees)
    others = sum(degrees) - t
    return t + max(others, math.prod(degrees) - t)


class _EquationSomme:
    """Layout of one equation-somme: unknown columns, coefficient groups, rows"""

    def __init__(self, system, method, seed, degrees=None):
        if system.keep is None:
            raise UsageError("elimination needs a keep variable")
        if len(system.equations) != len(system.vars):
            raise UsageError(
                f"{len(system.equations)} equations in {len(system.vars)} unknowns; "
                f"the equation-somme needs one equation per unknown"
            )
        self.system = system
        self.method = method
        self.seed = seed
        self.table = system.table
        if method == METHOD_SECOND:
            self.mono_vars = system.eliminated
        else:
            self.mono_vars = tuple(system.vars)
        self.mono_idx = [self.table.index(v) for v in self.mono_vars]
        if degrees is None:
            degrees = [eq.degree_in_set(self.mono_vars) for eq in system.equations]
        self.degrees = list(degrees)
        for i, t in enumerate(self.degrees, 1):
            if t == float('-inf') or t < 1:
                raise UsageError(f"equation {i} does not involve {' '.join(self.mono_vars)}")
        if method == METHOD_SECOND:
            self.target = sum(t - 1 for t in self.degrees) + 1
            self.final_degree = None
        else:
            self.target = first_method_degree(self.degrees)
            self.final_degree = math.prod(self.degrees)
        self.multiplier_degrees = [self.target - t for t in self.degrees]
        self.shapes = [
            sorted(enumerate_monomials(len(self.mono_vars), d), key=_multiplier_key, reverse=True)
            for d in self.multiplier_degrees
        ]
        self.columns = [(j, mu) for j, shape in enumerate(self.shapes) for mu in shape]
        if Config.SIZE_GUARD_ENABLED and len(self.columns) > Config.MAX_UNKNOWNS:
            raise SizeGuardError(
                f"{len(self.columns)} indeterminate coefficients exceed the limit of {Config.MAX_UNKNOWNS}"
            )
        self.groups = [self._group(eq) for eq in system.equations]
        self.zero = MultiPoly.zero(self.table)
        sample_names = [n for n in self.table if n not in self.mono_vars or n == system.keep]
        self.point = _sample_point(sample_names, seed)
        self._basis = None

    def _group(self, eq):
        """Coefficients of eq keyed by exponents over mono_vars"""
        groups = {}
        for mono, coeff in eq.terms.items():
            key = tuple(mono[i] for i in self.mono_idx)
            rest = list(mono)
            for i in self.mono_idx:
                rest[i] = 0
            groups.setdefault(key, {})[tuple(rest)] = coeff
        return {key: MultiPoly(self.table, terms) for key, terms in groups.items()}

    def mono_text(self, exps):
        if not any(exps):
            return '1'
        return str(MultiPoly.monomial(exps, VarTable(self.mono_vars)))

    def unknown_name(self, column):
        j, mu = column
        return f"M{j + 1}[{self.mono_text(mu)}]"

    def entry(self, nu, column):
        """Coefficient of monomial nu of the equation-somme carried by one unknown"""
        j, mu = column
        diff = tuple(a - b for a, b in zip(nu, mu))
        if any(e < 0 for e in diff):
            return self.zero
        return self.groups[j].get(diff, self.zero)

    def row_for(self, nu):
        return [self.entry(nu, c) for c in self.columns]

    def is_eliminated_monomial(self, exps):
        return any(e for name, e in zip(self.mono_vars, exps) if name != self.system.keep)

    def condition_monomials(self):
        monos = enumerate_monomials(len(self.mono_vars), self.target)
        if self.method == METHOD_FIRST:
            monos = (nu for nu in monos if self.is_eliminated_monomial(nu) or sum(nu) > self.final_degree)
        return sorted(monos, key=grlex_key, reverse=True)

    def condition_trace(self, monomials, conditions):
        lines = []
        for nu, row in zip(monomials, conditions):
            terms = [f"({e})*{self.unknown_name(c)}" for e, c in zip(row, self.columns) if not e.is_zero()]
            lines.append(f"  coeff of {self.mono_text(nu)}: {' + '.join(terms) or '0'} = 0")
        return lines

    def keep_rows(self, top):
        """Coefficient rows of keep^0, ..., keep^top in the equation-somme"""
        keep_pos = self.mono_vars.index(self.system.keep)
        width = len(self.mono_vars)
        return [self.row_for(tuple(k if i == keep_pos else 0 for i in range(width))) for k in range(top + 1)]

    def keep_row(self, top):
        """Equation-somme terms free of eliminated unknowns, one entry per column"""
        u = MultiPoly.var(self.system.keep, self.table)
        row = [self.zero] * len(self.columns)
        for k, coeffs in enumerate(self.keep_rows(top)):
            power = u ** k
            for c, coeff in enumerate(coeffs):
                if not coeff.is_zero():
                    row[c] = row[c] + coeff * power
        return row

    def at_point(self, row):
        return [e.eval(self.point) for e in row]

    def candidates(self):
        """Deterministic arbitrary-equation family.

        For a multiplier monomial mu and an equation monomial nu involving an
        eliminated unknown, the row is sum_j coeff(E_j, nu) * M_j[mu]. mu runs
        through the multiplier monomials by decreasing degree (last unknown
        first), nu through the equation monomials in decreasing order.
        """
        mus = sorted({mu for shape in self.shapes for mu in shape}, key=_multiplier_key, reverse=True)
        nus = sorted(
            {nu for group in self.groups for nu in group if self.is_eliminated_monomial(nu)},
            key=grlex_key, reverse=True,
        )
        for mu in mus:
            for nu in nus:
                row = [self.zero] * len(self.columns)
                pieces = []
                for c, (j, m) in enumerate(self.columns):
                    if m == mu:
                        coeff = self.groups[j].get(nu, self.zero)
                        if not coeff.is_zero():
                            row[c] = coeff
                            pieces.append(f"({coeff})*{self.unknown_name((j, m))}")
                if pieces:
                    yield ' + '.join(pieces) + ' = 0', row
        for c, column in enumerate(self.columns):
            row = [self.zero] * len(self.columns)
            row[c] = MultiPoly.const(1, self.table)
            yield f"{self.unknown_name(column)} = 0", row

    def choose_arbitrary(self, echelon, needed, variation):
        """Greedy pick of rows raising the rank; the first `variation` usable rows are passed over"""
        chosen = []
        passed = 0
        for text, row in self.candidates():
            if len(chosen) == needed:
                break
            values = self.at_point(row)
            if not echelon.is_independent(values):
                continue
            if passed < variation:
                passed += 1
                continue
            echelon.add(values)
            chosen.append((text, row))
        return chosen

    def syzygies(self):
        """Koszul vectors M_i = m*E_j, M_j = -m*E_i over the unknown columns"""
        index = {column: c for c, column in enumerate(self.columns)}
        n = len(self.system.equations)
        for i in range(n):
            for j in range(i + 1, n):
                room = self.target - self.degrees[i] - self.degrees[j]
                if room < 0:
                    continue
                for m in enumerate_monomials(len(self.mono_vars), room):
                    vector = [self.zero] * len(self.columns)
                    for owner, other, sign in ((i, j, 1), (j, i, -1)):
                        for nu, coeff in self.groups[other].items():
                            mu = tuple(a + b for a, b in zip(m, nu))
                            c = index.get((owner, mu))
                            if c is not None:
                                vector[c] = coeff if sign > 0 else -coeff
                    yield vector

    def syzygy_basis(self):
        """Koszul vectors independent at the sample point, in generation order"""
        if self._basis is None:
            echelon = exactla.RowEchelon(len(self.columns))
            self._basis = [vector for vector in self.syzygies() if echelon.add(self.at_point(vector))]
        return self._basis

    def choose_against_syzygies(self, basis, variation):
        """Arbitrary rows that pin every syzygy of `basis`.

        A candidate is kept when its values on the basis vectors at the sample
        point raise the rank; the first `variation` usable rows are passed over.
        """
        if not basis:
            return []
        images = [self.at_point(vector) for vector in basis]
        echelon = exactla.RowEchelon(len(basis))
        chosen = []
        passed = 0
        for text, row in self.candidates():
            if len(chosen) == len(basis):
                break
            values = self.at_point(row)
            projected = [
                sum((a * b for a, b in zip(values, image) if a and b), Fraction(0))
                for image in images
            ]
            if not echelon.is_independent(projected):
                continue
            if passed < variation:
                passed += 1
                continue
            echelon.add(projected)
            chosen.append((text, row))
        return chosen

    def predicted_factor(self, arbitrary_rows):
        """det(Arb * S) over independent syzygies, or None when they do not match the rows"""
        k = len(arbitrary_rows)
        if k == 0:
            return MultiPoly.const(1, self.table)
        basis = self.syzygy_basis()
        if len(basis) < k:
            logger.debug(f"predicted_factor: {len(basis)} independent syzygies for {k} arbitrary rows")
            return None
        product = []
        for row in arbitrary_rows:
            product.append([
                sum((a * b for a, b in zip(row, vector) if not a.is_zero() and not b.is_zero()), self.zero)
                for vector in basis[:k]
            ])
        return exactla.determinant(RingMatrix.from_rows(product, self.table))

    def plan(self, condition_count, arbitrary, variation):
        shapes = tuple(tuple(self.mono_text(mu) for mu in shape) for shape in self.shapes)
        plan = MultiplierPlan(
            method=self.method,
            target_degree=self.target,
            multiplier_degrees=tuple(self.multiplier_degrees),
            shapes=shapes,
            unknowns=len(self.columns),
            condition_rows=condition_count,
            surplus_count=0,
            arbitrary_equations=tuple(text for text, _ in arbitrary),
            seed=self.seed,
            variation=variation,
            multiplier_vars=tuple(self.mono_vars),
        )
        return replace(plan, surplus_count=surplus_count(self.system, plan))

    def shape_trace(self):
        lines = [f"equation-somme of degree {self.target} in {' '.join(self.mono_vars)}"]
        for j, (d, shape) in enumerate(zip(self.multiplier_degrees, self.shapes), 1):
            monos = ', '.join(self.mono_text(mu) for mu in shape)
            lines.append(f"multiplier M{j}: degree {d}, monomials [{monos}]")
        return lines


def surplus_count(system, plan):
    """Coefficients of the multipliers removable with the later equations.

    Multiplier i keeps the terms of its complete polynomial divisible by
    none of the leading powers of equations i+1, ..., each taken on its own
    unknown; the others can be absorbed and are useless to the elimination.
    """
    names = tuple(plan.multiplier_vars) or tuple(system.vars)
    degrees = [eq.degree_in_set(names) for eq in system.equations]
    total = 0
    for i, d in enumerate(plan.multiplier_degrees):
        later = degrees[i + 1:][:len(names)]
        spec = RemovalSpec(tuple(zip(names, later)))
        total += num_terms_complete(len(names), d) - terms_after_removals(len(names), d, spec, names)
    return total


def arbitrary_candidates(system, method=METHOD_SECOND, seed=None):
    """The arbitrary-equation family of a system as (text, row) pairs"""
    seed = Config.DEFAULT_SEED if seed is None else seed
    return list(_EquationSomme(system, method, seed).candidates())


def _resolve_seed(system, seed):
    if seed is not None:
        return seed
    return system.seed if system.seed is not None else Config.DEFAULT_SEED


def _keep_names(system):
    return (system.keep,) + tuple(system.params)


def _ceiling_notes(system, resultant):
    notes = []
    if resultant.is_zero():
        notes.append("resultant vanishes identically: infinite solution set (common component)")
        return notes
    ceiling = math.prod(system.degrees())
    degree = resultant.degree_in(system.keep)
    if degree > ceiling:
        logger.warning(f"resultant degree {degree} in {system.keep} exceeds the product of degrees {ceiling}")
        notes.append(f"degree {degree} in {system.keep} exceeds the product of degrees {ceiling}")
    return notes


def method2_eliminate(system, seed=None, variation=0):
    """Second method: privileged keep variable, every monomial forced to vanish.

    Returns:
        EliminationReport; resultant = apparent / predicted factor when the
        division is exact
    """
    system.check_size()
    seed = _resolve_seed(system, seed)
    somme = _EquationSomme(system, METHOD_SECOND, seed)
    size = len(somme.columns)
    trace = somme.shape_trace()

    monomials = somme.condition_monomials()
    conditions = [somme.row_for(nu) for nu in monomials]
    echelon = exactla.RowEchelon(size)
    dependent = sum(1 for row in conditions if not echelon.add(somme.at_point(row)))
    trace.append(f"coefficient system: {len(conditions)} conditions, {size} unknowns")
    trace.extend(somme.condition_trace(monomials, conditions))

    needed = max(size - len(conditions), 0)
    arbitrary = somme.choose_arbitrary(echelon, needed, variation) if not dependent else []
    trace.extend(f"arbitrary: {text}" for text, _ in arbitrary)
    plan = somme.plan(len(conditions), arbitrary, variation)

    one = MultiPoly.const(1, somme.table)
    notes = []
    matrices = []
    if dependent or len(arbitrary) < needed or len(conditions) > size:
        logger.debug(f"method2: conditions dependent at the sample point ({dependent} redundant)")
        notes.append("coefficient system is rank deficient: the equation-somme vanishes for free")
        apparent = MultiPoly.zero(somme.table)
        factor = None
    else:
        matrix = RingMatrix.from_rows(conditions + [row for _, row in arbitrary], somme.table)
        matrices.append(matrix)
        apparent = exactla.determinant(matrix)
        factor = somme.predicted_factor([row for _, row in arbitrary])
    trace.append(f"final line: {apparent}")

    if apparent.is_zero() or factor is None or factor.is_zero() or not factor.divides(apparent):
        if not apparent.is_zero():
            logger.warning("method2: predicted superfluous factor does not divide the apparent resultant")
            notes.append("superfluous factor not predicted; resultant left unstripped")
        stripped, resultant = one, apparent
    else:
        stripped, resultant = factor, apparent.exact_div(factor)
        trace.append(f"superfluous factor: {factor}")

    names = _keep_names(system)
    resultant = resultant.restrict(names)
    notes = _ceiling_notes(system, resultant) + notes
    return EliminationReport(
        resultant=resultant,
        apparent=apparent.restrict(names),
        stripped_factor=stripped.restrict(names),
        method=METHOD_SECOND,
        plan=plan,
        matrices=matrices,
        notes=notes,
        trace=trace,
        keep=system.keep,
    )


def _highest_equation(degrees):
    return max(range(len(degrees)), key=lambda i: (degrees[i], -i))


def _deformed_final_equation(somme, monomials, arbitrary_rows):
    """Final equation of a numeric system whose coefficient system is rank deficient.

    The highest equation E becomes E + e*G, G complete of the same degree
    with seeded coefficients, while the arbitrary rows stay frozen. The
    determinant is then a polynomial in e of degree at most the size of E's
    multiplier: it is interpolated from one more value of e than that, and
    its lowest nonzero coefficient is the final equation at e = 0.

    Returns:
        (final equation, order in e of that coefficient)
    """
    system = somme.system
    j = _highest_equation(somme.degrees)
    rng = random.Random(somme.seed)
    bound = Config.SPECIALIZATION_BOUND
    padding = (0,) * len(system.params)
    deformation = MultiPoly(somme.table, {
        exps + padding: rng.randint(-bound, bound)
        for exps in enumerate_monomials(len(system.vars), somme.degrees[j])
    })
    nodes = list(range(1, len(somme.shapes[j]) + 2))
    values = []
    for e in nodes:
        equations = list(system.equations)
        equations[j] = equations[j] + deformation.scale(e)
        deformed = _EquationSomme(
            replace(system, equations=tuple(equations)), METHOD_FIRST, somme.seed, degrees=somme.degrees
        )
        rows = [deformed.row_for(nu) for nu in monomials] + arbitrary_rows
        rows.append(deformed.keep_row(somme.final_degree))
        values.append(exactla.determinant(RingMatrix.from_rows(rows, somme.table)))
    logger.debug(f"method1: deformation of equation {j + 1} interpolated from {len(nodes)} determinants")
    coeffs = lagrange_interpolate(nodes, values)
    order = next((k for k, c in enumerate(coeffs) if not c.is_zero()), None)
    if order is None:
        return somme.zero, 0
    return coeffs[order], order


def method1_eliminate(system, seed=None, variation=0):
    """First method: complete multipliers in every unknown.

    Numeric systems report the monic final equation; with symbolic
    parameters the predicted superfluous factor is divided out.
    """
    system.check_size()
    seed = _resolve_seed(system, seed)
    somme = _EquationSomme(system, METHOD_FIRST, seed)
    size = len(somme.columns)
    keep = system.keep
    trace = somme.shape_trace()

    monomials = somme.condition_monomials()
    conditions = [somme.row_for(nu) for nu in monomials]
    trace.append(
        f"coefficient system: {len(conditions)} conditions, {size} unknowns, "
        f"final equation of degree {somme.final_degree} in {keep}"
    )
    trace.extend(somme.condition_trace(monomials, conditions))

    needed = size - 1 - len(conditions)
    basis = somme.syzygy_basis()
    arbitrary = somme.choose_against_syzygies(basis, variation) if len(basis) == needed else []
    arbitrary_rows = [row for _, row in arbitrary]
    trace.extend(f"arbitrary: {text}" for text, _ in arbitrary)
    plan = somme.plan(len(conditions), arbitrary, variation)

    one = MultiPoly.const(1, somme.table)
    notes = []
    matrices = []
    if len(basis) != needed or len(arbitrary) != needed:
        logger.debug(f"method1: {len(basis)} independent syzygies for {needed} arbitrary equations")
        notes.append(f"{len(basis)} independent syzygies for {needed} arbitrary equations; final equation not formed")
        apparent = MultiPoly.zero(somme.table)
    else:
        matrix = RingMatrix.from_rows(conditions + arbitrary_rows + [somme.keep_row(somme.final_degree)], somme.table)
        matrices.append(matrix)
        apparent = exactla.determinant(matrix)
        if apparent.is_zero() and not system.params:
            echelon = exactla.RowEchelon(size)
            for row in conditions:
                echelon.add(somme.at_point(row))
            if any(echelon.is_independent(somme.at_point(r)) for r in somme.keep_rows(somme.final_degree)):
                apparent, order = _deformed_final_equation(somme, monomials, arbitrary_rows)
                logger.warning(f"method1: coefficient system rank deficient, deformation of order {order} used")
                notes.append(
                    f"coefficient system is rank deficient (solutions share a value of {keep}); "
                    f"final equation taken from a deformation of order {order}"
                )
    trace.append(f"final line: {apparent}")

    stripped = one
    resultant = apparent
    if not apparent.is_zero():
        if not system.params:
            stripped = MultiPoly.const(collect_wrt(apparent, keep).leading.constant_value(), somme.table)
            resultant = apparent.exact_div(stripped)
        else:
            factor = somme.predicted_factor(arbitrary_rows)
            if factor is not None and not factor.is_zero() and factor.divides(apparent):
                stripped, resultant = factor, apparent.exact_div(factor)
                trace.append(f"superfluous factor: {factor}")
            else:
                logger.warning("method1: predicted superfluous factor does not divide the final equation")
                notes.append("superfluous factor not predicted; resultant left unstripped")

    names = _keep_names(system)
    resultant = resultant.restrict(names)
    notes = _ceiling_notes(system, resultant) + notes
    return EliminationReport(
        resultant=resultant,
        apparent=apparent.restrict(names),
        stripped_factor=stripped.restrict(names),
        method=METHOD_FIRST,
        plan=plan,
        matrices=matrices,
        notes=notes,
        trace=trace,
        keep=keep,
    )


def _univariate_gcd(polys, keep):
    """Monic gcd in Q[keep] of nonzero polynomials over the table (keep,)"""
    table = VarTable((keep,))
    views = [collect_wrt(p, keep) for p in polys]
    g = views[0]
    for view in views[1:]:
        g = gcd_euclid(g, view)
    return g.reassemble().with_vars(table).monic()


def _specialized_gcd(apparents, keep, point):
    keep_table = VarTable((keep,))
    reduced = [a.specialize(point).restrict((keep,)) for a in apparents]
    reduced = [r for r in reduced if not r.is_zero()]
    if not reduced:
        return None
    return _univariate_gcd(reduced, keep).with_vars(keep_table)


def strip_superfluous(system, runs=None, seed=None):
    """Run method2 under `runs` arbitrary-equation variations and keep their common part.

    Raises:
        CommonComponentError: every variation gives a zero apparent resultant
    """
    runs = Config.DEFAULT_RUNS if runs is None else runs
    if runs < 2:
        raise UsageError(f"strip_superfluous needs at least 2 runs, got {runs}")
    reports = [method2_eliminate(system, seed=seed, variation=r) for r in range(runs)]
    nonzero = [r for r in reports if not r.apparent.is_zero()]
    if not nonzero:
        raise CommonComponentError(
            "every arbitrary-equation variation gives a zero apparent resultant: "
            "the equations share a common component"
        )
    keep = system.keep
    apparents = [r.apparent for r in nonzero]
    first = nonzero[0]
    names = first.apparent.vars
    trace = list(first.trace)
    for r, report in enumerate(reports):
        trace.append(f"variation {r}: apparent = {report.apparent}")
    notes = []

    if not system.params:
        g = _univariate_gcd([a.restrict((keep,)) for a in apparents], keep)
        resultant = g.with_vars(names)
        stripped = first.apparent.exact_div(resultant)
    else:
        candidate = first.resultant
        point = _sample_point(system.params, _resolve_seed(system, seed) + runs)
        expected = _specialized_gcd(apparents, keep, point)
        lifted = candidate.specialize(point).restrict((keep,))
        consistent = (
            all(candidate.divides(a) for a in apparents)
            and expected is not None
            and not lifted.is_zero()
            and lifted.monic() == expected.monic()
        )
        if consistent:
            resultant = candidate
            stripped = first.apparent.exact_div(candidate)
        else:
            logger.warning("strip_superfluous: lifted factor not confirmed by the specialized gcd")
            notes.append("superfluous factor could not be confirmed; apparent resultant reported")
            resultant = first.apparent
            stripped = MultiPoly.const(1, names)
    trace.append(f"common part: {resultant}")
    notes = _ceiling_notes(system, resultant) + notes
    return EliminationReport(
        resultant=resultant,
        apparent=first.apparent,
        stripped_factor=stripped,
        method=METHOD_SECOND,
        plan=first.plan,
        matrices=[m for r in reports for m in r.matrices],
        notes=notes,
        trace=trace,
        keep=keep,
    )


def eliminate(system, method=None, runs=None, seed=None):
    """Dispatch on the method name (somme1 or somme2)"""
    method = method or system.method or METHOD_SECOND
    if method == METHOD_FIRST:
        return method1_eliminate(system, seed=seed)
    if method == METHOD_SECOND:
        runs = Config.DEFAULT_RUNS if runs is None else runs
        if runs <= 1:
            return method2_eliminate(system, seed=seed)
        return strip_superfluous(system, runs=runs, seed=seed)
    raise UsageError(f"unknown elimination method '{method}'")

