"""Exact sparse multivariate polynomials over the rationals.

A MultiPoly is a map from exponent tuples to nonzero Fractions, bound to a
VarTable that fixes the meaning of each exponent position. Values are never
mutated after construction; every operation returns a new polynomial.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from exceptions import DegenerateInputError, UnboundVariableError, UsageError
from models.base import format_rational

logger = logging.getLogger(__name__)

# Degree of the zero polynomial
NEG_INF = float('-inf')


def grlex_key(exponents):
    """Sort key for graded-lexicographic order (larger is higher)"""
    return (sum(exponents), exponents)


@dataclass(frozen=True)
class VarTable:
    """Ordered, duplicate-free variable names"""
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, 'names', names)
        for name in names:
            if not isinstance(name, str) or not name.isidentifier():
                raise UsageError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            seen = set()
            duplicate = next(n for n in names if n in seen or seen.add(n))
            raise UsageError(f"duplicate variable '{duplicate}'")

    @classmethod
    def of(cls, *names):
        return cls(tuple(names))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.names

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise UnboundVariableError(name, f"variable '{name}' is not in {list(self.names)}") from None

    def __str__(self):
        return ' '.join(self.names)


class MultiPoly:
    __slots__ = ('vars', 'terms')

    def __init__(self, vars, terms=None):
        if not isinstance(vars, VarTable):
            vars = VarTable(tuple(vars))
        width = len(vars)
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != width:
                raise UsageError(f"monomial {mono} does not match {width} variables")
            if any(e < 0 for e in mono):
                raise UsageError(f"negative exponent in {mono}")
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = coeff
        self.vars = vars
        self.terms = clean

    @classmethod
    def _raw(cls, vars, terms):
        poly = object.__new__(cls)
        poly.vars = vars
        poly.terms = terms
        return poly

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def const(cls, value, vars):
        if not isinstance(vars, VarTable):
            vars = VarTable(tuple(vars))
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def var(cls, name, vars):
        if not isinstance(vars, VarTable):
            vars = VarTable(tuple(vars))
        exps = [0] * len(vars)
        exps[vars.index(name)] = 1
        return cls._raw(vars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exponents, vars, coeff=1):
        return cls(vars, {tuple(exponents): coeff})

    # -- coercion -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise UsageError(
                    f"mismatched variable tables: {list(self.vars.names)} vs {list(other.vars.names)}"
                )
            return other
        if isinstance(other, Rational):
            return MultiPoly.const(other, self.vars)
        return NotImplemented

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = terms.get(mono, 0) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return MultiPoly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return MultiPoly._raw(self.vars, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = MultiPoly.const(1, self.vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def scale(self, factor):
        factor = Fraction(factor)
        if not factor:
            return MultiPoly.zero(self.vars)
        return MultiPoly._raw(self.vars, {m: c * factor for m, c in self.terms.items()})

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, Rational):
            return self.terms == MultiPoly.const(other, self.vars).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        """The rational value of a constant polynomial"""
        if not self.is_constant():
            raise UsageError(f"'{self}' is not a constant")
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def degree_in(self, name):
        if not self.terms:
            return NEG_INF
        idx = self.vars.index(name)
        return max(m[idx] for m in self.terms)

    def degree_in_set(self, names):
        """Total degree counting only the listed variables"""
        if not self.terms:
            return NEG_INF
        idxs = [self.vars.index(n) for n in names]
        return max(sum(m[i] for i in idxs) for m in self.terms)

    def variables(self):
        used = [False] * len(self.vars)
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used[i] = True
        return tuple(n for n, flag in zip(self.vars.names, used) if flag)

    def coeff(self, exponents):
        return self.terms.get(tuple(exponents), Fraction(0))

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order"""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise DegenerateInputError("the zero polynomial has no leading term")
        mono = max(self.terms, key=grlex_key)
        return mono, self.terms[mono]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def monic(self):
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    # -- evaluation and substitution -------------------------------------

    def eval(self, point):
        """Exact value at a point binding every variable that occurs"""
        values = []
        for name in self.vars.names:
            values.append(Fraction(point[name]) if name in point else None)
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for idx, e in enumerate(mono):
                if e:
                    if values[idx] is None:
                        raise UnboundVariableError(self.vars.names[idx])
                    term *= values[idx] ** e
            total += term
        return total

    def specialize(self, point):
        """Partial evaluation; the result keeps this VarTable"""
        idx_values = {self.vars.index(name): Fraction(v) for name, v in point.items() if name in self.vars}
        terms = {}
        for mono, coeff in self.terms.items():
            value = coeff
            reduced = list(mono)
            for idx, v in idx_values.items():
                if mono[idx]:
                    value *= v ** mono[idx]
                    reduced[idx] = 0
            key = tuple(reduced)
            terms[key] = terms.get(key, 0) + value
        return MultiPoly._raw(self.vars, {m: c for m, c in terms.items() if c})

    def substitute(self, mapping):
        """Replace variables by polynomials over the same VarTable"""
        replacements = {}
        for name, value in mapping.items():
            idx = self.vars.index(name)
            replacements[idx] = self._coerce(value)
        powers = {}

        def power(idx, e):
            key = (idx, e)
            if key not in powers:
                powers[key] = replacements[idx] ** e
            return powers[key]

        result = MultiPoly.zero(self.vars)
        for mono, coeff in self.terms.items():
            kept = tuple(0 if i in replacements else e for i, e in enumerate(mono))
            term = MultiPoly._raw(self.vars, {kept: coeff})
            for idx in replacements:
                if mono[idx]:
                    term = term * power(idx, mono[idx])
            result = result + term
        return result

    def with_vars(self, vars):
        """Re-embed into another table containing every occurring variable"""
        if not isinstance(vars, VarTable):
            vars = VarTable(tuple(vars))
        if vars == self.vars:
            return self
        positions = [vars.index(name) for name in self.variables()]
        src = [self.vars.index(name) for name in self.variables()]
        terms = {}
        for mono, coeff in self.terms.items():
            exps = [0] * len(vars)
            for s, d in zip(src, positions):
                exps[d] = mono[s]
            terms[tuple(exps)] = coeff
        return MultiPoly._raw(vars, terms)

    def restrict(self, names):
        """Same polynomial over the sub-table `names` (which must cover its variables)"""
        missing = [n for n in self.variables() if n not in names]
        if missing:
            raise UsageError(f"'{self}' still involves {missing}")
        return self.with_vars(VarTable(tuple(names)))

    # -- division ---------------------------------------------------------

    def exact_div(self, divisor):
        """Quotient of an exact multivariate division.

        Raises:
            DegenerateInputError: divisor is zero or does not divide self
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise DegenerateInputError("division by the zero polynomial")
        if divisor.is_constant():
            return self.scale(1 / divisor.constant_value())
        lead_mono, lead_coeff = divisor.leading_term()
        remainder = dict(self.terms)
        quotient = {}
        while remainder:
            mono = max(remainder, key=grlex_key)
            shift = tuple(a - b for a, b in zip(mono, lead_mono))
            if any(e < 0 for e in shift):
                raise DegenerateInputError(f"'{divisor}' does not divide '{self}'")
            factor = remainder[mono] / lead_coeff
            quotient[shift] = factor
            for dmono, dcoeff in divisor.terms.items():
                key = tuple(a + b for a, b in zip(dmono, shift))
                value = remainder.get(key, 0) - factor * dcoeff
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return MultiPoly._raw(self.vars, quotient)

    def divides(self, other):
        try:
            self._coerce(other).exact_div(self)
        except DegenerateInputError:
            return False
        return True

    # -- text -------------------------------------------------------------

    def _monomial_text(self, mono):
        factors = []
        for name, e in zip(self.vars.names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return '*'.join(factors)

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            magnitude = abs(coeff)
            body = self._monomial_text(mono)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if i == 0:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f" - {text}" if coeff < 0 else f" + {text}")
        return ''.join(pieces)

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, vars={list(self.vars.names)})"

    def to_dict(self):
        """Exact coefficients keyed by exponent vector, highest term first"""
        return {
            '(' + ','.join(str(e) for e in mono) + ')': format_rational(coeff)
            for mono, coeff in self.sorted_terms()
        }


@dataclass(frozen=True)
class UniView:
    """A polynomial collected with respect to one main variable.

    coeffs[0] is the leading coefficient (never zero); the zero view has
    no coefficients at all.
    """
    main: str
    vars: VarTable
    coeffs: tuple

    @classmethod
    def from_coeffs(cls, main, vars, coeffs):
        """Build a view from a nominal coefficient list, dropping leading zeros"""
        coeffs = list(coeffs)
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
        return cls(main, vars, tuple(coeffs))

    @classmethod
    def zero(cls, main, vars):
        return cls(main, vars, ())

    def is_zero(self):
        return not self.coeffs

    @property
    def m(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def p_offsets(self):
        return tuple(c.degree() for c in self.coeffs)

    @property
    def leading(self):
        if not self.coeffs:
            raise DegenerateInputError("the zero view has no leading coefficient")
        return self.coeffs[0]

    def coeff_of_power(self, k):
        """Coefficient of main^k (zero beyond the degree)"""
        if not self.coeffs or k < 0 or k > self.m:
            return MultiPoly.zero(self.vars)
        return self.coeffs[self.m - k]

    def reassemble(self):
        x = MultiPoly.var(self.main, self.vars)
        total = MultiPoly.zero(self.vars)
        for c in self.coeffs:
            total = total * x + c
        return total

    def is_univariate(self):
        """True when every coefficient is a rational constant"""
        return all(c.is_constant() for c in self.coeffs)

    def rational_coeffs(self):
        return [c.constant_value() for c in self.coeffs]

    def __str__(self):
        return str(self.reassemble())

    def to_dict(self):
        return {'main': self.main, 'coeffs': [str(c) for c in self.coeffs]}
