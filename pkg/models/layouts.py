from dataclasses import dataclass

from models.base import ReportMixin
from models.matrix import RingMatrix
from models.polynomial import MultiPoly, UniView


@dataclass(frozen=True)
class SylvesterLayout(ReportMixin):
    """Columns: m' shifted copies of f, then m shifted copies of g"""
    f: UniView
    g: UniView
    matrix: RingMatrix


@dataclass(frozen=True)
class BezoutianLayout(ReportMixin):
    f: UniView
    g: UniView
    matrix: RingMatrix
    # (f_i, g_i) truncations used for row i
    row_provenance: tuple


@dataclass(frozen=True)
class UnequalBezoutianLayout(ReportMixin):
    """det(matrix) == sign * extraneous * resultant(f, g)"""
    f: UniView
    g: UniView
    matrix: RingMatrix
    extraneous: MultiPoly
    sign: int
    substitution_exponent: int


@dataclass(frozen=True)
class IdentityWitness(ReportMixin):
    L1: UniView
    L2: UniView

    def combination(self, P, Q):
        """L1*P + L2*Q as a polynomial"""
        return self.L1.reassemble() * P.reassemble() + self.L2.reassemble() * Q.reassemble()
