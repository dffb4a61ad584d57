# Bezout elimination models
from .polynomial import MultiPoly, UniView, VarTable
from .matrix import LinearSolveResult, RingMatrix
from .system import PolySystem
from .report import (BezoutianReport, ClassReport, CountReport, EliminationReport,
                     IdentityReport, MultiplierPlan, SystemReport)

__all__ = [
    'MultiPoly', 'UniView', 'VarTable', 'LinearSolveResult', 'RingMatrix',
    'PolySystem', 'BezoutianReport', 'ClassReport', 'CountReport',
    'EliminationReport', 'IdentityReport', 'MultiplierPlan', 'SystemReport'
]
