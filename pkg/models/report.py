from dataclasses import dataclass, field
from typing import Optional

from models.base import ReportMixin
from models.polynomial import MultiPoly


@dataclass(frozen=True)
class MultiplierPlan(ReportMixin):
    """Shape of the equation-somme built by one of the elimination methods.

    shapes[i] lists the monomials of the multiplier of equation i;
    arbitrary_equations records the imposed constraints in readable form.
    """
    method: str
    target_degree: int
    multiplier_degrees: tuple
    shapes: tuple
    unknowns: int
    condition_rows: int
    surplus_count: int
    arbitrary_equations: tuple
    seed: int = 0
    variation: int = 0
    multiplier_vars: tuple = ()


@dataclass(frozen=True)
class EliminationReport(ReportMixin):
    """apparent == stripped_factor * resultant, exactly"""
    resultant: MultiPoly
    apparent: MultiPoly
    stripped_factor: MultiPoly
    method: str
    plan: Optional[MultiplierPlan] = None
    matrices: list = field(default_factory=list)
    degree_bound: Optional[int] = None
    notes: list = field(default_factory=list)
    trace: list = field(default_factory=list)
    keep: Optional[str] = None

    def degree(self):
        """Degree of the resultant in the kept variable (total degree without one)"""
        if self.resultant.is_zero():
            return None
        if self.keep is None:
            return self.resultant.degree()
        return self.resultant.degree_in(self.keep)

    def text_lines(self):
        degree = self.degree()
        lines = [
            f"method: {self.method}",
            f"resultant: {self.resultant}",
            f"apparent: {self.apparent}",
            f"stripped factor: {self.stripped_factor}",
            f"degree: {'undefined' if degree is None else degree}",
        ]
        if self.degree_bound is not None:
            lines.append(f"degree bound: {self.degree_bound}")
        if self.plan is not None:
            lines.append(f"surplus coefficients: {self.plan.surplus_count}")
            for text in self.plan.arbitrary_equations:
                lines.append(f"arbitrary: {text}")
        lines.extend(f"note: {n}" for n in self.notes)
        return lines


@dataclass(frozen=True)
class IdentityReport(ReportMixin):
    P: MultiPoly
    Q: MultiPoly
    L1: MultiPoly
    L2: MultiPoly
    trace: list = field(default_factory=list)

    def text_lines(self):
        return [f"L1 = {self.L1}, L2 = {self.L2}"]


@dataclass(frozen=True)
class BezoutianReport(ReportMixin):
    method: str
    matrix: object
    determinant: MultiPoly
    resultant: MultiPoly
    relation: str
    trace: list = field(default_factory=list)

    def text_lines(self):
        lines = [f"method: {self.method}"]
        lines.extend(self.matrix.text_lines())
        lines.append(f"determinant: {self.determinant}")
        lines.append(f"relation: {self.relation}")
        lines.append(f"resultant: {self.resultant}")
        return lines


@dataclass(frozen=True)
class CountReport(ReportMixin):
    value: int
    details: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)

    def text_lines(self):
        return [str(self.value)]


@dataclass(frozen=True)
class ClassReport(ReportMixin):
    """Equation (E) of a solvable class and one radical root"""
    n: int
    e1: object
    e2: object
    equation: MultiPoly
    root: str
    branch: int
    residual: str
    trace: list = field(default_factory=list)

    def text_lines(self):
        return [
            f"(E): {self.equation} = 0",
            f"a + b = {self.e1}, a*b = {self.e2}",
            f"root: {self.root}",
            f"branch: {self.branch}",
            f"residual: {self.residual}",
        ]


@dataclass(frozen=True)
class SystemReport(ReportMixin):
    """Canonical echo of a parsed system"""
    vars: tuple
    keep: Optional[str]
    params: tuple
    method: Optional[str]
    seed: Optional[int]
    equations: list
    trace: list = field(default_factory=list)

    def text_lines(self):
        lines = [f"vars: {' '.join(self.vars)}"]
        if self.params:
            lines.append(f"params: {' '.join(self.params)}")
        if self.keep:
            lines.append(f"keep: {self.keep}")
        if self.method:
            lines.append(f"method: {self.method}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines.extend(f"{eq} = 0" for eq in self.equations)
        return lines
