from dataclasses import dataclass, field
from fractions import Fraction

from exceptions import UsageError
from models.base import ReportMixin
from models.polynomial import MultiPoly, VarTable


class RingMatrix:
    """Dense row-major matrix of MultiPoly entries sharing one VarTable"""

    __slots__ = ('rows', 'cols', 'entries', 'vars')

    def __init__(self, rows, cols, entries, vars):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise UsageError(f"expected {rows * cols} entries, got {len(entries)}")
        for entry in entries:
            if entry.vars != vars:
                raise UsageError("matrix entries must share one variable table")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.vars = vars

    @classmethod
    def from_rows(cls, rows, vars=None):
        """Build from nested lists of MultiPoly or rationals"""
        rows = [list(r) for r in rows]
        if vars is None:
            vars = next(
                (e.vars for r in rows for e in r if isinstance(e, MultiPoly)),
                VarTable(()),
            )
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise UsageError("ragged matrix rows")
        entries = [
            e if isinstance(e, MultiPoly) else MultiPoly.const(Fraction(e), vars)
            for r in rows for e in r
        ]
        return cls(len(rows), width, entries, vars)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def row_lists(self):
        return [self.row(i) for i in range(self.rows)]

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def is_square(self):
        return self.rows == self.cols

    def transpose(self):
        return RingMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], self.vars
        )

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def to_dict(self):
        return {
            'rows': self.rows,
            'cols': self.cols,
            'entries': [[str(e) for e in r] for r in self.row_lists()],
        }

    def text_lines(self):
        cells = [[str(e) for e in r] for r in self.row_lists()]
        width = max((len(c) for r in cells for c in r), default=1)
        return ['[ ' + '  '.join(c.rjust(width) for c in r) + ' ]' for r in cells]

    def __repr__(self):
        return f"RingMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class LinearSolveResult(ReportMixin):
    """values[i] / denominator solves the system when solvable"""
    values: list
    denominator: MultiPoly
    solvable: bool
    final_line: list = field(default_factory=list)
