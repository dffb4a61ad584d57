from dataclasses import dataclass
from typing import Optional

from config import Config
from exceptions import SizeGuardError, UsageError
from models.polynomial import VarTable


@dataclass(frozen=True)
class PolySystem:
    """Equations over the unknowns `vars` plus symbolic `params`.

    Every equation lives in `table` (unknowns first, then params). `keep` is
    the unknown that survives elimination.
    """
    equations: tuple
    vars: VarTable
    keep: Optional[str] = None
    params: tuple = ()
    method: Optional[str] = None
    seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'equations', tuple(self.equations))
        object.__setattr__(self, 'params', tuple(self.params))
        if not self.equations:
            raise UsageError("a system needs at least one equation")
        if self.keep is not None and self.keep not in self.vars:
            raise UsageError(f"keep variable '{self.keep}' is not among {list(self.vars)}")
        clash = [p for p in self.params if p in self.vars]
        if clash:
            raise UsageError(f"{clash} declared both as variables and parameters")
        table = self.table
        for eq in self.equations:
            if eq.vars != table:
                raise UsageError("equations must be expressed over the system's variable table")

    @property
    def table(self):
        return VarTable(tuple(self.vars.names) + self.params)

    @property
    def eliminated(self):
        return tuple(n for n in self.vars if n != self.keep)

    def degrees(self, names=None):
        """Total degree of each equation in `names` (default: all unknowns)"""
        names = tuple(self.vars) if names is None else tuple(names)
        return [eq.degree_in_set(names) for eq in self.equations]

    def check_size(self):
        """Desk-scale guard over the unknowns (disabled by BEZOUT_SIZE_GUARD=off)"""
        if not Config.SIZE_GUARD_ENABLED:
            return
        if len(self.vars) > Config.MAX_VARS:
            raise SizeGuardError(f"{len(self.vars)} unknowns exceed the limit of {Config.MAX_VARS}")
        if len(self.equations) > Config.MAX_EQUATIONS:
            raise SizeGuardError(
                f"{len(self.equations)} equations exceed the limit of {Config.MAX_EQUATIONS}"
            )
        worst = max(self.degrees())
        if worst > Config.MAX_DEGREE:
            raise SizeGuardError(f"degree {worst} exceeds the limit of {Config.MAX_DEGREE}")
