"""
Elaboration context
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from src.conv.base import ConvCxt
from src.core.raw import ANONYMOUS
from src.nbe.evaluator import TopTable
from src.nbe.values import Env, Value, vvar


@dataclass(frozen=True)
class ElabCxt:
    """Local scope while checking one declaration.

    `env`, `local_types` and `names` are indexed by level and always have
    length `lvl`. Let-bound entries hold their value in `env`; lambda and
    binder entries hold a fresh variable.
    """
    tops: TopTable
    lvl: int = 0
    env: Env = ()
    local_types: Tuple[Value, ...] = ()
    names: Tuple[str, ...] = ()

    def bind(self, name: str, ty: Value) -> "ElabCxt":
        return ElabCxt(self.tops, self.lvl + 1, self.env + (vvar(self.lvl),),
                       self.local_types + (ty,), self.names + (name,))

    def define(self, name: str, ty: Value, value: Value) -> "ElabCxt":
        return ElabCxt(self.tops, self.lvl + 1, self.env + (value,),
                       self.local_types + (ty,), self.names + (name,))

    def lookup_local(self, name: str) -> Optional[int]:
        """Level of the innermost binder called `name`"""
        if name == ANONYMOUS:
            return None
        for lvl in range(self.lvl - 1, -1, -1):
            if self.names[lvl] == name:
                return lvl
        return None

    def conv_cxt(self) -> ConvCxt:
        return ConvCxt(self.lvl, self.local_types, self.tops)
