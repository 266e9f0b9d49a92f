"""
Pieces shared by both conversion checkers: context, options, errors, interface
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from src.core.pretty import pretty
from src.core.syntax import Term
from src.nbe.evaluator import TopTable, UnfoldPolicy, quote
from src.nbe.values import UnfoldCounter, Value, vvar
from src.utils.errors import EtaBenchError


@dataclass(frozen=True)
class ConvOptions:
    speculate: bool = True
    sigma_unit_eta: bool = True


@dataclass(frozen=True)
class ConvCxt:
    """Next fresh level and the type of every bound level"""
    lvl: int
    local_types: Tuple[Value, ...]
    tops: TopTable

    @classmethod
    def empty(cls, tops: TopTable) -> "ConvCxt":
        return cls(0, (), tops)

    def bind(self, ty: Value) -> "ConvCxt":
        return ConvCxt(self.lvl + 1, self.local_types + (ty,), self.tops)

    def fresh(self) -> Value:
        return vvar(self.lvl)


class ConvError(EtaBenchError):
    """Two values are not judgmentally equal; quoted lazily for display"""

    def __init__(self, lvl: int, lhs: Optional[Value], rhs: Optional[Value], position: str,
                 ty: Optional[Value] = None):
        self.lvl = lvl
        self.lhs = lhs
        self.rhs = rhs
        self.position = position
        self.ty = ty
        super().__init__(position)

    def _quote(self, v: Optional[Value]) -> Optional[Term]:
        return None if v is None else quote(self.lvl, v, UnfoldPolicy.NONE)

    @property
    def lhs_term(self) -> Optional[Term]:
        return self._quote(self.lhs)

    @property
    def rhs_term(self) -> Optional[Term]:
        return self._quote(self.rhs)

    @property
    def ty_term(self) -> Optional[Term]:
        return self._quote(self.ty)

    def describe(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None or len(names) != self.lvl:
            names = tuple(f"v{i}" for i in range(self.lvl))
        parts = [self.position]
        if self.lhs is not None and self.rhs is not None:
            parts.append(f"{pretty(self.lhs_term, names)} =/= {pretty(self.rhs_term, names)}")
        if self.ty is not None:
            parts.append(f"at type {pretty(self.ty_term, names)}")
        return ": ".join(parts[:2]) + (f" {parts[2]}" if len(parts) > 2 else "")

    def __str__(self) -> str:
        return self.describe()


class Conversion(ABC):
    """A judgmental-equality strategy plugged into the Conv rule"""

    backend_name = "abstract"

    def __init__(self, counter: Optional[UnfoldCounter] = None,
                 options: ConvOptions = ConvOptions()):
        self.counter = UnfoldCounter() if counter is None else counter
        self.options = options
        self.logger = logging.getLogger(__name__)
        self.calls = 0
        self.speculation_failures = 0

    def conv_types(self, cxt: ConvCxt, expected: Value, actual: Value) -> None:
        """Raise ConvError unless the two type values are equal"""
        self.calls += 1
        self._conv_types(cxt, expected, actual)

    @abstractmethod
    def _conv_types(self, cxt: ConvCxt, expected: Value, actual: Value) -> None:
        pass
