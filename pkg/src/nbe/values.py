"""
Semantic domain: values with de Bruijn levels, spines, closures and glued top-level heads
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Tuple

from src.core.syntax import Term, TopLevelId


class Lazy:
    """Memoized thunk; the computation runs at most once even when forced from several threads"""

    __slots__ = ("_thunk", "_value", "_lock")

    def __init__(self, thunk: Callable[[], "Value"]):
        self._thunk = thunk
        self._value = None
        self._lock = threading.Lock()

    @property
    def is_forced(self) -> bool:
        return self._thunk is None

    def force(self) -> "Value":
        if self._thunk is not None:
            with self._lock:
                thunk = self._thunk
                if thunk is not None:
                    self._value = thunk()
                    self._thunk = None
        return self._value

    def map(self, fn: Callable[["Value"], "Value"]) -> "Lazy":
        return Lazy(lambda: fn(self.force()))


class UnfoldCounter:
    """Counts top-level unfoldings during one checking run; never decreases"""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def tick(self):
        self.count += 1

    def __repr__(self) -> str:
        return f"UnfoldCounter({self.count})"


# Heads

class Head:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class LocalHead(Head):
    lvl: int


@dataclass(frozen=True, slots=True)
class TopHead(Head):
    id: TopLevelId


# Spines, innermost eliminator at the base

class Spine:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class SId(Spine):
    pass


@dataclass(frozen=True, slots=True)
class SApp(Spine):
    rest: Spine
    arg: "Value"


@dataclass(frozen=True, slots=True)
class SFst(Spine):
    rest: Spine


@dataclass(frozen=True, slots=True)
class SSnd(Spine):
    rest: Spine


SID = SId()


def spine_length(sp: Spine) -> int:
    n = 0
    while not isinstance(sp, SId):
        sp = sp.rest
        n += 1
    return n


# Values

class Value:
    __slots__ = ()


Env = Tuple[Value, ...]


@dataclass(frozen=True, slots=True)
class Closure:
    env: Env
    body: Term
    tops: Any = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, slots=True)
class VNeutral(Value):
    head: Head
    spine: Spine = SID
    unfolded: Optional[Lazy] = field(default=None, compare=False, repr=False)

    @property
    def is_top(self) -> bool:
        return isinstance(self.head, TopHead)


@dataclass(frozen=True, slots=True)
class VLam(Value):
    name: str = field(compare=False)
    closure: Closure = None


@dataclass(frozen=True, slots=True)
class VPi(Value):
    name: str = field(compare=False)
    dom: Value = None
    cod: Closure = None


@dataclass(frozen=True, slots=True)
class VSigma(Value):
    name: str = field(compare=False)
    first: Value = None
    second: Closure = None


@dataclass(frozen=True, slots=True)
class VPair(Value):
    first: Value
    second: Value


@dataclass(frozen=True, slots=True)
class VUnitType(Value):
    pass


@dataclass(frozen=True, slots=True)
class VUnitVal(Value):
    pass


@dataclass(frozen=True, slots=True)
class VUniv(Value):
    pass


def vvar(lvl: int) -> VNeutral:
    """Fresh local variable at a level"""
    return VNeutral(LocalHead(lvl), SID)


def vtop(id: TopLevelId, unfolded: Lazy) -> VNeutral:
    return VNeutral(TopHead(id), SID, unfolded)


def is_top_neutral(v: Value) -> bool:
    return isinstance(v, VNeutral) and isinstance(v.head, TopHead)
