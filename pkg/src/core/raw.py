"""
Surface syntax produced by the parser, before name resolution
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

KEYWORDS = frozenset({"def", "let", "U", "Unit", "tt"})

# Binder name that can never be referenced
ANONYMOUS = "_"


@dataclass(frozen=True, slots=True)
class Span:
    """Half-open character range [start, end) in the source text"""
    start: int
    end: int

    def __post_init__(self):
        if self.end <= self.start or self.start < 0:
            raise ValueError(f"empty or negative span: {self.start}..{self.end}")

    def to(self, other: "Span") -> "Span":
        return Span(self.start, max(self.end, other.end))

    def line_col(self, source: str) -> Tuple[int, int]:
        """1-based line and column of the span start"""
        line = source.count("\n", 0, self.start) + 1
        col = self.start - (source.rfind("\n", 0, self.start) + 1) + 1
        return line, col


class RawTerm:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class RVar(RawTerm):
    name: str
    span: Span


@dataclass(frozen=True, slots=True)
class RApp(RawTerm):
    fn: RawTerm
    arg: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RLam(RawTerm):
    name: str
    body: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RPi(RawTerm):
    name: str
    dom: RawTerm
    cod: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RSigma(RawTerm):
    name: str
    first: RawTerm
    second: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RPair(RawTerm):
    first: RawTerm
    second: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RFst(RawTerm):
    t: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RSnd(RawTerm):
    t: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RUnitType(RawTerm):
    span: Span


@dataclass(frozen=True, slots=True)
class RUnitVal(RawTerm):
    span: Span


@dataclass(frozen=True, slots=True)
class RUniv(RawTerm):
    span: Span


@dataclass(frozen=True, slots=True)
class RLet(RawTerm):
    name: str
    type: RawTerm
    bound: RawTerm
    body: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RawDecl:
    name: str
    type: RawTerm
    body: RawTerm
    span: Span


@dataclass(frozen=True, slots=True)
class RawProgram:
    decls: Tuple[RawDecl, ...] = ()

    def __len__(self) -> int:
        return len(self.decls)

    def __iter__(self):
        return iter(self.decls)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(d.name for d in self.decls)
