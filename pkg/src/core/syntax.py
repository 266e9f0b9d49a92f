"""
Core terms with de Bruijn indices

Display names are carried for printing only: every name field is excluded
from equality, so `==` on terms is alpha-equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class TopLevelId:
    """A checked definition: its 0-based position in the file and its name"""
    ordinal: int
    name: str = field(compare=False)

    def __str__(self) -> str:
        return self.name


class Term:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Term):
    ix: int


@dataclass(frozen=True, slots=True)
class Top(Term):
    id: TopLevelId


@dataclass(frozen=True, slots=True)
class App(Term):
    fn: Term
    arg: Term


@dataclass(frozen=True, slots=True)
class Lam(Term):
    name: str = field(compare=False)
    body: Term = None


@dataclass(frozen=True, slots=True)
class Pi(Term):
    name: str = field(compare=False)
    dom: Term = None
    cod: Term = None


@dataclass(frozen=True, slots=True)
class Sigma(Term):
    name: str = field(compare=False)
    first: Term = None
    second: Term = None


@dataclass(frozen=True, slots=True)
class Pair(Term):
    first: Term
    second: Term


@dataclass(frozen=True, slots=True)
class Fst(Term):
    t: Term


@dataclass(frozen=True, slots=True)
class Snd(Term):
    t: Term


@dataclass(frozen=True, slots=True)
class UnitType(Term):
    pass


@dataclass(frozen=True, slots=True)
class UnitVal(Term):
    pass


@dataclass(frozen=True, slots=True)
class Univ(Term):
    pass


@dataclass(frozen=True, slots=True)
class Let(Term):
    name: str = field(compare=False)
    type: Term = None
    bound: Term = None
    body: Term = None


def shift_check(t: Term, depth: int = 0) -> bool:
    """True iff every Var index is below its binder depth plus `depth`"""
    match t:
        case Var(ix):
            return 0 <= ix < depth
        case Top() | UnitType() | UnitVal() | Univ():
            return True
        case App(fn, arg):
            return shift_check(fn, depth) and shift_check(arg, depth)
        case Lam(_, body):
            return shift_check(body, depth + 1)
        case Pi(_, dom, cod) | Sigma(_, dom, cod):
            return shift_check(dom, depth) and shift_check(cod, depth + 1)
        case Pair(first, second):
            return shift_check(first, depth) and shift_check(second, depth)
        case Fst(u) | Snd(u):
            return shift_check(u, depth)
        case Let(_, ty, bound, body):
            return (shift_check(ty, depth) and shift_check(bound, depth)
                    and shift_check(body, depth + 1))
    raise TypeError(f"not a term: {t!r}")


def top_names(t: Term) -> set:
    """Names of the top-level definitions a term refers to"""
    found = set()
    stack = [t]
    while stack:
        match stack.pop():
            case Top(id):
                found.add(id.name)
            case App(a, b) | Pair(a, b) | Pi(_, a, b) | Sigma(_, a, b):
                stack.extend((a, b))
            case Lam(_, body) | Fst(body) | Snd(body):
                stack.append(body)
            case Let(_, ty, bound, body):
                stack.extend((ty, bound, body))
    return found


def mentions_var(t: Term, ix: int) -> bool:
    """Whether index `ix` (relative to t's root) occurs free in t"""
    match t:
        case Var(i):
            return i == ix
        case Top() | UnitType() | UnitVal() | Univ():
            return False
        case App(a, b) | Pair(a, b):
            return mentions_var(a, ix) or mentions_var(b, ix)
        case Lam(_, body):
            return mentions_var(body, ix + 1)
        case Pi(_, dom, cod) | Sigma(_, dom, cod):
            return mentions_var(dom, ix) or mentions_var(cod, ix + 1)
        case Fst(u) | Snd(u):
            return mentions_var(u, ix)
        case Let(_, ty, bound, body):
            return (mentions_var(ty, ix) or mentions_var(bound, ix)
                    or mentions_var(body, ix + 1))
    raise TypeError(f"not a term: {t!r}")
