"""
Pretty printer for core terms, emitting the surface grammar accepted by the parser
"""

from __future__ import annotations

from typing import Iterable, Sequence, Set, Tuple

from src.core.raw import ANONYMOUS, KEYWORDS
from src.core.syntax import (
    App, Fst, Lam, Let, Pair, Pi, Sigma, Snd, Term, Top, UnitType, UnitVal,
    Univ, Var, mentions_var, top_names,
)

# Precedence levels, loosest first
EXPR, APP, PROJ, ATOM = range(4)


class _Printer:
    def __init__(self, reserved: Set[str]):
        self.reserved = set(reserved) | KEYWORDS

    def binder(self, name: str, names: Tuple[str, ...], used: bool) -> str:
        in_scope = set(names)
        if not used:
            return name if name not in in_scope and name not in self.reserved else ANONYMOUS
        candidate = "x" if name == ANONYMOUS or not name else name
        base = candidate.rstrip("0123456789") or "x"
        n = 0
        while candidate in in_scope or candidate in self.reserved:
            n += 1
            candidate = f"{base}{n}"
        return candidate

    def show(self, t: Term, names: Tuple[str, ...], prec: int) -> str:
        text, level = self._go(t, names)
        return f"({text})" if level < prec else text

    def _go(self, t: Term, names: Tuple[str, ...]):
        match t:
            case Var(ix):
                if 0 <= ix < len(names):
                    return names[len(names) - 1 - ix], ATOM
                return f"#{ix}", ATOM
            case Top(id):
                return id.name, ATOM
            case Univ():
                return "U", ATOM
            case UnitType():
                return "Unit", ATOM
            case UnitVal():
                return "tt", ATOM
            case Pair(a, b):
                return f"({self.show(a, names, EXPR)}, {self.show(b, names, EXPR)})", ATOM
            case Fst(u):
                return f"{self.show(u, names, PROJ)}.1", PROJ
            case Snd(u):
                return f"{self.show(u, names, PROJ)}.2", PROJ
            case App(fn, arg):
                return f"{self.show(fn, names, APP)} {self.show(arg, names, PROJ)}", APP
            case Lam():
                binders = []
                while isinstance(t, Lam):
                    x = self.binder(t.name, names, mentions_var(t.body, 0))
                    binders.append(x)
                    names = names + (x,)
                    t = t.body
                return f"\\{' '.join(binders)}. {self.show(t, names, EXPR)}", EXPR
            case Pi(name, dom, cod):
                return self._binding(name, dom, cod, names, "->"), EXPR
            case Sigma(name, first, second):
                return self._binding(name, first, second, names, "*"), EXPR
            case Let(name, ty, bound, body):
                x = self.binder(name, names, mentions_var(body, 0))
                return (f"let {x} : {self.show(ty, names, EXPR)} := "
                        f"{self.show(bound, names, EXPR)}; {self.show(body, names + (x,), EXPR)}"), EXPR
        raise TypeError(f"not a term: {t!r}")

    def _binding(self, name, dom, cod, names, arrow) -> str:
        if not mentions_var(cod, 0):
            return f"{self.show(dom, names, APP)} {arrow} {self.show(cod, names + (ANONYMOUS,), EXPR)}"
        x = self.binder(name, names, True)
        return f"({x} : {self.show(dom, names, EXPR)}) {arrow} {self.show(cod, names + (x,), EXPR)}"


def pretty(t: Term, names: Sequence[str] = ()) -> str:
    """Render a term; `names` are the enclosing binders, innermost last"""
    return _Printer(top_names(t)).show(t, tuple(names), EXPR)


def pretty_program(entries: Iterable) -> str:
    """Render checked definitions (objects with id, type_term, body_term) as a program"""
    lines = []
    for entry in entries:
        lines.append(f"def {entry.id.name} : {pretty(entry.type_term)} := {pretty(entry.body_term)}")
    return "\n".join(lines) + ("\n" if lines else "")
