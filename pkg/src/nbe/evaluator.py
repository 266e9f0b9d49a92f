"""
Normalization by evaluation

`evaluate` interprets core terms into weak-head values under an environment;
`quote` reads values back into beta-normal terms. Top-level references
evaluate to glued neutrals whose unfolding is a memoized thunk that only
`unfold`/`force` ever run, and only those two count unfoldings.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional

from src.core.syntax import (
    App, Fst, Lam, Let, Pair, Pi, Sigma, Snd, Term, Top, TopLevelId, UnitType,
    UnitVal, Univ, Var,
)
from src.nbe.values import (
    Closure, Env, Lazy, LocalHead, SApp, SFst, SId, SSnd, Spine,
    UnfoldCounter, Value, VLam, VNeutral, VPair, VPi, VSigma, VUnitType,
    VUnitVal, VUniv, vtop, vvar,
)
from src.utils.errors import InternalError

logger = logging.getLogger(__name__)


class UnfoldPolicy(Enum):
    ALL = "unfold-all"
    NONE = "unfold-none"


@dataclass
class TopEntry:
    id: TopLevelId
    type_term: Term
    body_term: Term
    type_value: Value
    value: Lazy


class TopTable:
    """Checked top-level definitions in file order: signatures and glued values"""

    def __init__(self):
        self._entries: List[TopEntry] = []
        self._by_name: Dict[str, TopLevelId] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[TopEntry]:
        return iter(self._entries)

    def define(self, name: str, type_term: Term, body_term: Term, type_value: Value) -> TopLevelId:
        if name in self._by_name:
            raise ValueError(f"duplicate top-level name: {name}")
        id = TopLevelId(len(self._entries), name)
        value = Lazy(lambda: evaluate((), body_term, self))
        self._entries.append(TopEntry(id, type_term, body_term, type_value, value))
        self._by_name[name] = id
        logger.debug(f"Defined {id}")
        return id

    def lookup(self, name: str) -> Optional[TopLevelId]:
        return self._by_name.get(name)

    def entry(self, id: TopLevelId) -> TopEntry:
        return self._entries[id.ordinal]

    def type_of(self, id: TopLevelId) -> Value:
        return self._entries[id.ordinal].type_value

    def glued(self, id: TopLevelId) -> VNeutral:
        return vtop(id, self._entries[id.ordinal].value)


def evaluate(env: Env, t: Term, tops: TopTable) -> Value:
    match t:
        case Var(ix):
            return env[len(env) - 1 - ix]
        case Top(id):
            return tops.glued(id)
        case App(fn, arg):
            return v_app(evaluate(env, fn, tops), evaluate(env, arg, tops))
        case Lam(name, body):
            return VLam(name, Closure(env, body, tops))
        case Pi(name, dom, cod):
            return VPi(name, evaluate(env, dom, tops), Closure(env, cod, tops))
        case Sigma(name, first, second):
            return VSigma(name, evaluate(env, first, tops), Closure(env, second, tops))
        case Pair(first, second):
            return VPair(evaluate(env, first, tops), evaluate(env, second, tops))
        case Fst(u):
            return v_fst(evaluate(env, u, tops))
        case Snd(u):
            return v_snd(evaluate(env, u, tops))
        case UnitType():
            return VUnitType()
        case UnitVal():
            return VUnitVal()
        case Univ():
            return VUniv()
        case Let(_, _, bound, body):
            return evaluate(env + (evaluate(env, bound, tops),), body, tops)
    raise InternalError(f"cannot evaluate {t!r}")


def apply_closure(c: Closure, v: Value) -> Value:
    return evaluate(c.env + (v,), c.body, c.tops)


def v_app(f: Value, a: Value) -> Value:
    if isinstance(f, VLam):
        return apply_closure(f.closure, a)
    if isinstance(f, VNeutral):
        unfolded = f.unfolded
        if unfolded is not None:
            unfolded = unfolded.map(lambda u: v_app(u, a))
        return VNeutral(f.head, SApp(f.spine, a), unfolded)
    raise InternalError(f"application of a non-function: {f!r}")


def v_fst(v: Value) -> Value:
    if isinstance(v, VPair):
        return v.first
    if isinstance(v, VNeutral):
        unfolded = v.unfolded.map(v_fst) if v.unfolded is not None else None
        return VNeutral(v.head, SFst(v.spine), unfolded)
    raise InternalError(f"first projection of a non-pair: {v!r}")


def v_snd(v: Value) -> Value:
    if isinstance(v, VPair):
        return v.second
    if isinstance(v, VNeutral):
        unfolded = v.unfolded.map(v_snd) if v.unfolded is not None else None
        return VNeutral(v.head, SSnd(v.spine), unfolded)
    raise InternalError(f"second projection of a non-pair: {v!r}")


def v_spine(head: Value, sp: Spine) -> Value:
    """Re-apply a spine's eliminators to a value, base first"""
    match sp:
        case SId():
            return head
        case SApp(rest, arg):
            return v_app(v_spine(head, rest), arg)
        case SFst(rest):
            return v_fst(v_spine(head, rest))
        case SSnd(rest):
            return v_snd(v_spine(head, rest))
    raise InternalError(f"not a spine: {sp!r}")


def unfold(v: Value, counter: UnfoldCounter) -> Value:
    """Unfold exactly one top-level head"""
    if isinstance(v, VNeutral) and v.unfolded is not None:
        counter.tick()
        return v.unfolded.force()
    return v


def force(v: Value, counter: UnfoldCounter) -> Value:
    """Unfold top-level heads until the head is not a definition"""
    while isinstance(v, VNeutral) and v.unfolded is not None:
        counter.tick()
        v = v.unfolded.force()
    return v


def quote(lvl: int, v: Value, policy: UnfoldPolicy = UnfoldPolicy.NONE,
          counter: Optional[UnfoldCounter] = None) -> Term:
    """Read a value back into a beta-normal term at binder depth `lvl`"""
    if counter is None:
        counter = UnfoldCounter()
    if policy is UnfoldPolicy.ALL:
        v = force(v, counter)
    match v:
        case VNeutral(head, spine):
            if isinstance(head, LocalHead):
                t = Var(lvl - head.lvl - 1)
            else:
                t = Top(head.id)
            return _quote_spine(lvl, t, spine, policy, counter)
        case VLam(name, closure):
            return Lam(name, quote(lvl + 1, apply_closure(closure, vvar(lvl)), policy, counter))
        case VPi(name, dom, cod):
            return Pi(name, quote(lvl, dom, policy, counter),
                      quote(lvl + 1, apply_closure(cod, vvar(lvl)), policy, counter))
        case VSigma(name, first, second):
            return Sigma(name, quote(lvl, first, policy, counter),
                         quote(lvl + 1, apply_closure(second, vvar(lvl)), policy, counter))
        case VPair(first, second):
            return Pair(quote(lvl, first, policy, counter), quote(lvl, second, policy, counter))
        case VUnitType():
            return UnitType()
        case VUnitVal():
            return UnitVal()
        case VUniv():
            return Univ()
    raise InternalError(f"cannot quote {v!r}")


def _quote_spine(lvl: int, head: Term, sp: Spine, policy: UnfoldPolicy,
                 counter: UnfoldCounter) -> Term:
    match sp:
        case SId():
            return head
        case SApp(rest, arg):
            return App(_quote_spine(lvl, head, rest, policy, counter), quote(lvl, arg, policy, counter))
        case SFst(rest):
            return Fst(_quote_spine(lvl, head, rest, policy, counter))
        case SSnd(rest):
            return Snd(_quote_spine(lvl, head, rest, policy, counter))
    raise InternalError(f"not a spine: {sp!r}")


def normalize(t: Term, tops: TopTable, policy: UnfoldPolicy = UnfoldPolicy.ALL) -> Term:
    """quote . evaluate for a closed term"""
    return quote(0, evaluate((), t, tops), policy)

