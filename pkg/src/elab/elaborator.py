"""
Bidirectional elaboration of raw programs into core terms

Type-in-type: U : U. Unannotated lambdas and pairs can only be checked.
The Conv rule is the single place where the selected conversion backend is
called, always on the expected and the inferred type.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from src.conv.base import ConvError, ConvOptions
from src.core.raw import (
    ANONYMOUS, RApp, RFst, RLam, RLet, RPair, RPi, RSigma, RSnd, RUnitType, RUnitVal,
    RUniv, RVar, RawProgram, RawTerm,
)
from src.core.syntax import (
    App, Fst, Lam, Let, Pair, Pi, Sigma, Snd, Term, Top, UnitType, UnitVal,
    Univ, Var,
)
from src.elab.backend import Backend, make_conversion
from src.elab.context import ElabCxt
from src.elab.errors import TypeCheckError
from src.nbe.evaluator import (
    TopTable, UnfoldPolicy, apply_closure, evaluate, force, quote, v_fst,
)
from src.nbe.values import (
    UnfoldCounter, Value, VPi, VSigma, VUnitType, VUniv, vvar,
)
from src.utils.config import ensure_recursion_limit

UNIV = VUniv()


@dataclass
class CheckResult:
    """Outcome of checking a whole program"""
    tops: TopTable
    backend: Backend
    unfolds: int
    conversions: int
    speculation_failures: int = 0

    def __len__(self) -> int:
        return len(self.tops)


class Elaborator:
    """Checks one program with one backend and one unfold counter"""

    def __init__(self, backend: Backend = Backend.TYPED, options: ConvOptions = ConvOptions(),
                 counter: Optional[UnfoldCounter] = None):
        self.backend = backend
        self.options = options
        self.counter = UnfoldCounter() if counter is None else counter
        self.conv = make_conversion(backend, self.counter, options)
        self.logger = logging.getLogger(__name__)

    def _eval(self, cxt: ElabCxt, t: Term) -> Value:
        return evaluate(cxt.env, t, cxt.tops)

    def _whnf(self, v: Value) -> Value:
        return force(v, self.counter)

    def _error(self, cxt: ElabCxt, message: str, r: RawTerm, expected: Optional[Value] = None,
               actual: Optional[Value] = None, conv_error: Optional[ConvError] = None) -> TypeCheckError:
        def show(v):
            return None if v is None else quote(cxt.lvl, v, UnfoldPolicy.NONE)
        return TypeCheckError(message, r.span, show(expected), show(actual), cxt.names,
                              self.backend.value, conv_error)

    def infer(self, cxt: ElabCxt, r: RawTerm) -> Tuple[Term, Value]:
        match r:
            case RVar(name):
                lvl = cxt.lookup_local(name)
                if lvl is not None:
                    return Var(cxt.lvl - lvl - 1), cxt.local_types[lvl]
                id = None if name == ANONYMOUS else cxt.tops.lookup(name)
                if id is not None:
                    return Top(id), cxt.tops.type_of(id)
                raise self._error(cxt, f"unbound name: {name}", r)

            case RUniv():
                return Univ(), UNIV
            case RUnitType():
                return UnitType(), UNIV
            case RUnitVal():
                return UnitVal(), VUnitType()

            case RPi(name, dom, cod):
                dom_t = self.check(cxt, dom, UNIV)
                cod_t = self.check(cxt.bind(name, self._eval(cxt, dom_t)), cod, UNIV)
                return Pi(name, dom_t, cod_t), UNIV
            case RSigma(name, first, second):
                first_t = self.check(cxt, first, UNIV)
                second_t = self.check(cxt.bind(name, self._eval(cxt, first_t)), second, UNIV)
                return Sigma(name, first_t, second_t), UNIV

            case RApp(fn, arg):
                fn_t, fn_ty = self.infer(cxt, fn)
                pi = self._whnf(fn_ty)
                if not isinstance(pi, VPi):
                    raise self._error(cxt, "applying a non-function", fn, actual=fn_ty)
                arg_t = self.check(cxt, arg, pi.dom)
                return App(fn_t, arg_t), apply_closure(pi.cod, self._eval(cxt, arg_t))

            case RFst(t):
                t_t, t_ty = self.infer(cxt, t)
                sigma = self._whnf(t_ty)
                if not isinstance(sigma, VSigma):
                    raise self._error(cxt, "projecting from a non-pair", t, actual=t_ty)
                return Fst(t_t), sigma.first
            case RSnd(t):
                t_t, t_ty = self.infer(cxt, t)
                sigma = self._whnf(t_ty)
                if not isinstance(sigma, VSigma):
                    raise self._error(cxt, "projecting from a non-pair", t, actual=t_ty)
                return Snd(t_t), apply_closure(sigma.second, v_fst(self._eval(cxt, t_t)))

            case RLet(name, ty, bound, body):
                ty_t, _, bound_t, inner = self._let(cxt, name, ty, bound)
                body_t, body_ty = self.infer(inner, body)
                return Let(name, ty_t, bound_t, body_t), body_ty

            case RLam():
                raise self._error(cxt, "cannot infer the type of an unannotated lambda", r)
            case RPair():
                raise self._error(cxt, "cannot infer the type of an unannotated pair", r)

        raise TypeError(f"not a raw term: {r!r}")

    def _let(self, cxt: ElabCxt, name: str, ty: RawTerm, bound: RawTerm):
        ty_t = self.check(cxt, ty, UNIV)
        ty_v = self._eval(cxt, ty_t)
        bound_t = self.check(cxt, bound, ty_v)
        return ty_t, ty_v, bound_t, cxt.define(name, ty_v, self._eval(cxt, bound_t))

    def check(self, cxt: ElabCxt, r: RawTerm, expected: Value) -> Term:
        match r:
            case RLam(name, body):
                pi = self._whnf(expected)
                if not isinstance(pi, VPi):
                    raise self._error(cxt, "lambda checked against a non-function type", r,
                                      expected=expected)
                body_t = self.check(cxt.bind(name, pi.dom), body, apply_closure(pi.cod, vvar(cxt.lvl)))
                return Lam(name, body_t)

            case RPair(first, second):
                sigma = self._whnf(expected)
                if not isinstance(sigma, VSigma):
                    raise self._error(cxt, "pair checked against a non-pair type", r,
                                      expected=expected)
                first_t = self.check(cxt, first, sigma.first)
                second_t = self.check(cxt, second,
                                      apply_closure(sigma.second, self._eval(cxt, first_t)))
                return Pair(first_t, second_t)

            case RLet(name, ty, bound, body):
                ty_t, _, bound_t, inner = self._let(cxt, name, ty, bound)
                return Let(name, ty_t, bound_t, self.check(inner, body, expected))

        # Conv
        term, actual = self.infer(cxt, r)
        try:
            self.conv.conv_types(cxt.conv_cxt(), expected, actual)
        except ConvError as e:
            raise self._error(cxt, "type mismatch", r, expected, actual, e) from e
        return term

    def check_program(self, program: RawProgram) -> CheckResult:
        ensure_recursion_limit()
        tops = TopTable()
        self.logger.info(f"Checking {len(program)} definitions with the {self.backend.value} backend")

        for decl in program:
            cxt = ElabCxt(tops)
            if tops.lookup(decl.name) is not None:
                raise TypeCheckError(f"duplicate definition: {decl.name}", decl.span,
                                     backend=self.backend.value)
            type_t = self.check(cxt, decl.type, UNIV)
            type_v = evaluate((), type_t, tops)
            body_t = self.check(cxt, decl.body, type_v)
            tops.define(decl.name, type_t, body_t, type_v)
            self.logger.debug(f"Checked {decl.name} ({self.counter.count} unfolds so far)")

        return CheckResult(tops, self.backend, self.counter.count, self.conv.calls,
                           self.conv.speculation_failures)


def check_program(program: RawProgram, backend: Backend = Backend.TYPED,
                  options: ConvOptions = ConvOptions()) -> CheckResult:
    return Elaborator(backend, options).check_program(program)
