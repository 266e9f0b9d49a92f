"""
Reference normalizer by de Bruijn shifting and substitution

Independent of the evaluator: it rewrites terms directly, unfolding every
top-level reference, and is only meant for small test inputs.
"""

from typing import Sequence

from src.core.syntax import (
    App, Fst, Lam, Let, Pair, Pi, Sigma, Snd, Term, Top, Var,
)


def shift(t: Term, d: int, cutoff: int = 0) -> Term:
    match t:
        case Var(ix):
            return Var(ix + d) if ix >= cutoff else t
        case App(fn, arg):
            return App(shift(fn, d, cutoff), shift(arg, d, cutoff))
        case Lam(name, body):
            return Lam(name, shift(body, d, cutoff + 1))
        case Pi(name, dom, cod):
            return Pi(name, shift(dom, d, cutoff), shift(cod, d, cutoff + 1))
        case Sigma(name, first, second):
            return Sigma(name, shift(first, d, cutoff), shift(second, d, cutoff + 1))
        case Pair(first, second):
            return Pair(shift(first, d, cutoff), shift(second, d, cutoff))
        case Fst(u):
            return Fst(shift(u, d, cutoff))
        case Snd(u):
            return Snd(shift(u, d, cutoff))
        case Let(name, ty, bound, body):
            return Let(name, shift(ty, d, cutoff), shift(bound, d, cutoff), shift(body, d, cutoff + 1))
    return t


def subst(t: Term, j: int, s: Term) -> Term:
    """Replace Var j by s"""
    match t:
        case Var(ix):
            return s if ix == j else t
        case App(fn, arg):
            return App(subst(fn, j, s), subst(arg, j, s))
        case Lam(name, body):
            return Lam(name, subst(body, j + 1, shift(s, 1)))
        case Pi(name, dom, cod):
            return Pi(name, subst(dom, j, s), subst(cod, j + 1, shift(s, 1)))
        case Sigma(name, first, second):
            return Sigma(name, subst(first, j, s), subst(second, j + 1, shift(s, 1)))
        case Pair(first, second):
            return Pair(subst(first, j, s), subst(second, j, s))
        case Fst(u):
            return Fst(subst(u, j, s))
        case Snd(u):
            return Snd(subst(u, j, s))
        case Let(name, ty, bound, body):
            return Let(name, subst(ty, j, s), subst(bound, j, s), subst(body, j + 1, shift(s, 1)))
    return t


def instantiate(body: Term, s: Term) -> Term:
    return shift(subst(body, 0, shift(s, 1)), -1)


def whnf(t: Term, bodies: Sequence[Term]) -> Term:
    while True:
        match t:
            case Top(id):
                t = bodies[id.ordinal]
                continue
            case Let(_, _, bound, body):
                t = instantiate(body, bound)
                continue
            case App(fn, arg):
                fn = whnf(fn, bodies)
                if isinstance(fn, Lam):
                    t = instantiate(fn.body, arg)
                    continue
                return App(fn, arg)
            case Fst(u):
                u = whnf(u, bodies)
                if isinstance(u, Pair):
                    t = u.first
                    continue
                return Fst(u)
            case Snd(u):
                u = whnf(u, bodies)
                if isinstance(u, Pair):
                    t = u.second
                    continue
                return Snd(u)
        return t


def oracle_normalize(t: Term, bodies: Sequence[Term] = ()) -> Term:
    """Beta normal form with every top-level reference unfolded"""
    t = whnf(t, bodies)
    match t:
        case Lam(name, body):
            return Lam(name, oracle_normalize(body, bodies))
        case Pi(name, dom, cod):
            return Pi(name, oracle_normalize(dom, bodies), oracle_normalize(cod, bodies))
        case Sigma(name, first, second):
            return Sigma(name, oracle_normalize(first, bodies), oracle_normalize(second, bodies))
        case Pair(first, second):
            return Pair(oracle_normalize(first, bodies), oracle_normalize(second, bodies))
        case App(fn, arg):
            return App(oracle_normalize(fn, bodies), oracle_normalize(arg, bodies))
        case Fst(u):
            return Fst(oracle_normalize(u, bodies))
        case Snd(u):
            return Snd(oracle_normalize(u, bodies))
    return t


def table_bodies(tops) -> list:
    """Body terms of a TopTable, indexed by ordinal"""
    return [entry.body_term for entry in tops]
