"""
Deterministic benchmark program generators

Every family is a function of its SuiteSpec alone: the same spec always
yields byte-identical source text, on every platform.

  stlc            Church-encoded simply typed lambda calculus syntax; the
                  work is in the TYPES of the object definitions
  asymptotics     Church numeral and tree arithmetic; the work is in TERMS
                  whose types stay small
  eta             obligations that only hold with Unit-eta or Sigma-eta
  etafree-random  seeded random programs whose verdict must not depend on
                  the conversion backend
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List

from src.utils.errors import BenchError

logger = logging.getLogger(__name__)

FAMILIES = ("stlc", "asymptotics", "eta", "etafree-random")

# Default size and seed per family for the harness and the CLI
SUITE_DEFAULTS: Dict[str, Dict[str, int]] = {
    "stlc": {"size": 100, "seed": 0},
    "asymptotics": {"size": 50, "seed": 0},
    "eta": {"size": 20, "seed": 0},
    "etafree-random": {"size": 4, "seed": 1},
}


class Lcg:
    """32-bit linear congruential generator"""

    MULTIPLIER = 1664525
    INCREMENT = 1013904223
    MODULUS = 2 ** 32

    def __init__(self, seed: int):
        self.state = seed % self.MODULUS

    def next(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) % self.MODULUS
        return self.state

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n) from the high bits"""
        if n <= 0:
            raise ValueError(f"below() needs a positive bound, got {n}")
        return (self.next() >> 16) % n

    def chance(self, percent: int) -> bool:
        return self.below(100) < percent

    def pick(self, items):
        return items[self.below(len(items))]


@dataclass(frozen=True)
class SuiteSpec:
    family: str
    size: int
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BenchError(f"unknown suite family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.size < 1:
            raise BenchError(f"suite size must be at least 1, got {self.size}")

    @property
    def label(self) -> str:
        return f"{self.family}-{self.size}"


def _program(lines: List[str]) -> str:
    return "\n".join(lines) + "\n"


def _church_nat(n: int) -> str:
    body = "z"
    for _ in range(n):
        body = f"s ({body})" if body != "z" else "s z"
    return f"\\N s z. {body}"


def _church_tree(depth: int) -> str:
    def go(d: int) -> str:
        if d == 0:
            return "l"
        sub = go(d - 1)
        return f"n ({sub}) ({sub})" if d > 1 else "n l l"
    return f"\\T l n. {go(depth)}"


# stlc

STLC_PRELUDE = [
    "def Ty : U := (T : U) -> T -> (T -> T -> T) -> T",
    "def base : Ty := \\T b f. b",
    "def arr : Ty -> Ty -> Ty := \\A B T b f. f (A T b f) (B T b f)",
    "def Con : U := (C : U) -> C -> (C -> Ty -> C) -> C",
    "def nil : Con := \\C n s. n",
    "def snoc : Con -> Ty -> Con := \\G A C n s. s (G C n s) A",
    "def Var : Con -> Ty -> U := \\G A. (V : Con -> Ty -> U)"
    " -> ((G : Con) -> (A : Ty) -> V (snoc G A) A)"
    " -> ((G : Con) -> (B : Ty) -> (A : Ty) -> V G A -> V (snoc G B) A) -> V G A",
    "def vz : (G : Con) -> (A : Ty) -> Var (snoc G A) A := \\G A V z s. z G A",
    "def vs : (G : Con) -> (B : Ty) -> (A : Ty) -> Var G A -> Var (snoc G B) A"
    " := \\G B A x V z s. s G B A (x V z s)",
    "def Tm : Con -> Ty -> U := \\G A. (M : Con -> Ty -> U)"
    " -> ((G : Con) -> (A : Ty) -> Var G A -> M G A)"
    " -> ((G : Con) -> (A : Ty) -> (B : Ty) -> M (snoc G A) B -> M G (arr A B))"
    " -> ((G : Con) -> (A : Ty) -> (B : Ty) -> M G (arr A B) -> M G A -> M G B) -> M G A",
    "def var : (G : Con) -> (A : Ty) -> Var G A -> Tm G A := \\G A x M v l a. v G A x",
    "def lam : (G : Con) -> (A : Ty) -> (B : Ty) -> Tm (snoc G A) B -> Tm G (arr A B)"
    " := \\G A B t M v l a. l G A B (t M v l a)",
    "def app : (G : Con) -> (A : Ty) -> (B : Ty) -> Tm G (arr A B) -> Tm G A -> Tm G B"
    " := \\G A B t u M v l a. a G A B (t M v l a) (u M v l a)",
    "def ct : Ty -> Ty := \\A. arr (arr A A) (arr A A)",
    "def T0 : Ty := base",
    "def T1 : Ty := ct T0",
    "def T2 : Ty := ct T1",
]

STLC_DEPTHS = 3


def _stlc_depth_prelude(d: int) -> List[str]:
    t, f, ca, cb = f"T{d}", f"F{d}", f"C{d}a", f"C{d}b"
    return [
        f"def {f} : Ty := arr {t} {t}",
        f"def {ca} : Con := snoc nil {f}",
        f"def {cb} : Con := snoc {ca} {t}",
        f"def f{d} : Tm {cb} {f} := var {cb} {f} (vs {ca} {t} {f} (vz nil {f}))",
        f"def x{d} : Tm {cb} {t} := var {cb} {t} (vz {ca} {t})",
    ]


def gen_stlc(size: int) -> str:
    """Church numeral-style object terms `\\f x. f (f ... x)` at three type depths"""
    lines = list(STLC_PRELUDE)
    for d in range(STLC_DEPTHS):
        lines.extend(_stlc_depth_prelude(d))
    for i in range(size):
        d = i % STLC_DEPTHS
        t, f, ca, cb = f"T{d}", f"F{d}", f"C{d}a", f"C{d}b"
        body = f"x{d}"
        for _ in range(2 + i % 4):
            body = f"app {cb} {t} {t} f{d} ({body})"
        lines.append(f"def t{i} : Tm nil (ct {t}) := lam nil {f} {f} (lam {ca} {t} {t} ({body}))")
    return _program(lines)


# asymptotics

ASYMPTOTICS_PRELUDE = [
    "def Nat : U := (N : U) -> (N -> N) -> N -> N",
    "def zero : Nat := \\N s z. z",
    "def suc : Nat -> Nat := \\n N s z. s (n N s z)",
    "def add : Nat -> Nat -> Nat := \\a b N s z. a N s (b N s z)",
    "def mul : Nat -> Nat -> Nat := \\a b N s z. a N (b N s) z",
    "def Eq : (A : U) -> A -> A -> U := \\A x y. (P : A -> U) -> P x -> P y",
    "def refl : (A : U) -> (x : A) -> Eq A x x := \\A x P px. px",
    "def Tree : U := (T : U) -> T -> (T -> T -> T) -> T",
    "def leaf : Tree := \\T l n. l",
    "def node : Tree -> Tree -> Tree := \\a b T l n. n (a T l n) (b T l n)",
    "def full : Nat -> Tree := \\n. n Tree (\\t. node t t) leaf",
]


def gen_asymptotics(size: int) -> str:
    """One term-level conversion obligation per size unit, cycling product, sum and tree"""
    lines = list(ASYMPTOTICS_PRELUDE)
    for i in range(size):
        kind = i % 3
        if kind == 0:
            a, b = 2 + i % 7, 2 + (5 * i) % 9
            lhs, ty, rhs = f"mul ({_church_nat(a)}) ({_church_nat(b)})", "Nat", _church_nat(a * b)
        elif kind == 1:
            a, b = 3 + (3 * i) % 11, 1 + (7 * i) % 13
            lhs, ty, rhs = f"add (suc ({_church_nat(a)})) ({_church_nat(b)})", "Nat", _church_nat(a + 1 + b)
        else:
            depth = 1 + i % 4
            lhs, ty, rhs = f"full ({_church_nat(depth)})", "Tree", _church_tree(depth)
        lines.append(f"def t{i} : Eq {ty} ({lhs}) ({rhs}) := refl {ty} ({rhs})")
    return _program(lines)


# eta

EQ_DEF = "def Eq : (A : U) -> A -> A -> U := \\A x y. (P : A -> U) -> P x -> P y"


def _eta_obligation(i: int) -> str:
    kind = i % 3
    if kind == 0:
        name = "uc" if i == 0 else f"uc_{i}"
        return f"def {name} : (x : Unit) -> (y : Unit) -> Eq Unit x y := \\x y P px. px"
    if kind == 1:
        return (f"def sp_{i} : (A : U) -> (B : A -> U) -> (p : (x : A) * B x)"
                " -> Eq ((x : A) * B x) p (p.1, p.2) := \\A B p P h. h")
    return f"def ue_{i} : (f : Unit -> Unit) -> Eq (Unit -> Unit) f (\\x. tt) := \\f P h. h"


def gen_eta(size: int) -> str:
    """Obligations that hold only up to Unit-eta or surjective pairing"""
    return _program([EQ_DEF] + [_eta_obligation(i) for i in range(size)])


# etafree-random

ETAFREE_PRELUDE = [
    "def A : U := (X : U) -> X -> X",
    "def idA : A := \\X x. x",
    "def B : U := (X : U) -> X -> X -> X",
    "def tru : B := \\X t f. t",
    "def fls : B := \\X t f. f",
    "def not : B -> B := \\b X t f. b X f t",
    "def and : B -> B -> B := \\a b X t f. a X (b X t f) f",
    "def twice : (B -> B) -> B -> B := \\g b. g (g b)",
    "def swap : (B * B) -> B * B := \\p. (p.2, p.1)",
    EQ_DEF,
    "def refl : (A : U) -> (x : A) -> Eq A x x := \\A x P px. px",
]


class _RandomProgram:
    """Type-directed random definitions over Church booleans and pairs of them"""

    MAX_DEPTH = 3

    def __init__(self, rng: Lcg):
        self.rng = rng
        self.lines = list(ETAFREE_PRELUDE)
        self.bools: List[str] = ["tru", "fls"]
        self.unary: List[str] = ["not"]
        self.binary: List[str] = ["and"]
        self.pairs: List[str] = []
        self.fresh = 0

    def local(self) -> str:
        self.fresh += 1
        return f"v{self.fresh}"

    def bool_term(self, depth: int, scope: List[str]) -> str:
        """A closed-over-scope term of type B"""
        rng = self.rng
        if depth <= 0 or rng.chance(25):
            atoms = self.bools + scope + [f"{p}.{rng.pick(('1', '2'))}" for p in self.pairs]
            return rng.pick(atoms)
        def sub() -> str:
            return self.bool_term(depth - 1, scope)

        choice = rng.below(8)
        if choice == 0:
            return f"{rng.pick(self.unary)} ({sub()})"
        if choice == 1:
            return f"{rng.pick(self.binary)} ({sub()}) ({sub()})"
        if choice == 2:
            return f"twice {rng.pick(self.unary)} ({sub()})"
        if choice == 3:
            v = self.local()
            return f"twice (\\{v}. {rng.pick(self.unary)} {v}) ({sub()})"
        if choice == 4:
            return f"(swap ({sub()}, {sub()})).{rng.pick(('1', '2'))}"
        if choice == 5:
            v = self.local()
            return f"let {v} : B := {sub()}; {self.bool_term(depth - 1, scope + [v])}"
        if choice == 6:
            return f"idA B ({sub()})"
        # Church-bool elimination, only ever at B
        return f"({sub()}) B ({sub()}) ({sub()})"

    def equivalent(self, t: str) -> str:
        """A different closed term with the same normal form as the closed term t"""
        return self.rng.pick((
            f"not (not ({t}))",
            f"and ({t}) tru",
            f"twice not ({t})",
            f"(swap (fls, {t})).2",
            f"idA B ({t})",
            f"({t}) B tru fls",
        ))

    def plain(self, k: int):
        rng = self.rng
        kind = rng.below(4)
        if kind == 0:
            name, ty, body = f"d{k}", "B", self.bool_term(self.MAX_DEPTH, [])
            self.bools.append(name)
        elif kind == 1:
            v = self.local()
            name, ty, body = f"f{k}", "B -> B", f"\\{v}. {self.bool_term(self.MAX_DEPTH, [v])}"
            self.unary.append(name)
        elif kind == 2:
            v, w = self.local(), self.local()
            name, ty = f"g{k}", "B -> B -> B"
            body = f"\\{v} {w}. {self.bool_term(self.MAX_DEPTH, [v, w])}"
            self.binary.append(name)
        else:
            name, ty = f"p{k}", "B * B"
            body = f"({self.bool_term(self.MAX_DEPTH - 1, [])}, {self.bool_term(self.MAX_DEPTH - 1, [])})"
            self.pairs.append(name)

        if rng.chance(10):
            ty, body = self.mutate(ty, body)
        self.lines.append(f"def {name} : {ty} := {body}")

    def mutate(self, ty: str, body: str):
        """Make a definition ill-typed in a way no equality rule can repair"""
        choice = self.rng.below(3)
        if choice == 0:
            return "A", body if ty == "B" else "tru"
        if choice == 1:
            return ty, body.replace("tru", "idA", 1) if "tru" in body else "idA"
        return ty, f"not ({body})" if ty != "B" else "not idA"

    def obligation(self, k: int):
        lhs = self.bool_term(self.MAX_DEPTH, [])
        rhs = self.equivalent(lhs)
        if not self.rng.chance(80):
            rhs = f"not ({rhs})"
        self.lines.append(f"def e{k} : Eq B ({lhs}) ({rhs}) := refl B ({lhs})")


def gen_etafree_random(size: int, seed: int) -> str:
    """Random programs without Unit and without pair-against-neutral comparisons"""
    program = _RandomProgram(Lcg(seed))
    for k in range(size):
        if program.rng.chance(60):
            program.plain(k)
        else:
            program.obligation(k)
    return _program(program.lines)


GENERATORS: Dict[str, Callable[[SuiteSpec], str]] = {
    "stlc": lambda spec: gen_stlc(spec.size),
    "asymptotics": lambda spec: gen_asymptotics(spec.size),
    "eta": lambda spec: gen_eta(spec.size),
    "etafree-random": lambda spec: gen_etafree_random(spec.size, spec.seed),
}


def generate(spec: SuiteSpec) -> str:
    text = GENERATORS[spec.family](spec)
    logger.debug(f"Generated {spec.label} (seed {spec.seed}): {len(text)} characters")
    return text
