"""
Unit tests for bidirectional elaboration under both conversion backends
"""

import unittest

from src.conv.base import ConvOptions
from src.conv.syntactic import SyntacticConversion
from src.conv.typed import TypedConversion
from src.core.pretty import pretty_program
from src.core.raw import RawProgram
from src.core.syntax import (
    App, Lam, Let, Pi, Top, UnitType, UnitVal, Univ, Var, shift_check,
)
from src.data.program_parser import parse_expr, parse_program
from src.elab.backend import Backend, make_conversion
from src.elab.context import ElabCxt
from src.elab.elaborator import Elaborator, check_program
from src.elab.errors import TypeCheckError
from src.nbe.evaluator import TopTable, evaluate
from src.nbe.values import VUnitType, VUniv

UNIT_CONTRACTIBLE = """\
def Eq : (A : U) -> A -> A -> U := \\A x y. (P : A -> U) -> P x -> P y
def uc : (x : Unit) -> (y : Unit) -> Eq Unit x y := \\x y P px. px
"""

PAIRS = """\
def p : (A : U) * A := (Unit, tt)
def q : U := p.1
def r : q := p.2
def l : U := let A : U := Unit; A
def u : l := tt
"""

BACKENDS = (Backend.SYNTACTIC, Backend.TYPED)


def terms(result):
    return [(e.type_term, e.body_term) for e in result.tops]


class TestInfer(unittest.TestCase):

    def setUp(self):
        self.elab = Elaborator()
        self.cxt = ElabCxt(TopTable())

    def test_universe(self):
        self.assertEqual(self.elab.infer(self.cxt, parse_expr("U")), (Univ(), VUniv()))

    def test_unit(self):
        self.assertEqual(self.elab.infer(self.cxt, parse_expr("tt")), (UnitVal(), VUnitType()))

    def test_applying_non_function(self):
        with self.assertRaises(TypeCheckError) as cm:
            self.elab.infer(self.cxt, parse_expr("tt tt"))
        self.assertEqual(cm.exception.message, "applying a non-function")

    def test_unannotated_lambda(self):
        with self.assertRaises(TypeCheckError) as cm:
            self.elab.infer(self.cxt, parse_expr("\\x. x"))
        self.assertIn("unannotated lambda", cm.exception.message)

    def test_unannotated_pair(self):
        with self.assertRaises(TypeCheckError) as cm:
            self.elab.infer(self.cxt, parse_expr("(tt, tt)"))
        self.assertIn("unannotated pair", cm.exception.message)

    def test_unbound(self):
        with self.assertRaises(TypeCheckError) as cm:
            self.elab.infer(self.cxt, parse_expr("nope"))
        self.assertEqual(cm.exception.message, "unbound name: nope")

    def test_let(self):
        term, ty = self.elab.infer(self.cxt, parse_expr("let x : Unit := tt; x"))
        self.assertEqual(term, Let("x", UnitType(), UnitVal(), Var(0)))
        self.assertEqual(ty, VUnitType())


class TestCheck(unittest.TestCase):

    def setUp(self):
        self.elab = Elaborator()
        self.tops = TopTable()
        self.cxt = ElabCxt(self.tops)

    def test_identity_lambda(self):
        expected = evaluate((), Pi("_", UnitType(), UnitType()), self.tops)
        self.assertEqual(self.elab.check(self.cxt, parse_expr("\\x. x"), expected), Lam("x", Var(0)))

    def test_lambda_against_non_function(self):
        with self.assertRaises(TypeCheckError) as cm:
            self.elab.check(self.cxt, parse_expr("\\x. x"), VUnitType())
        self.assertEqual(cm.exception.message, "lambda checked against a non-function type")

    def test_pair_against_non_pair(self):
        with self.assertRaises(TypeCheckError) as cm:
            self.elab.check(self.cxt, parse_expr("(tt, tt)"), VUniv())
        self.assertEqual(cm.exception.message, "pair checked against a non-pair type")

    def test_mismatch(self):
        with self.assertRaises(TypeCheckError) as cm:
            self.elab.check(self.cxt, parse_expr("tt"), VUniv())
        self.assertEqual(cm.exception.message, "type mismatch")
        self.assertEqual(cm.exception.expected, Univ())
        self.assertEqual(cm.exception.actual, UnitType())
        self.assertIsNotNone(cm.exception.conv_error)

    def test_shadowing(self):
        cxt = self.cxt.bind("x", VUniv()).bind("x", VUnitType())
        self.assertEqual(cxt.lookup_local("x"), 1)
        self.assertIsNone(cxt.lookup_local("_"))
        self.assertEqual(self.elab.infer(cxt, parse_expr("x")), (Var(0), VUnitType()))


class TestCheckProgram(unittest.TestCase):

    def test_empty_program(self):
        for backend in BACKENDS:
            result = check_program(parse_program(""), backend)
            self.assertEqual(len(result), 0)
            self.assertEqual(result.unfolds, 0)
            self.assertIs(result.backend, backend)

    def test_unit_contractible_typed(self):
        result = check_program(parse_program(UNIT_CONTRACTIBLE), Backend.TYPED)
        self.assertEqual(len(result), 2)
        self.assertGreater(result.conversions, 0)
        self.assertGreaterEqual(result.unfolds, 1)

    def test_unit_contractible_syntactic(self):
        with self.assertRaises(TypeCheckError) as cm:
            check_program(parse_program(UNIT_CONTRACTIBLE), Backend.SYNTACTIC)
        error = cm.exception
        self.assertEqual(error.message, "type mismatch")
        self.assertEqual(error.backend, "syntactic")
        text = error.format(UNIT_CONTRACTIBLE, "eta.ett")
        self.assertTrue(text.startswith("eta.ett:2:"))
        self.assertIn("expected type: P y", text)
        self.assertIn("actual type:   P x", text)
        self.assertIn("mismatch: distinct variables", text)
        self.assertIn("backend: syntactic", text)

    def test_unit_contractible_without_unit_eta(self):
        with self.assertRaises(TypeCheckError):
            check_program(parse_program(UNIT_CONTRACTIBLE), Backend.TYPED,
                          ConvOptions(sigma_unit_eta=False))

    def test_pairs_projections_and_lets(self):
        for backend in BACKENDS:
            result = check_program(parse_program(PAIRS), backend)
            self.assertEqual(len(result), 5)

    def test_forward_reference(self):
        source = "def a : U := U\ndef b : U := c\ndef c : U := U"
        with self.assertRaises(TypeCheckError) as cm:
            check_program(parse_program(source))
        self.assertEqual(cm.exception.message, "unbound name: c")
        self.assertTrue(cm.exception.format(source).startswith("2:14: error:"))

    def test_duplicate(self):
        decls = parse_program("def a : U := U").decls
        with self.assertRaises(TypeCheckError) as cm:
            check_program(RawProgram(decls * 2))
        self.assertEqual(cm.exception.message, "duplicate definition: a")

    def test_first_error_only(self):
        source = "def a : U := tt\ndef b : U := tt tt"
        with self.assertRaises(TypeCheckError) as cm:
            check_program(parse_program(source))
        self.assertEqual(cm.exception.message, "type mismatch")
        self.assertTrue(cm.exception.format(source).startswith("1:14:"))

    def test_top_references(self):
        result = check_program(parse_program("def A : U := Unit\ndef a : A := tt"))
        a = result.tops.entry(result.tops.lookup("a"))
        self.assertEqual(a.type_term, Top(result.tops.lookup("A")))

    def test_closed_terms(self):
        result = check_program(parse_program(UNIT_CONTRACTIBLE + PAIRS))
        for type_term, body_term in terms(result):
            self.assertTrue(shift_check(type_term))
            self.assertTrue(shift_check(body_term))

    def test_deterministic(self):
        first = check_program(parse_program(UNIT_CONTRACTIBLE))
        second = check_program(parse_program(UNIT_CONTRACTIBLE))
        self.assertEqual(terms(first), terms(second))
        self.assertEqual(first.unfolds, second.unfolds)

    def test_pretty_round_trip(self):
        result = check_program(parse_program(UNIT_CONTRACTIBLE + PAIRS))
        printed = pretty_program(result.tops)
        again = check_program(parse_program(printed))
        self.assertEqual(terms(again), terms(result))
        self.assertEqual(pretty_program(again.tops), printed)

    def test_church_application(self):
        source = ("def Nat : U := (N : U) -> (N -> N) -> N -> N\n"
                  "def two : Nat := \\N s z. s (s z)\n"
                  "def twice : Nat -> Nat := \\n N s z. n N s (n N s z)\n"
                  "def four : Nat := twice two\n")
        for backend in BACKENDS:
            result = check_program(parse_program(source), backend)
            four = result.tops.entry(result.tops.lookup("four"))
            self.assertEqual(four.body_term, App(Top(result.tops.lookup("twice")),
                                                 Top(result.tops.lookup("two"))))


class TestBackend(unittest.TestCase):

    def test_parse(self):
        self.assertIs(Backend.parse("Typed"), Backend.TYPED)
        self.assertIs(Backend.parse(" syntactic "), Backend.SYNTACTIC)
        with self.assertRaises(ValueError):
            Backend.parse("fast")

    def test_make_conversion(self):
        self.assertIsInstance(make_conversion(Backend.SYNTACTIC), SyntacticConversion)
        self.assertIsInstance(make_conversion(Backend.TYPED), TypedConversion)

    def test_elaborator_shares_counter(self):
        elab = Elaborator(Backend.SYNTACTIC)
        self.assertIs(elab.conv.counter, elab.counter)


if __name__ == '__main__':
    unittest.main()
