"""
Recursive-descent parser for the .ett surface language

    program   ::= { "def" IDENT ":" expr ":=" expr }
    expr      ::= "\\" IDENT+ "." expr
                | "let" IDENT ":" expr ":=" expr ";" expr
                | "(" IDENT ":" expr ")" ("->" | "*") expr
                | appexpr [ ("->" | "*") expr ]
    appexpr   ::= projexpr { projexpr }
    projexpr  ::= atom { ".1" | ".2" }
    atom      ::= IDENT | "U" | "Unit" | "tt" | "(" expr "," expr ")" | "(" expr ")"

Non-dependent arrows and products bind an anonymous variable.
"""

from typing import List

from src.core.raw import (
    ANONYMOUS, RApp, RawDecl, RawProgram, RawTerm, RFst, RLam, RLet, RPair,
    RPi, RSigma, RSnd, RUnitType, RUnitVal, RUniv, RVar, Span,
)
from src.data.diagnostics import Diagnostic, ParseError, Severity
from src.data.lexer import Tok, Token, tokenize

ATOM_START = (Tok.IDENT, Tok.LPAREN)
ATOM_KEYWORDS = ("U", "Unit", "tt")


class _Parser:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind is not Tok.EOF:
            self.pos += 1
        return tok

    def at_keyword(self, word: str) -> bool:
        return self.tok.kind is Tok.KEYWORD and self.tok.text == word

    def fail(self, expected: str):
        raise ParseError([Diagnostic(
            Severity.ERROR, f"expected {expected}, found {self.tok.describe()}", self.tok.span)])

    def expect(self, kind: Tok) -> Token:
        if self.tok.kind is not kind:
            self.fail(kind.value)
        return self.advance()

    def ident(self) -> Token:
        if self.tok.kind is not Tok.IDENT:
            self.fail("identifier")
        return self.advance()

    def starts_atom(self) -> bool:
        return self.tok.kind in ATOM_START or (
            self.tok.kind is Tok.KEYWORD and self.tok.text in ATOM_KEYWORDS)

    # grammar

    def program(self) -> RawProgram:
        decls = []
        seen = {}
        while self.tok.kind is not Tok.EOF:
            if not self.at_keyword("def"):
                self.fail("'def'")
            start = self.advance().span
            name = self.ident()
            self.expect(Tok.COLON)
            ty = self.expr()
            self.expect(Tok.DEFINE)
            body = self.expr()
            if name.text in seen:
                raise ParseError([Diagnostic(
                    Severity.ERROR, f"duplicate definition '{name.text}'", name.span)])
            seen[name.text] = name.span
            decls.append(RawDecl(name.text, ty, body, start.to(self.tokens[self.pos - 1].span)))
        return RawProgram(tuple(decls))

    def expr(self) -> RawTerm:
        start = self.tok.span
        if self.tok.kind is Tok.LAMBDA:
            self.advance()
            names = [self.ident()]
            while self.tok.kind is Tok.IDENT:
                names.append(self.advance())
            self.expect(Tok.DOT)
            body = self.expr()
            span = start.to(body.span)
            for name in reversed(names):
                body = RLam(name.text, body, span)
            return body
        if self.at_keyword("let"):
            self.advance()
            name = self.ident()
            self.expect(Tok.COLON)
            ty = self.expr()
            self.expect(Tok.DEFINE)
            bound = self.expr()
            self.expect(Tok.SEMI)
            body = self.expr()
            return RLet(name.text, ty, bound, body, start.to(body.span))
        if (self.tok.kind is Tok.LPAREN and self.peek(1).kind is Tok.IDENT
                and self.peek(2).kind is Tok.COLON):
            self.advance()
            name = self.advance()
            self.advance()
            dom = self.expr()
            self.expect(Tok.RPAREN)
            return self.binding(name.text, dom, start, dependent=True)
        lhs = self.appexpr()
        if self.tok.kind in (Tok.ARROW, Tok.STAR):
            return self.binding(ANONYMOUS, lhs, start, dependent=False)
        return lhs

    def binding(self, name: str, dom: RawTerm, start: Span, dependent: bool) -> RawTerm:
        if self.tok.kind is Tok.ARROW:
            self.advance()
            cod = self.expr()
            return RPi(name, dom, cod, start.to(cod.span))
        if self.tok.kind is Tok.STAR:
            self.advance()
            cod = self.expr()
            return RSigma(name, dom, cod, start.to(cod.span))
        self.fail("'->' or '*' after binder" if dependent else "'->' or '*'")

    def appexpr(self) -> RawTerm:
        fn = self.projexpr()
        while self.starts_atom():
            arg = self.projexpr()
            fn = RApp(fn, arg, fn.span.to(arg.span))
        return fn

    def projexpr(self) -> RawTerm:
        t = self.atom()
        while self.tok.kind in (Tok.PROJ1, Tok.PROJ2):
            tok = self.advance()
            span = t.span.to(tok.span)
            t = RFst(t, span) if tok.kind is Tok.PROJ1 else RSnd(t, span)
        return t

    def atom(self) -> RawTerm:
        tok = self.tok
        if tok.kind is Tok.IDENT:
            self.advance()
            return RVar(tok.text, tok.span)
        if tok.kind is Tok.KEYWORD and tok.text in ATOM_KEYWORDS:
            self.advance()
            if tok.text == "U":
                return RUniv(tok.span)
            if tok.text == "Unit":
                return RUnitType(tok.span)
            return RUnitVal(tok.span)
        if tok.kind is Tok.LPAREN:
            self.advance()
            first = self.expr()
            if self.tok.kind is Tok.COMMA:
                self.advance()
                second = self.expr()
                close = self.expect(Tok.RPAREN)
                return RPair(first, second, tok.span.to(close.span))
            self.expect(Tok.RPAREN)
            return first
        self.fail("expression")


def parse_program(src: str) -> RawProgram:
    """Parse a whole program; raises ParseError on malformed input"""
    return _Parser(tokenize(src)).program()


def parse_expr(src: str) -> RawTerm:
    """Parse a single expression spanning the whole input"""
    parser = _Parser(tokenize(src))
    t = parser.expr()
    if parser.tok.kind is not Tok.EOF:
        parser.fail("end of input")
    return t
