"""
Tokenizer for .ett source text
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import List

from src.core.raw import KEYWORDS, Span
from src.data.diagnostics import Diagnostic, ParseError, Severity


class Tok(Enum):
    IDENT = "identifier"
    KEYWORD = "keyword"
    LPAREN = "'('"
    RPAREN = "')'"
    COLON = "':'"
    DEFINE = "':='"
    ARROW = "'->'"
    STAR = "'*'"
    LAMBDA = "'\\'"
    DOT = "'.'"
    PROJ1 = "'.1'"
    PROJ2 = "'.2'"
    COMMA = "','"
    SEMI = "';'"
    EOF = "end of input"


@dataclass(frozen=True, slots=True)
class Token:
    kind: Tok
    text: str
    span: Span

    def describe(self) -> str:
        if self.kind in (Tok.IDENT, Tok.KEYWORD):
            return f"'{self.text}'"
        return self.kind.value


IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")

# Longest symbols first
SYMBOLS = [
    (":=", Tok.DEFINE),
    ("->", Tok.ARROW),
    (".1", Tok.PROJ1),
    (".2", Tok.PROJ2),
    ("(", Tok.LPAREN),
    (")", Tok.RPAREN),
    (":", Tok.COLON),
    ("*", Tok.STAR),
    ("\\", Tok.LAMBDA),
    (".", Tok.DOT),
    (",", Tok.COMMA),
    (";", Tok.SEMI),
]


def tokenize(src: str) -> List[Token]:
    """Split source into tokens, skipping whitespace and '--' comments"""
    tokens = []
    errors = []
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if src.startswith("--", i):
            newline = src.find("\n", i)
            i = n if newline < 0 else newline + 1
            continue
        m = IDENT_RE.match(src, i)
        if m:
            text = m.group(0)
            kind = Tok.KEYWORD if text in KEYWORDS else Tok.IDENT
            tokens.append(Token(kind, text, Span(i, m.end())))
            i = m.end()
            continue
        for symbol, kind in SYMBOLS:
            if src.startswith(symbol, i):
                # ".1" followed by more digits is not a projection
                if kind in (Tok.PROJ1, Tok.PROJ2) and i + 2 < n and src[i + 2].isdigit():
                    continue
                tokens.append(Token(kind, symbol, Span(i, i + len(symbol))))
                i += len(symbol)
                break
        else:
            errors.append(Diagnostic(Severity.ERROR, f"unexpected character {c!r}", Span(i, i + 1)))
            i += 1
    if errors:
        raise ParseError(errors)
    end = max(n, 1)
    tokens.append(Token(Tok.EOF, "", Span(end - 1, end)))
    return tokens
