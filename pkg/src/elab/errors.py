"""
Type errors reported by the elaborator
"""

from typing import Optional, Sequence

from src.conv.base import ConvError
from src.core.pretty import pretty
from src.core.raw import Span
from src.core.syntax import Term
from src.utils.errors import EtaBenchError


class TypeCheckError(EtaBenchError):
    """A declaration failed to check; only the first one is ever reported"""

    def __init__(self, message: str, span: Optional[Span] = None,
                 expected: Optional[Term] = None, actual: Optional[Term] = None,
                 names: Sequence[str] = (), backend: Optional[str] = None,
                 conv_error: Optional[ConvError] = None):
        self.message = message
        self.span = span
        self.expected = expected
        self.actual = actual
        self.names = tuple(names)
        self.backend = backend
        self.conv_error = conv_error
        super().__init__(message)

    def format(self, source: Optional[str] = None, path: Optional[str] = None) -> str:
        if self.span is not None and source is not None:
            line, col = self.span.line_col(source)
            where = f"{path}:{line}:{col}" if path else f"{line}:{col}"
        else:
            where = path or "<input>"
        lines = [f"{where}: error: {self.message}"]
        if self.expected is not None:
            lines.append(f"  expected type: {pretty(self.expected, self.names)}")
        if self.actual is not None:
            lines.append(f"  actual type:   {pretty(self.actual, self.names)}")
        if self.conv_error is not None:
            lines.append(f"  mismatch: {self.conv_error.describe()}")
        if self.backend is not None:
            lines.append(f"  backend: {self.backend}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()
