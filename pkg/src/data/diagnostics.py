"""
Parse diagnostics
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from src.core.raw import Span
from src.utils.errors import EtaBenchError


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    message: str
    span: Span

    def format(self, source: str, path: Optional[str] = None) -> str:
        line, col = self.span.line_col(source)
        where = f"{path}:{line}:{col}" if path else f"{line}:{col}"
        return f"{where}: {self.severity.value}: {self.message}"


class ParseError(EtaBenchError):
    """Raised with at least one error diagnostic when the input is malformed"""

    def __init__(self, diagnostics: List[Diagnostic]):
        if not diagnostics:
            raise ValueError("ParseError needs at least one diagnostic")
        self.diagnostics = list(diagnostics)
        super().__init__(diagnostics[0].message)

    def format(self, source: str, path: Optional[str] = None) -> str:
        return "\n".join(d.format(source, path) for d in self.diagnostics)
