"""
Conversion backend selection
"""

from enum import Enum
from typing import Optional

from src.conv.base import ConvOptions, Conversion
from src.conv.syntactic import SyntacticConversion
from src.conv.typed import TypedConversion
from src.nbe.values import UnfoldCounter


class Backend(Enum):
    SYNTACTIC = "syntactic"
    TYPED = "typed"

    @classmethod
    def parse(cls, name: str) -> "Backend":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown backend {name!r}; expected one of "
                             f"{', '.join(b.value for b in cls)}") from None


def make_conversion(backend: Backend, counter: Optional[UnfoldCounter] = None,
                    options: ConvOptions = ConvOptions()) -> Conversion:
    if backend is Backend.SYNTACTIC:
        return SyntacticConversion(counter, options)
    return TypedConversion(counter, options)
