"""Algebraic immunity, fast-immunity profiles and LCD codes from punctured Reed-Muller codes."""

from .boolfun import Anf, BooleanFunction, parse_function, format_function
from .f2linalg import BitMatrix
from .gf2m import FieldGF2n, field_new
from .immunity import ai, fai, ffai, is_pai, lda, profile
from .codes import LinearCode, rm
from .pai_lcd import carlet_feng_support, is_pai_via_lcd, lcd_from_pai, pai_certificate

__all__ = [
    "Anf",
    "BitMatrix",
    "BooleanFunction",
    "FieldGF2n",
    "LinearCode",
    "ai",
    "carlet_feng_support",
    "fai",
    "ffai",
    "field_new",
    "format_function",
    "is_pai",
    "is_pai_via_lcd",
    "lcd_from_pai",
    "lda",
    "pai_certificate",
    "parse_function",
    "profile",
    "rm",
]

__version__ = "0.1.0"
