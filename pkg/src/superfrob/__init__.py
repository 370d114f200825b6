"""Exact Hecke algebra characters of type A through supersymmetric Hall-Littlewood functions."""

from .frobenius import HeckeCharTable, char_table, char_value, frobenius_element, verify_super_frobenius
from .scalar import Q, LaurentScalar, ScalarFraction, parse_laurent
from .symring import SymFunc, convert, inner_standard, mn_character

__all__ = [
    "HeckeCharTable",
    "LaurentScalar",
    "Q",
    "ScalarFraction",
    "SymFunc",
    "char_table",
    "char_value",
    "convert",
    "frobenius_element",
    "inner_standard",
    "mn_character",
    "parse_laurent",
    "verify_super_frobenius",
]

__version__ = "0.1.0"
