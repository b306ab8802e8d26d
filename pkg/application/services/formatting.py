"""Text forms of the values written to CSV files and the terminal."""
from fractions import Fraction
from numbers import Integral
from typing import Any


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_real(value: float) -> str:
    return format(float(value), ".12g")


def format_bool(value: bool) -> str:
    return "true" if value else "false"


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return format_bool(value)
    if isinstance(value, (Fraction, Integral)):
        return format_rational(value)
    if isinstance(value, float):
        return format_real(value)
    return str(value)
