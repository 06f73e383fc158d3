"""Exact rationals: parsing and the "num/den" string format."""

from fractions import Fraction
from math import lcm

__all__ = ["Fraction", "Q", "parse_rational", "format_rational", "common_denominator"]


def Q(x):
    """Coerce an int, Fraction or "num/den" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(s):
    s = s.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num, den = s.split("/", 1)
        den_i = int(den)
        if den_i == 0:
            raise ValueError(f"zero denominator in {s!r}")
        return Fraction(int(num), den_i)
    return Fraction(int(s))


def format_rational(x):
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def common_denominator(values):
    return lcm(*(Q(v).denominator for v in values)) if values else 1
