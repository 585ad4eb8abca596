"""Exact scalars and the small combinatorial helpers shared by every module."""

import re
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")

_harmonic_table: List[Fraction] = [Fraction(0)]
_factorial_table: List[int] = [1]
_lock = threading.Lock()


def format_rational(value: Fraction) -> str:
    """Render a rational as "a/b" in lowest terms, or "a" when b == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse the canonical rational grammar produced by format_rational.

    Raises:
        ValueError: If the text is not a canonical rational ("2/4", "3/1",
            "-0" and decimals are all rejected)
    """
    match = _RATIONAL_RE.match(text.strip())
    if not match:
        raise ValueError(f"Not a rational: {text!r}")
    sign, num, den = match.groups()
    if sign and num == "0":
        raise ValueError(f"Negative zero is not canonical: {text!r}")
    value = Fraction(int(sign + num), int(den) if den else 1)
    if den and (value.denominator != int(den) or value.denominator == 1):
        raise ValueError(f"Rational not in lowest terms: {text!r}")
    return value


def harmonic(n: int) -> Fraction:
    """Return H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise ValueError(f"harmonic expects n >= 0, got {n}")
    with _lock:
        while len(_harmonic_table) <= n:
            j = len(_harmonic_table)
            _harmonic_table.append(_harmonic_table[-1] + Fraction(1, j))
        return _harmonic_table[n]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial expects n >= 0, got {n}")
    with _lock:
        while len(_factorial_table) <= n:
            _factorial_table.append(_factorial_table[-1] * len(_factorial_table))
        return _factorial_table[n]


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial expects n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)
