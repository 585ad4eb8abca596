"""
Truncated formal Laurent series over the rationals.

A Series stores the coefficients of t^valuation .. t^(order-1). Coefficients
at or above ``order`` are unknown, never zero, and every operation computes
the exact order it can guarantee for its result.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .numeric import factorial, format_rational

Scalar = Union[int, Fraction]


class TruncationError(ValueError):
    """A coefficient was requested at or beyond the truncation order."""


class Series:
    __slots__ = ("_valuation", "_coeffs", "_order")

    def __init__(
        self,
        coeffs: Iterable[Scalar] = (),
        valuation: int = 0,
        order: Optional[int] = None,
    ):
        """
        Build a series from the coefficients of t^valuation, t^(valuation+1), ...

        Args:
            coeffs: Coefficients starting at t^valuation
            valuation: Exponent of the first coefficient
            order: Absolute truncation order; defaults to valuation + len(coeffs).
                Missing coefficients below the order are known zeros, extra
                ones are dropped.
        """
        values = [Fraction(c) for c in coeffs]
        if order is None:
            order = valuation + len(values)
        width = order - valuation
        if width <= 0:
            values = []
        else:
            values = values[:width] + [Fraction(0)] * (width - len(values))

        # Normalize: leading zeros raise the valuation.
        lead = 0
        while lead < len(values) and values[lead] == 0:
            lead += 1
        if lead == len(values):
            valuation, values = order, []
        else:
            valuation, values = valuation + lead, values[lead:]

        self._valuation = valuation
        self._coeffs: Tuple[Fraction, ...] = tuple(values)
        self._order = order

    @property
    def valuation(self) -> int:
        return self._valuation

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._order

    @property
    def is_zero(self) -> bool:
        """True when every known coefficient is zero."""
        return not self._coeffs

    def _at(self, m: int) -> Fraction:
        if m < self._valuation or m >= self._order:
            return Fraction(0)
        return self._coeffs[m - self._valuation]

    def coefficient(self, m: int) -> Fraction:
        return coefficient(self, m)

    def _promote(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        # Scalars are exact, so they never lower the order.
        return constant(other, max(self._order, 1))

    def __add__(self, other):
        if not isinstance(other, (Series, int, Fraction)):
            return NotImplemented
        return add(self, self._promote(other))

    __radd__ = __add__

    def __neg__(self):
        return scale(self, -1)

    def __sub__(self, other):
        if not isinstance(other, (Series, int, Fraction)):
            return NotImplemented
        return sub(self, self._promote(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return sub(self._promote(other), self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, 1 / Fraction(other))
        if isinstance(other, Series):
            return mul(self, invert(other))
        return NotImplemented

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self._valuation, self._coeffs, self._order) == (
            other._valuation,
            other._coeffs,
            other._order,
        )

    def __hash__(self):
        return hash((self._valuation, self._coeffs, self._order))

    def __str__(self):
        parts = [format_rational(c) for c in self._coeffs]
        parts.append(f"O(t^{self._order})")
        return f"t^{self._valuation}: " + ", ".join(parts)

    def __repr__(self):
        return f"Series({self})"


def zero(order: int) -> Series:
    return Series((), order, order)


def constant(c: Scalar, order: int) -> Series:
    return Series([c], 0, order)


def monomial(k: int, order: Optional[int] = None) -> Series:
    """t^k, known exactly up to ``order`` (default k + 1)."""
    return Series([1], k, k + 1 if order is None else order)


def add(a: Series, b: Series) -> Series:
    order = min(a.order, b.order)
    low = min(a.valuation, b.valuation)
    if low >= order:
        return zero(order)
    return Series([a._at(m) + b._at(m) for m in range(low, order)], low, order)


def sub(a: Series, b: Series) -> Series:
    return add(a, scale(b, -1))


def scale(a: Series, c: Scalar) -> Series:
    c = Fraction(c)
    if c == 0:
        return zero(a.order)
    return Series([c * x for x in a.coeffs], a.valuation, a.order)


def shift(a: Series, k: int) -> Series:
    """Multiply by t^k exactly."""
    if a.is_zero:
        return zero(a.order + k)
    return Series(a.coeffs, a.valuation + k, a.order + k)


def truncate(a: Series, order: int) -> Series:
    if order >= a.order:
        return a
    return Series(a.coeffs, a.valuation, order)


def agrees_with(a: Series, b: Series) -> bool:
    """Compare two series on the coefficients both of them know."""
    common = min(a.order, b.order)
    return truncate(a, common) == truncate(b, common)


def mul(a: Series, b: Series) -> Series:
    order = min(a.order + b.valuation, b.order + a.valuation)
    valuation = a.valuation + b.valuation
    if a.is_zero or b.is_zero or valuation >= order:
        return zero(order)
    width = order - valuation
    ac, bc = a.coeffs, b.coeffs
    out: List[Fraction] = []
    for k in range(width):
        out.append(sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0)))
    return Series(out, valuation, order)


def invert(a: Series) -> Series:
    """
    Multiplicative inverse in the Laurent field.

    The unit part t^(-valuation) * a is inverted by solving
    c0*d_k + c1*d_(k-1) + ... + ck*d0 = [k == 0] for d_k.

    Raises:
        ZeroDivisionError: If a is the zero series
    """
    if a.is_zero:
        raise ZeroDivisionError("cannot invert the zero series")
    c = a.coeffs
    width = len(c)
    inv_lead = 1 / c[0]
    d = [inv_lead]
    for k in range(1, width):
        acc = sum((c[i] * d[k - i] for i in range(1, k + 1)), Fraction(0))
        d.append(-acc * inv_lead)
    return Series(d, -a.valuation, -a.valuation + width)


def power(a: Series, k: int) -> Series:
    """a**k by repeated squaring; negative k goes through invert."""
    if k < 0:
        if a.is_zero:
            raise ZeroDivisionError("negative power of the zero series")
        return power(invert(a), -k)
    if k == 0:
        return constant(1, a.order)
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def exp_linear(c: Scalar, order: int) -> Series:
    """e^(c t) truncated at t^order."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    c = Fraction(c)
    coeffs = []
    term = Fraction(1)
    for n in range(order):
        coeffs.append(term)
        term = term * c / (n + 1)
    return Series(coeffs, 0, order)


def expm1(order: int) -> Series:
    """e^t - 1 truncated at t^order (valuation 1)."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return Series([Fraction(1, factorial(n)) for n in range(1, order)], 1, order)


def unit_expm1(order: int) -> Series:
    """(e^t - 1) / t, a unit series with constant term 1."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return Series([Fraction(1, factorial(n + 1)) for n in range(order)], 0, order)


def derivative(a: Series) -> Series:
    if a.is_zero:
        return zero(a.order - 1)
    v = a.valuation
    return Series(
        [(v + i) * c for i, c in enumerate(a.coeffs)], v - 1, a.order - 1
    )


def coefficient(a: Series, m: int) -> Fraction:
    """
    Coefficient of t^m.

    Raises:
        TruncationError: If m is at or beyond the truncation order
    """
    if m >= a.order:
        raise TruncationError(
            f"coefficient of t^{m} requested from a series known below t^{a.order}"
        )
    return a._at(m)


def egf_coefficient(a: Series, n: int) -> Fraction:
    """n! times the coefficient of t^n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return factorial(n) * coefficient(a, n)


def egf_coefficients(a: Series, count: int) -> Sequence[Fraction]:
    return [egf_coefficient(a, n) for n in range(count)]
