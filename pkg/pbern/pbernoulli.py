"""
p-Bernoulli numbers B_{n,p} by two routes.

The recurrence route starts from the classical Bernoulli numbers (p = 0) and
sweeps p upward with

    B_{n,p+1} = ((p+2)/(p+1)^2) * (p*B_{n,p} - B_{n+1,p})

which is B_{n+1,p} = p*B_{n,p} - ((p+1)^2/(p+2))*B_{n,p+1} solved for the
right-hand column. The closed-form route expands the exponential generating
function

    f_p(t) = (p+1)(t - H_p) e^{pt} / (e^t - 1)^{p+1}
             + (p+1) * sum_{k=1..p} C(p,k) H_k / (e^t - 1)^{k+1}

and reads B_{n,p} off as n! [t^n] f_p(t).
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from tqdm import tqdm

from .numeric import binomial, format_rational, harmonic
from .series import (
    Series,
    add,
    egf_coefficients,
    exp_linear,
    expm1,
    invert,
    mul,
    scale,
    shift,
    unit_expm1,
)


class PoleCancellationError(ArithmeticError):
    """The closed-form sum kept a negative power of t."""

    def __init__(self, p: int, valuation: int, leading: Fraction):
        super().__init__(p, valuation, leading)
        self.p = p
        self.valuation = valuation
        self.leading = Fraction(leading)

    def __str__(self):
        return (
            f"closed form for p={self.p} keeps t^{self.valuation} "
            f"with coefficient {format_rational(self.leading)}"
        )


class Route(str, Enum):
    RECURRENCE = "recurrence"
    CLOSED_FORM = "egf"


@dataclass(frozen=True)
class PBernTable:
    """Values B_{n,p} for 0 <= n <= max_n, 0 <= p <= max_p, indexed [n][p]."""

    max_n: int
    max_p: int
    values: Tuple[Tuple[Fraction, ...], ...]
    route: Route

    def value(self, n: int, p: int) -> Fraction:
        return self.values[n][p]

    def column(self, p: int) -> List[Fraction]:
        return [row[p] for row in self.values]

    def with_value(self, n: int, p: int, value: Fraction) -> "PBernTable":
        """Copy of the table with one cell replaced."""
        rows = [list(row) for row in self.values]
        rows[n][p] = Fraction(value)
        return replace(self, values=tuple(tuple(row) for row in rows))


def _check_bounds(**bounds: int) -> None:
    for name, value in bounds.items():
        if value < 0:
            raise ValueError(f"{name} must be >= 0, got {value}")


def _from_columns(columns: List[List[Fraction]], max_n: int, route: Route) -> PBernTable:
    values = tuple(
        tuple(column[n] for column in columns) for n in range(max_n + 1)
    )
    return PBernTable(
        max_n=max_n, max_p=len(columns) - 1, values=values, route=route
    )


def classical_bernoulli(n_max: int) -> List[Fraction]:
    """B_0..B_{n_max} as EGF coefficients of t/(e^t - 1), with B_1 = -1/2."""
    _check_bounds(N=n_max)
    f0 = shift(invert(expm1(n_max + 2)), 1)
    return list(egf_coefficients(f0, n_max + 1))


def recurrence_table(max_n: int, max_p: int) -> PBernTable:
    """
    Fill the table from the p = 0 column by sweeping p upward.

    Each column step consumes one row, so the p = 0 column is computed to
    depth max_n + max_p.
    """
    _check_bounds(N=max_n, P=max_p)
    depth = max_n + max_p
    column = classical_bernoulli(depth)
    columns = [column]
    for p in range(max_p):
        factor = Fraction(p + 2, (p + 1) ** 2)
        column = [
            factor * (p * column[n] - column[n + 1])
            for n in range(depth - p)
        ]
        columns.append(column)
    return _from_columns(columns, max_n, Route.RECURRENCE)


def working_order(p: int, max_n: int) -> int:
    """Order that leaves max_n + 1 known coefficients after dividing by (e^t-1)^(p+1)."""
    return max_n + p + 2


def closed_form_terms(p: int, max_n: int) -> List[Series]:
    """
    The individual Laurent terms of f_p(t), built at the working order.

    The first term is (p+1)(t - H_p) e^{pt} / (e^t-1)^{p+1}; it is followed by
    (p+1) C(p,k) H_k / (e^t-1)^{k+1} for k = 1..p. Each (e^t-1)^{-j} is formed
    as t^{-j} u^{-j} with u = (e^t-1)/t.
    """
    _check_bounds(p=p, N=max_n)
    order = working_order(p, max_n)
    inv_unit = invert(unit_expm1(order))

    # inv_pows[j] = (e^t - 1)^(-j)
    inv_pows = [None]
    running = inv_unit
    for j in range(1, p + 2):
        if j > 1:
            running = mul(running, inv_unit)
        inv_pows.append(shift(running, -j))

    linear = Series([-harmonic(p), 1], 0, order)
    lead = mul(mul(linear, exp_linear(p, order)), inv_pows[p + 1])
    terms = [scale(lead, p + 1)]
    for k in range(1, p + 1):
        weight = (p + 1) * binomial(p, k) * harmonic(k)
        terms.append(scale(inv_pows[k + 1], weight))
    return terms


def closed_form_laurent(p: int, max_n: int) -> Series:
    """Sum of the closed-form terms, without assuming the poles cancel."""
    terms = closed_form_terms(p, max_n)
    total = terms[0]
    for term in terms[1:]:
        total = add(total, term)
    return total


def closed_form_egf(p: int, max_n: int) -> Series:
    """
    f_p(t) as a power series with at least max_n + 1 known coefficients.

    Raises:
        PoleCancellationError: If the summed terms keep a negative power of t
    """
    total = closed_form_laurent(p, max_n)
    if total.valuation < 0:
        raise PoleCancellationError(p, total.valuation, total.coeffs[0])
    return total


def closed_form_column(p: int, max_n: int) -> List[Fraction]:
    """B_{0,p}..B_{max_n,p} from the closed form."""
    return list(egf_coefficients(closed_form_egf(p, max_n), max_n + 1))


def _closed_form_column_job(args: Tuple[int, int]) -> List[Fraction]:
    return closed_form_column(*args)


def egf_table(
    max_n: int,
    max_p: int,
    workers: int = 1,
    progress: bool = False,
) -> PBernTable:
    """Table built column by column from the closed form; columns are independent."""
    _check_bounds(N=max_n, P=max_p)
    jobs = [(p, max_n) for p in range(max_p + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map keeps submission order, so the table is the same for any schedule
            columns = list(
                tqdm(
                    pool.map(_closed_form_column_job, jobs),
                    total=len(jobs),
                    desc="Expanding closed forms",
                    unit="p",
                    disable=not progress,
                )
            )
    else:
        columns = [
            _closed_form_column_job(job)
            for job in tqdm(
                jobs, desc="Expanding closed forms", unit="p", disable=not progress
            )
        ]
    return _from_columns(columns, max_n, Route.CLOSED_FORM)


def build_table(
    max_n: int,
    max_p: int,
    route: Route,
    workers: int = 1,
    progress: bool = False,
    logger: Optional[logging.Logger] = None,
) -> PBernTable:
    """Build the table by the requested route."""
    route = Route(route)
    if logger:
        logger.debug(f"Building {route.value} table for n <= {max_n}, p <= {max_p}")
    if route is Route.RECURRENCE:
        table = recurrence_table(max_n, max_p)
    else:
        table = egf_table(max_n, max_p, workers=workers, progress=progress)
    if logger:
        logger.debug(f"  Built {(max_n + 1) * (max_p + 1)} cells")
    return table
