"""Exact checks of the recurrence, the closed form and the ODE that links them."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from tqdm import tqdm

from .numeric import format_rational
from .pbernoulli import (
    PBernTable,
    PoleCancellationError,
    classical_bernoulli,
    closed_form_egf,
    closed_form_laurent,
    egf_table,
    recurrence_table,
)
from .series import coefficient, derivative, egf_coefficient, scale, sub


class VerifyKind(str, Enum):
    THEOREM = "theorem"
    ODE = "ode"
    POLE_CANCELLATION = "pole_cancellation"
    BASE_CASE = "base_case"
    RECURRENCE = "recurrence"


@dataclass(frozen=True)
class Mismatch:
    """First place where the two sides of a check differ."""

    n: int
    p: int
    left: Fraction
    right: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "left": format_rational(self.left),
            "right": format_rational(self.right),
        }


@dataclass(frozen=True)
class VerifyReport:
    """Result of one verification run."""

    kind: VerifyKind
    max_n: int
    max_p: int
    first_mismatch: Optional[Mismatch] = None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "max_n": self.max_n,
            "max_p": self.max_p,
            "passed": self.passed,
            "first_mismatch": (
                self.first_mismatch.to_dict() if self.first_mismatch else None
            ),
        }


def _first_column_mismatch(
    left: PBernTable, right: PBernTable, max_n: int, max_p: int
) -> Optional[Mismatch]:
    # lexicographic (p, n): the smallest failing generating function comes first
    for p in range(max_p + 1):
        for n in range(max_n + 1):
            a, b = left.value(n, p), right.value(n, p)
            if a != b:
                return Mismatch(n, p, a, b)
    return None


def verify_theorem(
    max_n: int,
    max_p: int,
    table: Optional[PBernTable] = None,
    workers: int = 1,
    progress: bool = False,
) -> VerifyReport:
    """
    Compare the recurrence table with the closed-form coefficients cell by cell.

    Args:
        max_n: Largest n compared
        max_p: Largest p compared
        table: Recurrence-side table to check; built with recurrence_table
            when omitted
        workers: Process count for the closed-form columns
        progress: Show a progress bar on stderr
    """
    if table is None:
        table = recurrence_table(max_n, max_p)
    if table.max_n < max_n or table.max_p < max_p:
        raise ValueError(
            f"table covers n <= {table.max_n}, p <= {table.max_p}; "
            f"need n <= {max_n}, p <= {max_p}"
        )
    expected = egf_table(max_n, max_p, workers=workers, progress=progress)
    return VerifyReport(
        VerifyKind.THEOREM,
        max_n,
        max_p,
        _first_column_mismatch(table, expected, max_n, max_p),
    )


def verify_ode(p: int, max_n: int) -> VerifyReport:
    """
    Check f_p' = p f_p - ((p+1)^2/(p+2)) f_{p+1} on t^0..t^(max_n-1).

    Both sides are reported EGF-scaled, so a mismatch at exponent m reads as
    B_{m+1,p} against p B_{m,p} - ((p+1)^2/(p+2)) B_{m,p+1}.
    """
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    if max_n < 1:
        raise ValueError(f"N must be >= 1, got {max_n}")
    f_p = closed_form_egf(p, max_n)
    f_next = closed_form_egf(p + 1, max_n)
    lhs = derivative(f_p)
    ratio = Fraction((p + 1) ** 2, p + 2)
    rhs = sub(scale(f_p, p), scale(f_next, ratio))
    mismatch = None
    for m in range(max_n):
        left, right = egf_coefficient(lhs, m), egf_coefficient(rhs, m)
        if left != right:
            mismatch = Mismatch(m, p, left, right)
            break
    return VerifyReport(VerifyKind.ODE, max_n, p, mismatch)


def verify_pole_cancellation(p: int) -> VerifyReport:
    """Check that the coefficients of t^-(p+1)..t^-1 in the closed-form sum vanish."""
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    total = closed_form_laurent(p, 0)
    mismatch = None
    for m in range(-(p + 1), 0):
        c = coefficient(total, m)
        if c != 0:
            mismatch = Mismatch(m, p, c, Fraction(0))
            break
    if mismatch is None and total.valuation < 0:
        mismatch = Mismatch(
            total.valuation, p, coefficient(total, total.valuation), Fraction(0)
        )
    return VerifyReport(VerifyKind.POLE_CANCELLATION, 0, p, mismatch)


def verify_base_case(max_n: int) -> VerifyReport:
    """The closed form at p = 0 must reproduce t/(e^t - 1) coefficient by coefficient."""
    if max_n < 0:
        raise ValueError(f"N must be >= 0, got {max_n}")
    f0 = closed_form_egf(0, max_n)
    expected = classical_bernoulli(max_n)
    mismatch = None
    for n in range(max_n + 1):
        left = egf_coefficient(f0, n)
        if left != expected[n]:
            mismatch = Mismatch(n, 0, left, expected[n])
            break
    return VerifyReport(VerifyKind.BASE_CASE, max_n, 0, mismatch)


def verify_recurrence(table: PBernTable) -> VerifyReport:
    """Re-check B_{n+1,p} = p B_{n,p} - ((p+1)^2/(p+2)) B_{n,p+1} on every in-range cell."""
    mismatch = None
    for p in range(table.max_p):
        ratio = Fraction((p + 1) ** 2, p + 2)
        for n in range(table.max_n):
            left = table.value(n + 1, p)
            right = p * table.value(n, p) - ratio * table.value(n, p + 1)
            if left != right:
                mismatch = Mismatch(n + 1, p, left, right)
                break
        if mismatch:
            break
    return VerifyReport(VerifyKind.RECURRENCE, table.max_n, table.max_p, mismatch)


def _per_p_job(args: Tuple[int, int]) -> Tuple[VerifyReport, VerifyReport]:
    p, max_n = args
    return verify_ode(p, max(max_n, 1)), verify_pole_cancellation(p)


def _pole_report(error: PoleCancellationError) -> VerifyReport:
    return VerifyReport(
        VerifyKind.POLE_CANCELLATION,
        0,
        error.p,
        Mismatch(error.valuation, error.p, error.leading, Fraction(0)),
    )


def _closed_form_reports(
    recurrence: PBernTable,
    max_n: int,
    max_p: int,
    workers: int,
    progress: bool,
) -> List[VerifyReport]:
    closed = egf_table(max_n, max_p, workers=workers, progress=progress)
    reports = [
        verify_base_case(max_n),
        verify_recurrence(recurrence),
        verify_recurrence(closed),
        VerifyReport(
            VerifyKind.THEOREM,
            max_n,
            max_p,
            _first_column_mismatch(recurrence, closed, max_n, max_p),
        ),
    ]

    # ODE needs at least one coefficient; at max_n == 0 it checks t^0 only
    jobs = [(p, max_n) for p in range(max_p + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_p = list(
                tqdm(
                    pool.map(_per_p_job, jobs),
                    total=len(jobs),
                    desc="Checking ODE and poles",
                    unit="p",
                    disable=not progress,
                )
            )
    else:
        per_p = [
            _per_p_job(job)
            for job in tqdm(
                jobs, desc="Checking ODE and poles", unit="p", disable=not progress
            )
        ]
    reports.extend(ode for ode, _ in per_p)
    reports.extend(pole for _, pole in per_p)
    return reports


def run_suite(
    max_n: int,
    max_p: int,
    workers: int = 1,
    progress: bool = False,
    logger: Optional[logging.Logger] = None,
) -> List[VerifyReport]:
    """
    Run every check for n <= max_n, p <= max_p.

    Reports come back in a fixed order regardless of how the per-p work was
    scheduled: base case, recurrence (both tables), theorem, ODE for each p,
    pole cancellation for each p.

    If a closed form keeps a pole, nothing built from it can be compared; the
    result is then the recurrence check followed by one failed
    pole-cancellation report for the offending p.
    """
    if max_n < 0 or max_p < 0:
        raise ValueError(f"bounds must be >= 0, got max_n={max_n}, max_p={max_p}")
    start_time = time.time()
    if logger:
        logger.info(f"Verifying n <= {max_n}, p <= {max_p} with {workers} worker(s)")

    recurrence = recurrence_table(max_n, max_p)
    try:
        reports = _closed_form_reports(recurrence, max_n, max_p, workers, progress)
    except PoleCancellationError as e:
        if logger:
            logger.error(f"Error: {e}")
        reports = [verify_recurrence(recurrence), _pole_report(e)]

    for report in reports:
        if logger and not report.passed:
            logger.warning(
                f"{report.kind.value} check failed at {report.first_mismatch}"
            )
    elapsed_time = time.time() - start_time
    if logger:
        logger.info(f"Verification completed in {elapsed_time:.2f} seconds")
    return reports
