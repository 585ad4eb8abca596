import logging
import time
from dataclasses import dataclass
from typing import List, Optional

from .pbernoulli import Route, build_table


@dataclass
class BenchResult:
    """Wall-clock time of one route over the full rectangle."""

    route: Route
    elapsed_ms: float

    def line(self) -> str:
        return f"{self.route.value}: {self.elapsed_ms:.3f} ms"


def time_routes(
    max_n: int,
    max_p: int,
    logger: Optional[logging.Logger] = None,
) -> List[BenchResult]:
    """Time the recurrence route and the closed-form route, in that order."""
    results = []
    for route in (Route.RECURRENCE, Route.CLOSED_FORM):
        start_time = time.perf_counter()
        build_table(max_n, max_p, route, logger=logger)
        elapsed_ms = (time.perf_counter() - start_time) * 1000
        if logger:
            logger.debug(f"  {route.value} route took {elapsed_ms:.3f} ms")
        results.append(BenchResult(route=route, elapsed_ms=elapsed_ms))
    return results
