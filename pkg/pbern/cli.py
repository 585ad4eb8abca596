import click
from typing import Optional
from .bench import time_routes
from .config import get_default_workers, set_defaults
from .formats import OutputFormat, render_coefficients, render_reports, render_table
from .pbernoulli import Route, build_table, closed_form_column
from .utils import setup_logging, write_output
from .verify import run_suite
import time
import sys
from . import __version__

FORMAT_CHOICE = click.Choice([f.value for f in OutputFormat])
BOUND = click.IntRange(min=0)


def format_option(func):
    return click.option(
        "--format",
        "fmt",
        type=FORMAT_CHOICE,
        default=OutputFormat.JSON.value,
        show_default=True,
        help="Output format",
    )(func)


def resolve_workers(workers: Optional[int]) -> int:
    return workers if workers is not None else max(get_default_workers(), 1)


@click.group()
@click.version_option(version=__version__, prog_name="pbern")
def cli():
    """pbern - Exact p-Bernoulli numbers by recurrence and closed form."""
    pass


@cli.command()
@click.option("--max-n", type=BOUND, required=True, help="Largest n in the table")
@click.option("--max-p", type=BOUND, required=True, help="Largest p in the table")
@click.option(
    "--route",
    type=click.Choice([r.value for r in Route]),
    default=Route.RECURRENCE.value,
    show_default=True,
    help="Compute by the recurrence or by expanding the closed-form EGF",
)
@format_option
@click.option("--out", type=click.Path(dir_okay=False), help="Write output to this file")
@click.option("--workers", type=click.IntRange(min=1), help="Processes for the egf route")
@click.option("--progress", is_flag=True, help="Show progress bars on stderr")
@click.option("--debug", is_flag=True, help="Enable debug logging")
def table(
    max_n: int,
    max_p: int,
    route: str,
    fmt: str = OutputFormat.JSON.value,
    out: Optional[str] = None,
    workers: Optional[int] = None,
    progress: bool = False,
    debug: bool = False,
):
    """Write the table of B_{n,p} for n <= max-n, p <= max-p."""
    logger = setup_logging(debug)
    result = build_table(
        max_n,
        max_p,
        Route(route),
        workers=resolve_workers(workers),
        progress=progress,
        logger=logger,
    )
    write_output(render_table(result, OutputFormat(fmt)), out)


@cli.command()
@click.option("--p", "p", type=BOUND, required=True, help="Parameter p of f_p(t)")
@click.option(
    "--order",
    type=click.IntRange(min=1),
    default=10,
    show_default=True,
    help="Number of EGF coefficients to print",
)
@format_option
@click.option("--out", type=click.Path(dir_okay=False), help="Write output to this file")
@click.option("--debug", is_flag=True, help="Enable debug logging")
def egf(
    p: int,
    order: int,
    fmt: str = OutputFormat.JSON.value,
    out: Optional[str] = None,
    debug: bool = False,
):
    """Print B_{0,p}..B_{order-1,p} extracted from the closed-form EGF."""
    logger = setup_logging(debug)
    logger.debug(f"Expanding f_{p}(t) to {order} coefficients")
    coefficients = closed_form_column(p, order - 1)
    write_output(render_coefficients(p, coefficients, OutputFormat(fmt)), out)


@cli.command()
@click.option("--max-n", type=BOUND, required=True, help="Largest n checked")
@click.option("--max-p", type=BOUND, required=True, help="Largest p checked")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the report to this file")
@click.option("--workers", type=click.IntRange(min=1), help="Processes for per-p checks")
@click.option("--progress", is_flag=True, help="Show progress bars on stderr")
@click.option("--debug", is_flag=True, help="Enable debug logging")
def verify(
    max_n: int,
    max_p: int,
    out: Optional[str] = None,
    workers: Optional[int] = None,
    progress: bool = False,
    debug: bool = False,
):
    """Check the closed form against the recurrence, the ODE and pole cancellation.

    Exits 1 if any check fails.
    """
    logger = setup_logging(debug)
    reports = run_suite(
        max_n,
        max_p,
        workers=resolve_workers(workers),
        progress=progress,
        logger=logger,
    )

    write_output(render_reports(max_n, max_p, reports), out)
    if not all(report.passed for report in reports):
        click.echo("Verification failed", err=True)
        sys.exit(1)


@cli.command()
@click.option("--max-n", type=BOUND, required=True, help="Largest n in the timed table")
@click.option("--max-p", type=BOUND, required=True, help="Largest p in the timed table")
@click.option("--debug", is_flag=True, help="Enable debug logging")
def bench(max_n: int, max_p: int, debug: bool = False):
    """Time both routes over the n <= max-n, p <= max-p rectangle."""
    logger = setup_logging(debug)
    start_time = time.time()
    for result in time_routes(max_n, max_p, logger=logger):
        click.echo(result.line())
    logger.debug(f"Benchmark completed in {time.time() - start_time:.2f} seconds")


@cli.command(name="set-defaults")
@click.option(
    "--workers", type=click.IntRange(min=1), required=True, help="Default process count"
)
def set_defaults_command(workers: int):
    """Set the default worker count used when --workers is omitted."""
    config = set_defaults(workers=workers)
    click.echo(f"Defaults set to: workers={config['workers']}")


if __name__ == "__main__":
    if len(sys.argv) == 1:
        cli.main(["--help"])
    else:
        cli()
