import logging
import os
import sys
from typing import Optional

import click


def setup_logging(debug: bool = False) -> logging.Logger:
    """Configure logging based on debug flag. Diagnostics go to stderr."""
    if debug:
        logging.basicConfig(
            level=logging.DEBUG, format="%(message)s", stream=sys.stderr
        )
    else:
        logging.basicConfig(
            level=logging.WARNING, format="%(message)s", stream=sys.stderr
        )
    return logging.getLogger("pbern")


def ensure_output_dir(output_path: str):
    """Ensure the output directory exists."""
    os.makedirs(os.path.dirname(os.path.abspath(output_path)), exist_ok=True)


def write_output(text: str, output_path: Optional[str] = None) -> None:
    """
    Write rendered data to a file or to stdout.

    Args:
        text: Newline-terminated output
        output_path: File to write; stdout when omitted
    """
    if output_path is None:
        click.echo(text, nl=False)
        return
    ensure_output_dir(output_path)
    with open(output_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
