from typing import Any, Dict, Optional, Tuple

from rich.console import Console
from rich.table import Table

LOGGING_LEVELS = ["errors_only", "summary", "verbose", "debug"]

# Results go to stdout, everything else (rules, spinners, diagnostics) to stderr
console = Console()
err_console = Console(stderr=True)


def is_verbose(logging_level: str) -> bool:
    return logging_level in ["verbose", "debug"]


def shows_summary(logging_level: str) -> bool:
    return logging_level in ["summary", "verbose", "debug"]


def status_text(passed: bool) -> str:
    return "[green]✓ pass[/]" if passed else "[red]✗ fail[/]"


def format_cell(value: Any) -> str:
    """Render one table cell; None is blank, flags read yes/no, floats keep two decimals."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.2f}"
    return str(value)


def create_table(
    columns: Dict[str, type],
    title: Optional[str] = None,
    padding: Tuple[int, int, int, int] = (0, 1, 0, 1),  # top, right, bottom, left
) -> Table:
    """Create a Rich table from column names and the Python type each column holds.

    Numeric columns (int, float) are right-justified and never wrapped; everything else is
    left-justified.
    """
    table = Table(title=title, show_header=bool(columns), header_style="bold", padding=padding)
    for name, kind in columns.items():
        numeric = issubclass(kind, (int, float)) and not issubclass(kind, bool)
        table.add_column(name, justify="right" if numeric else "left", no_wrap=numeric)
    return table


def add_row(table: Table, *values: Any) -> None:
    table.add_row(*(format_cell(value) for value in values))
