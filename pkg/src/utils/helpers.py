"""Helper utilities shared across the toolkit."""

from collections import Counter
from pathlib import Path
from typing import Dict, Iterable, List, Tuple, Union
import pandas as pd

PACKAGE_ROOT = Path(__file__).resolve().parent.parent


def resource_path(*parts: str) -> Path:
    """Path of a data file shipped inside the package."""
    return PACKAGE_ROOT.joinpath(*parts)


def read_text(path: Union[str, Path]) -> str:
    """Read a UTF-8 text file."""
    return Path(path).read_text(encoding="utf-8")


def frame_to_csv(frame: pd.DataFrame, line_terminator: str = "\n") -> str:
    """
    Render a DataFrame as CSV text without the index.

    Args:
        frame: Table to render
        line_terminator: Row separator

    Returns:
        CSV text, header included
    """
    return frame.to_csv(index=False, lineterminator=line_terminator)


def _freeze_row(row: Dict[str, str]) -> Tuple[Tuple[str, str], ...]:
    return tuple(sorted(row.items()))


def multiset_diff(
    expected: Iterable[Dict[str, str]],
    actual: Iterable[Dict[str, str]]
) -> Tuple[List[Dict[str, str]], List[Dict[str, str]]]:
    """
    Compare two bags of rows.

    Args:
        expected: Expected rows
        actual: Actual rows

    Returns:
        Tuple of (rows missing from actual, rows not expected), each sorted
    """
    want = Counter(_freeze_row(r) for r in expected)
    got = Counter(_freeze_row(r) for r in actual)
    missing = [dict(r) for r in sorted((want - got).elements())]
    unexpected = [dict(r) for r in sorted((got - want).elements())]
    return missing, unexpected
