"""Utility functions and helpers."""

from .logger import setup_logger, get_logger
from .helpers import (
    frame_to_csv,
    multiset_diff,
    read_text,
    resource_path,
)

__all__ = [
    "setup_logger",
    "get_logger",
    "frame_to_csv",
    "multiset_diff",
    "read_text",
    "resource_path",
]
