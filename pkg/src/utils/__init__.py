"""Utility helpers: log-space values and command-line selectors."""

from .logspace import LN10, LogValue

__all__ = ["LN10", "LogValue"]
