"""Storage package for result persistence."""

from .results import ResultStore, render, render_csv, render_json, render_number

__all__ = ["ResultStore", "render", "render_csv", "render_json", "render_number"]
