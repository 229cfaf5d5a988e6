"""Helpers for parsing site selectors and graph sources from command-line text."""

from __future__ import annotations

import re
from typing import Iterable, List, Tuple, TypeVar

from ..errors import NetworkParseError

T = TypeVar("T")

RANGE_RE = re.compile(r"^(-?\d+)\s*-\s*(-?\d+)$")
INT_RE = re.compile(r"^-?\d+$")
GRAPH_RE = re.compile(r"^(chain|lattice2d|lattice3d|file):(.+)$", re.IGNORECASE)


def _unique_preserve_order(items: Iterable[T]) -> List[T]:
    seen = set()
    ordered: List[T] = []
    for item in items:
        if item not in seen:
            seen.add(item)
            ordered.append(item)
    return ordered


def parse_index_list(text: str) -> List[int]:
    """Parse ``"1,3,5-9"`` into [1, 3, 5, 6, 7, 8, 9], dropping repeats."""
    if not text or not text.strip():
        raise NetworkParseError("empty site list", field="targets")
    values: List[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        match = RANGE_RE.match(item)
        if match:
            lo, hi = int(match.group(1)), int(match.group(2))
            if hi < lo:
                raise NetworkParseError(f"descending range {item!r}", field="targets")
            values.extend(range(lo, hi + 1))
        elif INT_RE.match(item):
            values.append(int(item))
        else:
            raise NetworkParseError(f"cannot read site {item!r}", field="targets")
    return _unique_preserve_order(values)


def parse_coordinate_list(text: str, dimension: int) -> List[Tuple[int, ...]]:
    """Parse ``"2:1,3:3"`` into lattice coordinates of the given dimension."""
    if not text or not text.strip():
        raise NetworkParseError("empty coordinate list", field="targets")
    coords: List[Tuple[int, ...]] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        parts = [p.strip() for p in item.split(":")]
        if len(parts) != dimension or not all(INT_RE.match(p) for p in parts):
            raise NetworkParseError(
                f"expected {dimension} colon-separated integers, got {item!r}", field="targets"
            )
        coords.append(tuple(int(p) for p in parts))
    return _unique_preserve_order(coords)


def parse_graph_source(text: str) -> Tuple[str, str]:
    """Split ``chain:9`` / ``lattice2d:40`` / ``file:PATH`` into (kind, argument)."""
    match = GRAPH_RE.match(text.strip()) if text else None
    if not match:
        raise NetworkParseError(
            f"graph source must be chain:N, lattice2d:N, lattice3d:N or file:PATH, got {text!r}",
            field="graph",
        )
    return match.group(1).lower(), match.group(2).strip()
