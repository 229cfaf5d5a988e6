"""Result storage - CSV/JSON rendering and atomic file writes for result tables."""

import csv
import json
import logging
import math
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..constants import SIGNIFICANT_DIGITS, OutputFormat
from ..schemas.run import Cell, ResultTable

logger = logging.getLogger(__name__)


def render_number(value: float) -> str:
    """Shared decimal rendering for CSV and JSON."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, f".{SIGNIFICANT_DIGITS}g")


def _csv_cell(cell: Cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, bool):
        return "true" if cell else "false"
    if isinstance(cell, int):
        return str(cell)
    if isinstance(cell, float):
        return render_number(cell)
    text = str(cell)
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _json_cell(cell: Cell) -> str:
    if cell is None:
        return "null"
    if isinstance(cell, bool):
        return "true" if cell else "false"
    if isinstance(cell, int):
        return str(cell)
    if isinstance(cell, float):
        # non-finite values have no JSON number form
        return render_number(cell) if math.isfinite(cell) else json.dumps(render_number(cell))
    return json.dumps(str(cell))


def render_csv(table: ResultTable) -> str:
    lines = [f"# {key}: {json.dumps(value, default=str)}" for key, value in table.meta.items()]
    lines.append(",".join(_csv_cell(c) for c in table.columns))
    for row in table.rows:
        lines.append(",".join(_csv_cell(c) for c in row))
    return "\n".join(lines) + "\n"


def render_json(table: ResultTable) -> str:
    rows = ",\n".join("    [" + ", ".join(_json_cell(c) for c in row) + "]" for row in table.rows)
    return (
        "{\n"
        f'  "meta": {json.dumps(table.meta, indent=2, default=str)},\n'
        f'  "columns": {json.dumps(table.columns)},\n'
        f'  "rows": [\n{rows}\n  ]\n'
        "}\n"
    ).replace('"rows": [\n\n  ]', '"rows": []')


def render(table: ResultTable, fmt: OutputFormat) -> str:
    return render_json(table) if fmt == OutputFormat.JSON else render_csv(table)


class ResultStore:
    """Filesystem writer for rendered result tables."""

    def __init__(self, base_dir: Optional[str] = None):
        """
        Initialize result store.

        Args:
            base_dir: Directory relative paths resolve against. Defaults to the working directory.
        """
        self.base_dir = Path(base_dir) if base_dir else Path.cwd()

    def _resolve(self, path: str) -> Path:
        target = Path(path)
        if not target.is_absolute():
            target = self.base_dir / target
        target.parent.mkdir(parents=True, exist_ok=True)
        return target

    def write_text(self, path: str, content: str) -> str:
        """
        Write content atomically: temp file in the same directory, then rename.

        Returns:
            Path to the written file.
        """
        target = self._resolve(path)
        fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
                handle.write(content)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        logger.info("wrote %s (%d bytes)", target, len(content))
        return str(target)

    def write_table(self, table: ResultTable, path: str, fmt: OutputFormat) -> str:
        """
        Render and write a result table.

        Returns:
            Path to the written file.
        """
        return self.write_text(path, render(table, fmt))

    def read_json(self, path: str) -> Dict[str, Any]:
        """Read a JSON table back."""
        return json.loads(self._resolve(path).read_text(encoding="utf-8"))

    def read_csv(self, path: str) -> Tuple[Dict[str, Any], List[str], List[List[str]]]:
        """Read a CSV table back as (meta, columns, rows of raw cell text)."""
        meta: Dict[str, Any] = {}
        body: List[str] = []
        for line in self._resolve(path).read_text(encoding="utf-8").splitlines():
            if line.startswith("# "):
                key, _, value = line[2:].partition(": ")
                meta[key] = json.loads(value)
            elif line:
                body.append(line)
        parsed = list(csv.reader(body))
        return meta, parsed[0], parsed[1:]
