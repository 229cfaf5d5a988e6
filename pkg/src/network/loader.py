"""Network file ingestion and serialization.

Line format::

    # comment
    qubits 9
    gamma 1.0            (optional, default 1.0)
    edge 1 2 0.5         (1-based j != k, Delta/gamma, nonzero)

The JSON form ``{"qubits": 9, "gamma": 1.0, "couplings": [[1, 2, 0.5], ...]}``
is accepted interchangeably. Mirrored or repeated edges are rejected.
"""

import json
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from ..errors import DuplicateEdgeError, NetworkParseError, SelfLoopError, SymmetryError
from ..schemas.graph import CouplingGraph


class EdgeLine(BaseModel):
    """One coupling as read from a file, with its source line when known."""

    j: int
    k: int
    delta_over_gamma: float
    line: Optional[int] = None


class NetworkDocument(BaseModel):
    """Raw network description prior to graph validation."""

    qubits: int = Field(ge=1)
    gamma: float = Field(default=1.0, gt=0)
    couplings: List[Tuple[int, int, float]] = Field(default_factory=list)


def _parse_number(token: str, kind, line: int, field: str):
    try:
        return kind(token)
    except ValueError:
        raise NetworkParseError(f"expected {kind.__name__}, got {token!r}", line=line, field=field)


def _parse_lines(text: str) -> Tuple[int, float, List[EdgeLine]]:
    qubits: Optional[int] = None
    gamma: Optional[float] = None
    edges: List[EdgeLine] = []
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        keyword = tokens[0].lower()
        if keyword == "qubits":
            if len(tokens) != 2:
                raise NetworkParseError("expected 'qubits <N>'", line=number, field="qubits")
            if qubits is not None:
                raise NetworkParseError("qubits declared twice", line=number, field="qubits")
            qubits = _parse_number(tokens[1], int, number, "qubits")
        elif keyword == "gamma":
            if len(tokens) != 2:
                raise NetworkParseError("expected 'gamma <value>'", line=number, field="gamma")
            if gamma is not None:
                raise NetworkParseError("gamma declared twice", line=number, field="gamma")
            gamma = _parse_number(tokens[1], float, number, "gamma")
        elif keyword == "edge":
            if len(tokens) != 4:
                raise NetworkParseError(
                    "expected 'edge <j> <k> <delta_over_gamma>'", line=number, field="edge"
                )
            edges.append(
                EdgeLine(
                    j=_parse_number(tokens[1], int, number, "j"),
                    k=_parse_number(tokens[2], int, number, "k"),
                    delta_over_gamma=_parse_number(tokens[3], float, number, "delta_over_gamma"),
                    line=number,
                )
            )
        else:
            raise NetworkParseError(f"unknown keyword {tokens[0]!r}", line=number, field="keyword")
    if qubits is None:
        raise NetworkParseError("missing 'qubits <N>' header", field="qubits")
    return qubits, 1.0 if gamma is None else gamma, edges


def _parse_json(text: str) -> Tuple[int, float, List[EdgeLine]]:
    try:
        doc = NetworkDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(p) for p in first.get("loc", ())) or None
        raise NetworkParseError(first.get("msg", "invalid network document"), field=field)
    edges = [EdgeLine(j=j, k=k, delta_over_gamma=d) for j, k, d in doc.couplings]
    return doc.qubits, doc.gamma, edges


def load_network(text: str) -> CouplingGraph:
    """Parse and validate a network description (line or JSON form)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        qubits, gamma, edges = _parse_json(stripped)
    else:
        qubits, gamma, edges = _parse_lines(text)

    if qubits < 1:
        raise NetworkParseError("qubit count must be positive", field="qubits")
    if not gamma > 0:
        raise NetworkParseError("gamma must be positive", field="gamma")

    couplings: Dict[Tuple[int, int], float] = {}
    seen: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for edge in edges:
        j, k, delta = edge.j, edge.k, edge.delta_over_gamma
        for name, q in (("j", j), ("k", k)):
            if not 1 <= q <= qubits:
                raise NetworkParseError(f"qubit {q} outside 1..{qubits}", line=edge.line, field=name)
        if j == k:
            raise SelfLoopError(f"line {edge.line}: edge ({j},{k}) is a self-loop" if edge.line else f"edge ({j},{k}) is a self-loop")
        if delta == 0:
            raise NetworkParseError(
                "zero coupling; omit absent edges", line=edge.line, field="delta_over_gamma"
            )
        pair = (min(j, k), max(j, k))
        if pair in couplings:
            first = seen[pair]
            mirrored = first != (j, k)
            where = f"edge ({j},{k})" + (f" on line {edge.line}" if edge.line else "")
            if mirrored and couplings[pair] != delta:
                raise SymmetryError(
                    f"{where} mirrors ({first[0]},{first[1]}) with a different coupling "
                    f"({delta} != {couplings[pair]})"
                )
            raise DuplicateEdgeError(f"{where} repeats ({first[0]},{first[1]})")
        couplings[pair] = delta
        seen[pair] = (j, k)

    return CouplingGraph(qubit_count=qubits, gamma=gamma, couplings=couplings)


def to_network_text(graph: CouplingGraph) -> str:
    """Canonical line-format rendering; load_network(to_network_text(g)) == g."""
    lines = [f"qubits {graph.qubit_count}", f"gamma {graph.gamma!r}"]
    for (j, k), delta in sorted(graph.couplings.items()):
        lines.append(f"edge {j} {k} {delta!r}")
    return "\n".join(lines) + "\n"


def to_network_json(graph: CouplingGraph) -> str:
    """Structured rendering of the same content."""
    doc = {
        "qubits": graph.qubit_count,
        "gamma": graph.gamma,
        "couplings": [[j, k, d] for (j, k), d in sorted(graph.couplings.items())],
    }
    return json.dumps(doc, indent=2)
