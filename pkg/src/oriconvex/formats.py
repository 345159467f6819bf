"""Interchange formats: digraph JSON, undirected graph JSON/DIMACS, DOT export."""

from __future__ import annotations

import json
from typing import Any

from .digraph import OrientedGraph
from .undirected import UndirectedGraph


class FormatError(ValueError):
    """Malformed or unrecognized input file content."""


def digraph_to_dict(g: OrientedGraph) -> dict[str, Any]:
    d: dict[str, Any] = {"order": g.n, "arcs": [list(a) for a in g.arcs()]}
    if g.labels:
        d["labels"] = {str(v): name for v, name in sorted(g.labels.items())}
    return d


def digraph_from_dict(d: dict[str, Any]) -> OrientedGraph:
    try:
        order = int(d["order"])
        arcs = [(int(u), int(v)) for u, v in d["arcs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad digraph JSON: {exc}") from exc
    labels = None
    if "labels" in d and d["labels"]:
        labels = {int(k): str(v) for k, v in d["labels"].items()}
    try:
        return OrientedGraph(order, arcs, labels)
    except ValueError as exc:
        raise FormatError(f"bad digraph JSON: {exc}") from exc


def digraph_dumps(g: OrientedGraph) -> str:
    return json.dumps(digraph_to_dict(g), indent=2, sort_keys=True)


def digraph_loads(text: str) -> OrientedGraph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(d, dict):
        raise FormatError("digraph JSON must be an object")
    return digraph_from_dict(d)


def undirected_to_dict(g: UndirectedGraph) -> dict[str, Any]:
    return {"order": g.n, "edges": [list(e) for e in g.edges]}


def undirected_from_dict(d: dict[str, Any]) -> UndirectedGraph:
    try:
        return UndirectedGraph(int(d["order"]), [(int(u), int(v)) for u, v in d["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from exc


def undirected_loads(text: str) -> UndirectedGraph:
    """Parse an undirected graph from edge-list JSON or DIMACS-like text.

    DIMACS-like: a ``p edge N M`` header followed by ``e u v`` lines with
    1-based endpoints; ``c`` lines are comments.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return undirected_from_dict(d)
    order = None
    edges: list[tuple[int, int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] != "edge":
                raise FormatError(f"bad DIMACS problem line: {line!r}")
            order = int(parts[2])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise FormatError(f"bad DIMACS edge line: {line!r}")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise FormatError(f"unrecognized DIMACS line: {line!r}")
    if order is None:
        raise FormatError("missing DIMACS problem line")
    return UndirectedGraph(order, edges)


def to_dot(g: OrientedGraph, name: str = "D") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(g.n):
        label = g.label(v)
        if label != str(v):
            lines.append(f'  {v} [label="{label}"];')
    for u, v in g.arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
