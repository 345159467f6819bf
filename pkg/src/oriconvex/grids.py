"""Grids, the whirlpool orientation rule, and grid-orientation plumbing.

Coordinates: ``i`` is the column (1..n, increasing rightward), ``j`` the row
(1..m, increasing upward); "up" means ``j+1``.  A unit square ``(i, j)`` has
corners ``(i,j), (i+1,j), (i,j+1), (i+1,j+1)`` for ``1 <= i < n``,
``1 <= j < m``.

The whirlpool rule orients the vertical edge (i,j)-(i,j+1) upward exactly
when ``i = j (mod 2)`` and the horizontal edge (i,j)-(i+1,j) leftward
exactly when ``i = j (mod 2)``; every unit square becomes a directed
4-cycle.  The anti-whirlpool reverses all arcs.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .digraph import OrientedGraph
from .undirected import UndirectedGraph

Coord = tuple[int, int]
Edge = tuple[Coord, Coord]  # canonical: sorted endpoint pair
Arc = tuple[Coord, Coord]  # directed


class GridError(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    """An n x m grid with its coordinate/index bijection."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2 or self.m < 2:
            raise GridError("grid needs n, m >= 2")

    @property
    def order(self) -> int:
        return self.n * self.m

    def index(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.m):
            raise GridError(f"coordinate ({i},{j}) outside {self.n}x{self.m} grid")
        return (j - 1) * self.n + (i - 1)

    def coord(self, idx: int) -> Coord:
        if not 0 <= idx < self.order:
            raise GridError(f"index {idx} out of range")
        return idx % self.n + 1, idx // self.n + 1

    def in_grid(self, i: int, j: int) -> bool:
        return 1 <= i <= self.n and 1 <= j <= self.m

    def labels(self) -> dict[int, str]:
        return {v: "%d_%d" % self.coord(v) for v in range(self.order)}

    def edges(self) -> list[Edge]:
        """All grid edges as canonical coordinate pairs."""
        out: list[Edge] = []
        for j in range(1, self.m + 1):
            for i in range(1, self.n + 1):
                if i < self.n:
                    out.append(((i, j), (i + 1, j)))
                if j < self.m:
                    out.append(((i, j), (i, j + 1)))
        return out

    def squares(self) -> list[Coord]:
        return [
            (i, j) for i in range(1, self.n) for j in range(1, self.m)
        ]

    def underlying(self) -> UndirectedGraph:
        return UndirectedGraph(
            self.order,
            [(self.index(*a), self.index(*b)) for a, b in self.edges()],
        )


def grid(n: int, m: int) -> GridSpec:
    return GridSpec(n, m)


# ---- regions ----------------------------------------------------------------


def square_edges(square: Coord) -> list[Edge]:
    i, j = square
    return [
        ((i, j), (i + 1, j)),  # bottom
        ((i, j + 1), (i + 1, j + 1)),  # top
        ((i, j), (i, j + 1)),  # left
        ((i + 1, j), (i + 1, j + 1)),  # right
    ]


def region_dual_connected(squares: Iterable[Coord]) -> bool:
    """Connectivity of the face-adjacency (interior dual) graph of a region."""
    sq = set(squares)
    if not sq:
        return False
    start = next(iter(sq))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in sq and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == sq


def whirlpool_arcs(squares: Iterable[Coord], anti: bool = False) -> dict[Edge, Arc]:
    """Orient every edge of the region's squares by the whirlpool rule."""
    out: dict[Edge, Arc] = {}
    for sq in squares:
        for e in square_edges(sq):
            out[e] = _rule_arc(e, anti)
    return out


def _rule_arc(e: Edge, anti: bool) -> Arc:
    (i, j), (i2, j2) = e
    if i == i2:  # vertical edge (i,j)-(i,j+1)
        up = (i + j) % 2 == 0  # i = j (mod 2)
        if anti:
            up = not up
        return ((i, j), (i, j + 1)) if up else ((i, j + 1), (i, j))
    left = (i + j) % 2 == 0
    if anti:
        left = not left
    return ((i + 1, j), (i, j)) if left else ((i, j), (i + 1, j))


def square_cycle(square: Coord, clockwise: bool) -> list[Arc]:
    """The four arcs making a unit square a directed cycle.

    Clockwise means up along the left edge: (i,j) -> (i,j+1) -> (i+1,j+1)
    -> (i+1,j) -> (i,j); this matches the whirlpool rule when i = j (mod 2).
    """
    i, j = square
    cyc = [(i, j), (i, j + 1), (i + 1, j + 1), (i + 1, j), (i, j)]
    if not clockwise:
        cyc.reverse()
    return [(cyc[k], cyc[k + 1]) for k in range(4)]


# ---- orientations -----------------------------------------------------------


@dataclass
class GridOrientation:
    """A full edge-orientation of a grid, plus provenance and a target con."""

    spec: GridSpec
    direction: dict[Edge, Arc]
    provenance: dict[str, Any] = field(default_factory=dict)
    target: int | None = None

    def __post_init__(self) -> None:
        expected = set(self.spec.edges())
        got = set(self.direction)
        if got != expected:
            missing = sorted(expected - got)[:4]
            extra = sorted(got - expected)[:4]
            raise GridError(
                f"orientation does not cover the grid exactly: "
                f"missing={missing} extra={extra}"
            )
        for e, (a, b) in self.direction.items():
            if {a, b} != {e[0], e[1]}:
                raise GridError(f"arc {a}->{b} does not orient edge {e}")

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def m(self) -> int:
        return self.spec.m

    def arcs(self) -> list[Arc]:
        return sorted(self.direction.values())

    def arc_present(self, a: Coord, b: Coord) -> bool:
        e = (min(a, b), max(a, b))
        return self.direction.get(e) == (a, b)

    def to_graph(self) -> OrientedGraph:
        idx = self.spec.index
        return OrientedGraph(
            self.spec.order,
            [(idx(*a), idx(*b)) for a, b in self.direction.values()],
            labels=self.spec.labels(),
        )

    def reversed(self) -> "GridOrientation":
        return GridOrientation(
            self.spec,
            {e: (b, a) for e, (a, b) in self.direction.items()},
            provenance={**self.provenance, "reversed": True},
            target=self.target,
        )

    def transposed(self) -> "GridOrientation":
        """Swap the grid axes; an isomorphism, so con is preserved."""
        flip = lambda c: (c[1], c[0])
        direction = {}
        for e, (a, b) in self.direction.items():
            fa, fb = flip(a), flip(b)
            direction[(min(fa, fb), max(fa, fb))] = (fa, fb)
        return GridOrientation(
            GridSpec(self.m, self.n),
            direction,
            provenance={**self.provenance, "transposed": True},
            target=self.target,
        )

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "n": self.n,
            "m": self.m,
            "arcs": [[a[0], a[1], b[0], b[1]] for a, b in self.arcs()],
        }
        if self.provenance:
            d["provenance"] = self.provenance
        if self.target is not None:
            d["target"] = self.target
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @staticmethod
    def from_dict(d: dict[str, Any]) -> "GridOrientation":
        try:
            spec = GridSpec(int(d["n"]), int(d["m"]))
            arcs = [((ai, aj), (bi, bj)) for ai, aj, bi, bj in d["arcs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GridError(f"bad orientation JSON: {exc}") from exc
        direction = {}
        for a, b in arcs:
            direction[(min(a, b), max(a, b))] = (a, b)
        return GridOrientation(
            spec,
            direction,
            provenance=d.get("provenance", {}),
            target=d.get("target"),
        )

    @staticmethod
    def loads(text: str) -> "GridOrientation":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GridError(f"invalid JSON: {exc}") from exc
        return GridOrientation.from_dict(d)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GridOrientation)
            and self.spec == other.spec
            and self.direction == other.direction
        )


class OrientationBuilder:
    """Accumulates coordinate arcs, rejecting conflicting directions."""

    def __init__(self, spec: GridSpec):
        self.spec = spec
        self.direction: dict[Edge, Arc] = {}

    def add(self, a: Coord, b: Coord) -> None:
        if not (self.spec.in_grid(*a) and self.spec.in_grid(*b)):
            raise GridError(f"arc {a}->{b} leaves the grid")
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            raise GridError(f"arc {a}->{b} is not a grid edge")
        e = (min(a, b), max(a, b))
        old = self.direction.get(e)
        if old is not None and old != (a, b):
            raise GridError(f"conflicting orientation for edge {e}")
        self.direction[e] = (a, b)

    def add_arcs(self, arcs: Iterable[Arc]) -> None:
        for a, b in arcs:
            self.add(a, b)

    def add_path(self, coords: Sequence[Coord]) -> None:
        for a, b in zip(coords, coords[1:]):
            self.add(a, b)

    def has_edge(self, e: Edge) -> bool:
        return e in self.direction

    def remaining(self) -> list[Edge]:
        return [e for e in self.spec.edges() if e not in self.direction]

    def build(self, provenance: dict[str, Any] | None = None, target: int | None = None) -> GridOrientation:
        return GridOrientation(
            self.spec, dict(self.direction), provenance=provenance or {}, target=target
        )


def whirlpool(n: int, m: int, anti: bool = False) -> GridOrientation:
    """The whirlpool (or anti-whirlpool) orientation of the full n x m grid."""
    spec = GridSpec(n, m)
    b = OrientationBuilder(spec)
    b.add_arcs(whirlpool_arcs(spec.squares(), anti).values())
    return b.build(
        provenance={"constructor": "whirlpool", "params": {"n": n, "m": m, "anti": anti}},
        target=1,
    )


def region_graph(
    n: int, m: int, squares: Iterable[Coord], anti: bool = False
) -> tuple[OrientedGraph, dict[Coord, int]]:
    """Whirlpool orientation of a sub-region, as its own oriented graph.

    Returns the digraph together with the coordinate -> vertex index map.
    """
    sqs = list(squares)
    if not region_dual_connected(sqs):
        raise GridError("region's interior dual is not connected")
    spec = GridSpec(n, m)
    for i, j in sqs:
        if not (1 <= i < n and 1 <= j < m):
            raise GridError(f"square ({i},{j}) outside the grid")
    arcs = whirlpool_arcs(sqs, anti)
    verts = sorted({c for e in arcs for c in e})
    index = {c: k for k, c in enumerate(verts)}
    g = OrientedGraph(
        len(verts),
        [(index[a], index[b]) for a, b in arcs.values()],
        labels={k: "%d_%d" % c for c, k in index.items()},
    )
    return g, index


# ---- path specs -------------------------------------------------------------

_MOVES = {"u": (0, 1), "d": (0, -1), "l": (-1, 0), "r": (1, 0)}


@dataclass(frozen=True)
class PathSpec:
    """A start coordinate plus a move sequence over {u, d, l, r}."""

    start: Coord
    moves: str

    def __post_init__(self) -> None:
        bad = set(self.moves) - set(_MOVES)
        if bad:
            raise GridError(f"unknown moves: {sorted(bad)}")

    def coords(self) -> list[Coord]:
        cur = self.start
        out = [cur]
        for mv in self.moves:
            di, dj = _MOVES[mv]
            cur = (cur[0] + di, cur[1] + dj)
            out.append(cur)
        return out


def to_pathspec(spec: GridSpec, coords: Sequence[Coord]) -> PathSpec:
    """Encode a coordinate walk as a move sequence; each step must be a grid edge."""
    if not coords:
        raise GridError("empty path")
    moves = []
    for a, b in zip(coords, coords[1:]):
        if not (spec.in_grid(*a) and spec.in_grid(*b)):
            raise GridError(f"path leaves the grid at {a}->{b}")
        delta = (b[0] - a[0], b[1] - a[1])
        for mv, d in _MOVES.items():
            if d == delta:
                moves.append(mv)
                break
        else:
            raise GridError(f"step {a}->{b} is not a grid move")
    return PathSpec(coords[0], "".join(moves))


def path_vertices(spec: GridSpec, ps: PathSpec) -> list[int]:
    return [spec.index(*c) for c in ps.coords()]


# ---- ascii rendering --------------------------------------------------------
#
# Glyph table (fixed): vertices are "o"; a horizontal arc is "->" or "<-"
# between the two "o" glyphs; a vertical arc is "^" or "v" directly below
# the upper vertex's column.  Rows are printed top (j = m) to bottom (j = 1).


def render_ascii(o: GridOrientation) -> str:
    n, m = o.n, o.m
    lines: list[str] = []
    for j in range(m, 0, -1):
        row = []
        for i in range(1, n + 1):
            row.append("o")
            if i < n:
                row.append("->" if o.arc_present((i, j), (i + 1, j)) else "<-")
        lines.append("".join(row))
        if j > 1:
            seg = []
            for i in range(1, n + 1):
                seg.append("^" if o.arc_present((i, j - 1), (i, j)) else "v")
                if i < n:
                    seg.append("  ")
            lines.append("".join(seg))
    return "\n".join(lines) + "\n"


def parse_ascii(text: str) -> GridOrientation:
    lines = [ln.rstrip("\n") for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines) % 2 == 0:
        raise GridError("ascii grid must have 2m-1 nonblank lines")
    m = (len(lines) + 1) // 2
    first = lines[0]
    if (len(first) + 2) % 3 != 0:
        raise GridError("ascii grid width must be 3n-2 characters")
    n = (len(first) + 2) // 3
    spec = GridSpec(n, m)
    b = OrientationBuilder(spec)
    for k, line in enumerate(lines):
        if k % 2 == 0:  # vertex row, j = m - k//2
            j = m - k // 2
            if not re.fullmatch("o((->|<-)o)*", line):
                raise GridError(f"bad vertex row: {line!r}")
            for i in range(1, n):
                glyph = line[3 * i - 2 : 3 * i]
                if glyph == "->":
                    b.add((i, j), (i + 1, j))
                else:
                    b.add((i + 1, j), (i, j))
        else:  # vertical arc row between j_hi = m - (k-1)//2 and j_hi - 1
            j_hi = m - (k - 1) // 2
            for i in range(1, n + 1):
                pos = 3 * (i - 1)
                if pos >= len(line):
                    raise GridError("short vertical-arc row")
                glyph = line[pos]
                if glyph == "^":
                    b.add((i, j_hi - 1), (i, j_hi))
                elif glyph == "v":
                    b.add((i, j_hi), (i, j_hi - 1))
                else:
                    raise GridError(f"bad vertical glyph {glyph!r}")
    return b.build()
