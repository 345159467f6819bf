"""Oriented graphs with bit-row adjacency, geodesic intervals and hull closure.

Vertices are dense 0-based indices.  Vertex sets are plain Python ints used
as bitmasks, which keeps the hull closure and the solver's inner loops cheap
enough to run millions of times during spectrum enumeration.  All objects
here are immutable after construction and every operation is a pure
function, so graphs and tables can be shared freely across worker
processes.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

INF = math.inf

VertexSet = int  # bitmask over 0..n-1

SOURCE = "source"
SINK = "sink"
TRANSITIVE = "transitive"
ORDINARY = "ordinary"


def bits(mask: VertexSet) -> Iterator[int]:
    """Iterate the set bits of a vertex mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class OrientedGraph:
    """An orientation of a simple graph: at most one arc per vertex pair.

    ``out_mask[v]`` / ``in_mask[v]`` hold the out- and in-neighborhoods of
    ``v`` as bitmasks (standard convention: ``u`` is an out-neighbor of
    ``v`` iff the arc ``(v, u)`` is present).
    """

    __slots__ = ("n", "out_mask", "in_mask", "labels")

    def __init__(
        self,
        n: int,
        arcs: Iterable[tuple[int, int]],
        labels: dict[int, str] | None = None,
    ):
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if out[v] >> u & 1:
                raise ValueError(f"both ({u},{v}) and ({v},{u}) present")
            if out[u] >> v & 1:
                continue  # duplicate arc, idempotent
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.out_mask = tuple(out)
        self.in_mask = tuple(inn)
        self.labels = dict(labels) if labels else None

    # ---- basic queries ----------------------------------------------------

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs, sorted lexicographically (canonical order)."""
        return [(u, v) for u in range(self.n) for v in bits(self.out_mask[u])]

    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out_mask)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def out_degree(self, v: int) -> int:
        return self.out_mask[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_mask[v].bit_count()

    def degree(self, v: int) -> int:
        return self.out_degree(v) + self.in_degree(v)

    def neighbor_mask(self, v: int) -> VertexSet:
        return self.out_mask[v] | self.in_mask[v]

    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OrientedGraph)
            and self.n == other.n
            and self.out_mask == other.out_mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.out_mask))

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={self.arcs()})"


def reverse(g: OrientedGraph) -> OrientedGraph:
    """Arc-set transpose.  Involutive; maps whirlpools to anti-whirlpools."""
    rg = OrientedGraph.__new__(OrientedGraph)
    rg.n = g.n
    rg.out_mask = g.in_mask
    rg.in_mask = g.out_mask
    rg.labels = g.labels
    return rg


# ---- distances and reachability -------------------------------------------


def distances(g: OrientedGraph, source: int) -> list[float]:
    """BFS distances from ``source``; unreachable vertices get ``inf``."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    out = g.out_mask
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= out[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _reach_mask(adj: tuple[int, ...], start: int, within: VertexSet) -> VertexSet:
    """Vertices reachable from ``start`` using only vertices in ``within``."""
    seen = (1 << start) & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_strong(g: OrientedGraph) -> bool:
    """Strong connectivity: every vertex reaches and is reached by vertex 0."""
    full = g.full_mask()
    if g.n == 1:
        return True
    return (
        _reach_mask(g.out_mask, 0, full) == full
        and _reach_mask(g.in_mask, 0, full) == full
    )


def is_strong_on(g: OrientedGraph, s: VertexSet) -> bool:
    """Strong connectivity of the subdigraph induced by the vertex set ``s``."""
    if s == 0:
        raise ValueError("empty vertex set")
    start = (s & -s).bit_length() - 1
    return (
        _reach_mask(g.out_mask, start, s) == s
        and _reach_mask(g.in_mask, start, s) == s
    )


def is_connected_underlying(g: OrientedGraph, s: VertexSet | None = None) -> bool:
    """Weak connectivity of the subgraph induced by ``s`` (default: all)."""
    if s is None:
        s = g.full_mask()
    if s == 0:
        raise ValueError("empty vertex set")
    adj = tuple(g.out_mask[v] | g.in_mask[v] for v in range(g.n))
    start = (s & -s).bit_length() - 1
    return _reach_mask(adj, start, s) == s


def directed_girth(g: OrientedGraph) -> float:
    """Length of a shortest directed cycle, ``inf`` if acyclic."""
    best: float = INF
    out = g.out_mask
    for v in range(g.n):
        # shortest cycle through v = 1 + shortest path from any out-neighbor back to v
        dist = distances(g, v)
        for u in range(g.n):
            if out[u] >> v & 1 and dist[u] + 1 < best:
                best = dist[u] + 1
    return best


# ---- geodesic intervals ----------------------------------------------------


class IntervalTable:
    """Precomputed geodesic intervals.

    ``one_way[u][v]`` is the bitmask of vertices lying on some directed
    uv-geodesic (empty when v is unreachable from u).  ``two_way[u][v]``
    is the union of the (u,v) and (v,u) entries; convexity closes sets
    under the two-way entries.
    """

    __slots__ = ("n", "one_way", "two_way", "dist")

    def __init__(self, n: int, one_way: list[list[int]], dist: list[list[float]]):
        self.n = n
        self.one_way = one_way
        self.dist = dist
        self.two_way = [
            [one_way[u][v] | one_way[v][u] for v in range(n)] for u in range(n)
        ]


def interval_table(g: OrientedGraph) -> IntervalTable:
    """Build the full interval table from forward and backward BFS sweeps."""
    n = g.n
    fwd = [distances(g, u) for u in range(n)]
    rg = reverse(g)
    bwd = [distances(rg, v) for v in range(n)]  # bwd[v][w] = d(w, v)
    one_way: list[list[int]] = [[0] * n for _ in range(n)]
    for u in range(n):
        du = fwd[u]
        row = one_way[u]
        for v in range(n):
            duv = du[v]
            if duv == INF:
                continue
            dv = bwd[v]
            e = 0
            for w in range(n):
                if du[w] + dv[w] == duv:
                    e |= 1 << w
            row[v] = e
    return IntervalTable(n, one_way, [list(r) for r in fwd])


# ---- hull closure and convexity --------------------------------------------


def hull(g: OrientedGraph, t: IntervalTable, seed: VertexSet) -> VertexSet:
    """Convex hull: least fixed point of adding two-way interval entries.

    Only pairs involving newly added vertices are revisited, so repeated
    closure calls during enumeration stay cheap.
    """
    if seed == 0:
        raise ValueError("empty hull seed")
    tw = t.two_way
    current = seed
    fresh = seed
    while fresh:
        added = 0
        for u in bits(fresh):
            row = tw[u]
            for v in bits(current):
                added |= row[v]
        added &= ~current
        current |= added
        fresh = added
    return current


def is_convex(g: OrientedGraph, t: IntervalTable, s: VertexSet) -> bool:
    """True iff both interval entries of every pair in ``s`` stay inside ``s``."""
    if s == 0:
        raise ValueError("empty vertex set")
    tw = t.two_way
    outside = ~s
    for u in bits(s):
        row = tw[u]
        for v in bits(s):
            if row[v] & outside:
                return False
    return True


# ---- structural predicates --------------------------------------------------


def classify_vertex(g: OrientedGraph, v: int) -> str:
    """Classify ``v`` as source, sink, transitive or ordinary.

    Transitive: positive in- and out-degree and every (in-neighbor,
    out-neighbor) pair joined by an arc.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    outs = g.out_mask[v]
    ins = g.in_mask[v]
    if ins == 0 and outs:
        return SOURCE
    if outs == 0 and ins:
        return SINK
    if outs and ins:
        for w in bits(ins):
            if g.out_mask[w] & outs != outs:
                return ORDINARY
        return TRANSITIVE
    return ORDINARY


def out_boundary(g: OrientedGraph, s: VertexSet) -> list[tuple[int, int]]:
    """Arcs leaving the vertex set ``s``."""
    _check_proper(g, s)
    outside = g.full_mask() & ~s
    return [(u, v) for u in bits(s) for v in bits(g.out_mask[u] & outside)]


def in_boundary(g: OrientedGraph, s: VertexSet) -> list[tuple[int, int]]:
    """Arcs entering the vertex set ``s``."""
    _check_proper(g, s)
    outside = g.full_mask() & ~s
    return [(u, v) for v in bits(s) for u in bits(g.in_mask[v] & outside)]


def _check_proper(g: OrientedGraph, s: VertexSet) -> None:
    if s == 0:
        raise ValueError("boundary of empty set")
    if s == g.full_mask():
        raise ValueError("boundary of full vertex set")
    if s & ~g.full_mask():
        raise ValueError("vertex set exceeds graph order")
