"""Strong convexity spectra: exhaustive enumeration and closed forms.

Exhaustive mode enumerates every strong orientation of a graph (Robbins:
none exist when the graph has a bridge) and solves each one exactly.  The
orientation space is split by the first few edge bits into shards that can
run on a worker pool; the merge is a set union plus minimum-witness
selection, so results are deterministic and independent of worker count.
Reversal duality (con is invariant under arc reversal) optionally halves
the work.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any, Iterator

from .digraph import OrientedGraph, bits
from .solver import SUBSET_SCAN_LIMIT, _max_convex_closure, _max_convex_scan
from .digraph import interval_table
from .undirected import UndirectedGraph

DEFAULT_EDGE_CAP = 24


class EnumerationCapExceeded(ValueError):
    def __init__(self, edge_count: int, cap: int):
        super().__init__(
            f"{edge_count} edges means 2^{edge_count} = {1 << edge_count} "
            f"orientations, above the cap of 2^{cap}"
        )
        self.count = 1 << edge_count


@dataclass
class SpectrumReport:
    graph_id: str
    mode: str  # "exhaustive" or "constructive"
    achieved: set[int]
    witnesses: dict[int, OrientedGraph]
    total_orientations: int
    strong_orientations: int
    elapsed_s: float
    grid_witnesses: dict[int, Any] = field(default_factory=dict)

    def to_json_dict(self) -> dict[str, Any]:
        from .formats import digraph_to_dict

        return {
            "graph": self.graph_id,
            "mode": self.mode,
            "achieved": sorted(self.achieved),
            "witnesses": {
                str(v): digraph_to_dict(g) for v, g in sorted(self.witnesses.items())
            },
            "total_orientations": self.total_orientations,
            "strong_orientations": self.strong_orientations,
            "elapsed_ms": round(self.elapsed_s * 1000, 3),
        }


# ---- enumeration ------------------------------------------------------------


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def enumerate_strong_orientations(
    g: UndirectedGraph,
    edge_cap: int = DEFAULT_EDGE_CAP,
    fix_first_edge: bool = False,
) -> Iterator[OrientedGraph]:
    """Yield each strong orientation exactly once (Gray-code edge order).

    With ``fix_first_edge`` only orientations with the first edge in its
    canonical direction are produced; the rest are their arc reversals,
    which preserve con.
    """
    E = len(g.edges)
    if E > edge_cap:
        raise EnumerationCapExceeded(E, edge_cap)
    if g.n >= 2 and (not g.is_connected() or g.has_bridge()):
        return  # Robbins: no strong orientation exists
    top = 1 << (E - 1) if fix_first_edge else 1 << E
    for i in range(top):
        mask = _gray(i) << 1 if fix_first_edge else _gray(i)
        og = g.orient(mask)
        if _strong_masks(og.out_mask, og.in_mask, g.n):
            yield og


def _strong_masks(out: tuple[int, ...], inn: tuple[int, ...], n: int) -> bool:
    full = (1 << n) - 1
    for adj in (out, inn):
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        if seen != full:
            return False
    return True


def _solve_orientation(n: int, arcs: list[tuple[int, int]]) -> int:
    g = OrientedGraph.__new__(OrientedGraph)
    out = [0] * n
    inn = [0] * n
    for u, v in arcs:
        out[u] |= 1 << v
        inn[v] |= 1 << u
    g.n = n
    g.out_mask = tuple(out)
    g.in_mask = tuple(inn)
    g.labels = None
    t = interval_table(g)
    if n <= SUBSET_SCAN_LIMIT:
        return _max_convex_scan(g, t).bit_count()
    return _max_convex_closure(g, t).bit_count()


def _spectrum_shard(task: tuple) -> tuple[dict[int, int], int]:
    """Solve one shard: all orientations extending a fixed prefix of edge bits.

    Returns {con value: minimum direction-bits achieving it} and the number
    of strong orientations seen (reversal pairs counted twice when the
    symmetry reduction is on).
    """
    n, edges, split, prefix, symmetry = task
    E = len(edges)
    k = E - split
    full_bits = (1 << E) - 1
    found: dict[int, int] = {}
    strong = 0
    out = [0] * n
    inn = [0] * n
    for i in range(1 << k):
        mask = prefix | (_gray(i) << split)
        for idx in range(n):
            out[idx] = 0
            inn[idx] = 0
        for e, (u, v) in enumerate(edges):
            if mask >> e & 1:
                u, v = v, u
            out[u] |= 1 << v
            inn[v] |= 1 << u
        g = OrientedGraph.__new__(OrientedGraph)
        g.n = n
        g.out_mask = tuple(out)
        g.in_mask = tuple(inn)
        g.labels = None
        if not _strong_masks(g.out_mask, g.in_mask, n):
            continue
        t = interval_table(g)
        if n <= SUBSET_SCAN_LIMIT:
            con = _max_convex_scan(g, t).bit_count()
        else:
            con = _max_convex_closure(g, t).bit_count()
        if symmetry:
            strong += 2
            canonical = min(mask, full_bits ^ mask)
        else:
            strong += 1
            canonical = mask
        prev = found.get(con)
        if prev is None or canonical < prev:
            found[con] = canonical
    return found, strong


def exhaustive_spectrum(
    g: UndirectedGraph,
    graph_id: str = "",
    workers: int = 1,
    edge_cap: int = DEFAULT_EDGE_CAP,
    symmetry: bool = True,
) -> SpectrumReport:
    """Exact S_SC by enumeration of every strong orientation."""
    start = time.perf_counter()
    E = len(g.edges)
    if E > edge_cap:
        raise EnumerationCapExceeded(E, edge_cap)
    total = 1 << E
    merged: dict[int, int] = {}
    strong_total = 0
    if g.n < 2 or not g.is_connected() or g.has_bridge():
        tasks = []
    elif symmetry:
        # bit 0 is pinned to the canonical direction; shard on bits 1..s
        s = min(3, E - 1)
        tasks = [(g.n, g.edges, s + 1, p << 1, True) for p in range(1 << s)]
    else:
        s = min(4, E)
        tasks = [(g.n, g.edges, s, p, False) for p in range(1 << s)]
    if len(tasks) > 1 and workers > 1:
        with Pool(processes=workers) as pool:
            results = pool.map(_spectrum_shard, tasks)
    else:
        results = [_spectrum_shard(t) for t in tasks]
    for found, strong in results:
        strong_total += strong
        for con, bits_ in found.items():
            prev = merged.get(con)
            if prev is None or bits_ < prev:
                merged[con] = bits_
    witnesses = {con: g.orient(bits_) for con, bits_ in merged.items()}
    return SpectrumReport(
        graph_id=graph_id or f"graph-n{g.n}-e{E}",
        mode="exhaustive",
        achieved=set(merged),
        witnesses=witnesses,
        total_orientations=total,
        strong_orientations=strong_total,
        elapsed_s=time.perf_counter() - start,
    )


def convexity_spectrum_all(
    g: UndirectedGraph, edge_cap: int = DEFAULT_EDGE_CAP
) -> set[int]:
    """S_C: con over all orientations of g (utility, not only strong ones)."""
    E = len(g.edges)
    if E > edge_cap:
        raise EnumerationCapExceeded(E, edge_cap)
    if not g.is_connected():
        raise ValueError("convexity spectrum needs a connected graph")
    out: set[int] = set()
    for mask in range(1 << E):
        og = g.orient(mask)
        out.add(_solve_orientation(g.n, og.arcs()))
    return out


def con_minus(g: UndirectedGraph, edge_cap: int = DEFAULT_EDGE_CAP) -> int:
    return min(convexity_spectrum_all(g, edge_cap))


def con_plus(g: UndirectedGraph, edge_cap: int = DEFAULT_EDGE_CAP) -> int:
    return max(convexity_spectrum_all(g, edge_cap))


# ---- closed forms -----------------------------------------------------------


def theoretical_spectrum(n: int, m: int) -> set[int]:
    """The proven S_SC(P_n [] P_m); dispatches on m = min(n, m)."""
    if min(n, m) < 2:
        raise ValueError("grid spectra need n, m >= 2")
    n, m = max(n, m), min(n, m)
    if m == 2:
        return {1} | {2 * j for j in range(n // 2, n) if 2 * j != 2}
    if m == 3:
        return set(range(1, 3 * n - 2)) - {2, 3, 5, 7}
    if m == 4:
        return set(range(1, n * m - 3)) - {2, 3, 5}
    if m == 5:
        return set(range(1, n * m - 4)) - {2, 3, 5}
    return set(range(1, n * m - 5)) - {2, 3, 5}


def excluded_values(n: int, m: int) -> set[int]:
    """Values no strong orientation of the n x m grid can achieve."""
    if min(n, m) < 2:
        raise ValueError("grid spectra need n, m >= 2")
    nm = n * m
    out = {2, 3, 5, nm - 1}
    for i in (3, 4, 5, 6):
        if n >= i and m >= i:
            out.add(nm - (i - 1))
    return out


# ---- cross validation --------------------------------------------------------


@dataclass
class CrossValidationReport:
    n: int
    m: int
    mode: str
    ok: bool
    achieved: set[int]
    expected: set[int]
    excluded_hit: set[int]
    mismatches: list[str]
    report: SpectrumReport | None = None


def cross_validate(
    n: int,
    m: int,
    mode: str = "exhaustive",
    workers: int = 1,
    edge_cap: int = DEFAULT_EDGE_CAP,
) -> CrossValidationReport:
    """Check enumeration or construction output against the closed forms."""
    from .grids import GridSpec

    expected = theoretical_spectrum(n, m)
    excluded = excluded_values(n, m)
    mismatches: list[str] = []
    if mode == "exhaustive":
        rep = exhaustive_spectrum(
            GridSpec(n, m).underlying(),
            graph_id=f"P{n}xP{m}",
            workers=workers,
            edge_cap=edge_cap,
        )
        achieved = rep.achieved
        if achieved != expected:
            mismatches.append(
                f"exhaustive spectrum {sorted(achieved)} != theoretical {sorted(expected)}"
            )
    elif mode == "constructive":
        from .constructions import constructive_spectrum

        rep = constructive_spectrum(n, m)
        achieved = rep.achieved
        if not achieved <= expected:
            mismatches.append(
                f"constructive witnesses {sorted(achieved - expected)} outside theoretical set"
            )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    excluded_hit = achieved & excluded
    if excluded_hit:
        mismatches.append(f"excluded values achieved: {sorted(excluded_hit)}")
    return CrossValidationReport(
        n=n,
        m=m,
        mode=mode,
        ok=not mismatches,
        achieved=achieved,
        expected=expected,
        excluded_hit=excluded_hit,
        mismatches=mismatches,
        report=rep,
    )
