"""Exact convexity numbers with certificates.

Two solver regimes share the same contract:

* ``n <= 16``: a full subset scan in decreasing-size order with early-exit
  convexity checks; the first convex proper set found is a maximum one.
* larger graphs: lexicographic next-closure enumeration of the closure
  system of the hull operator, which only pays for convex sets that
  actually exist (the reduction instances have very few).

Structural pruning follows two facts about convex sets: in a strong
digraph every convex set of size >= 2 induces a strong subdigraph, and a
maximal convex set always has a weakly connected complement.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .digraph import (
    INF,
    IntervalTable,
    OrientedGraph,
    VertexSet,
    bits,
    classify_vertex,
    hull,
    interval_table,
    is_connected_underlying,
    is_convex,
    is_strong,
    is_strong_on,
    ORDINARY,
)

EXHAUSTIVE_MAX = "exhaustive-max"
MEMBERSHIP_ONLY = "membership-only"

SUBSET_SCAN_LIMIT = 16


class CertificationError(Exception):
    """A claimed convexity number was refuted.

    Carries the offending vertex set: for a refuted exhaustive-max claim, a
    proper convex set larger than claimed; for a refuted membership claim,
    the mask is None.
    """

    def __init__(self, message: str, violating: VertexSet | None = None):
        super().__init__(message)
        self.violating = violating


@dataclass(frozen=True)
class ConvexityCertificate:
    claimed: int
    witness: VertexSet
    evidence: str  # EXHAUSTIVE_MAX or MEMBERSHIP_ONLY
    elapsed_s: float

    def witness_vertices(self) -> list[int]:
        return list(bits(self.witness))

    def to_json_dict(self) -> dict:
        return {
            "claimed": self.claimed,
            "witness": self.witness_vertices(),
            "evidence": self.evidence,
            "elapsed_ms": round(self.elapsed_s * 1000, 3),
        }


@lru_cache(maxsize=8)
def _masks_by_size_desc(n: int) -> tuple[int, ...]:
    """All nonempty proper-candidate masks sorted by size descending, then value."""
    return tuple(
        sorted(range(1, 1 << n), key=lambda m: (-m.bit_count(), m))
    )


def _max_convex_scan(g: OrientedGraph, t: IntervalTable) -> VertexSet:
    """Maximum proper convex set by descending-size subset scan (n <= 16)."""
    n = g.n
    full = (1 << n) - 1
    tw = t.two_way
    strong = is_strong(g)
    adj = tuple(g.out_mask[v] | g.in_mask[v] for v in range(n))
    for s in _masks_by_size_desc(n):
        if s == full:
            continue
        # convexity first: with early exit this is the cheapest rejection
        outside = ~s
        ok = True
        for u in bits(s):
            row = tw[u]
            for v in bits(s):
                if row[v] & outside:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if strong and s.bit_count() >= 2 and not is_strong_on(g, s):
            continue
        comp = full & ~s
        start = (comp & -comp).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= comp & ~seen
            seen |= nxt
            frontier = nxt
        if seen != comp:
            # disconnected complement: not maximal, so not the maximum either
            continue
        return s
    raise AssertionError("no proper convex set found; singletons are always convex")


def _closure(g: OrientedGraph, t: IntervalTable, s: VertexSet) -> VertexSet:
    return s if s == 0 else hull(g, t, s)


def convex_sets(g: OrientedGraph, t: IntervalTable | None = None) -> Iterator[VertexSet]:
    """All convex sets (plus the empty set) in lectic next-closure order."""
    if t is None:
        t = interval_table(g)
    n = g.n
    full = (1 << n) - 1
    a = _closure(g, t, 0)
    yield a
    while a != full:
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                a &= ~bit
            else:
                b = _closure(g, t, a | bit)
                if not (b & ~a) & (bit - 1):
                    a = b
                    break
        else:  # pragma: no cover - full mask always terminates the walk
            return
        yield a


def _max_convex_closure(g: OrientedGraph, t: IntervalTable) -> VertexSet:
    """Maximum proper convex set via next-closure enumeration."""
    full = (1 << g.n) - 1
    best = 0
    best_size = 0
    for s in convex_sets(g, t):
        if s == 0 or s == full:
            continue
        size = s.bit_count()
        if size > best_size and is_connected_underlying(g, full & ~s):
            best, best_size = s, size
        elif size == best_size and 0 < s < best:
            best = s
    if best == 0:
        raise AssertionError("no proper convex set found")
    return best


def _require_solvable(g: OrientedGraph) -> None:
    if g.n < 2:
        raise ValueError("trivial digraph")
    if not is_connected_underlying(g):
        raise ValueError("underlying graph is disconnected")


def convexity_number(
    g: OrientedGraph, t: IntervalTable | None = None
) -> tuple[int, ConvexityCertificate]:
    """Exact con(g) with an exhaustive-max certificate.

    The witness is the lexicographically least maximum proper convex set.
    """
    _require_solvable(g)
    start = time.perf_counter()
    if t is None:
        t = interval_table(g)
    if g.n <= SUBSET_SCAN_LIMIT:
        witness = _max_convex_scan(g, t)
    else:
        witness = _max_convex_closure(g, t)
    cert = ConvexityCertificate(
        claimed=witness.bit_count(),
        witness=witness,
        evidence=EXHAUSTIVE_MAX,
        elapsed_s=time.perf_counter() - start,
    )
    return cert.claimed, cert


def max_convex_at_least(
    g: OrientedGraph, k: int, t: IntervalTable | None = None
) -> VertexSet | None:
    """Some proper convex set of size >= k, or None (decision problem)."""
    _require_solvable(g)
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"k={k} out of range 1..{g.n - 1}")
    if t is None:
        t = interval_table(g)
    full = (1 << g.n) - 1
    if g.n <= SUBSET_SCAN_LIMIT:
        strong = is_strong(g)
        for s in _masks_by_size_desc(g.n):
            if s == full:
                continue
            if s.bit_count() < k:
                return None  # masks are size-sorted: nothing big enough remains
            if strong and s.bit_count() >= 2 and not is_strong_on(g, s):
                continue
            if is_convex(g, t, s):
                return s
        return None
    best: VertexSet | None = None
    for s in convex_sets(g, t):
        if s and s != full and s.bit_count() >= k:
            if best is None or (s.bit_count(), -s) > (best.bit_count(), -best):
                best = s
    return best


def certify(
    g: OrientedGraph,
    claimed: int,
    mode: str = EXHAUSTIVE_MAX,
    t: IntervalTable | None = None,
) -> ConvexityCertificate:
    """Certify that con(g) equals (exhaustive-max) or reaches (membership) a claim."""
    if claimed < 1:
        raise ValueError("claimed convexity number must be at least 1")
    if mode not in (EXHAUSTIVE_MAX, MEMBERSHIP_ONLY):
        raise ValueError(f"unknown certification mode {mode!r}")
    _require_solvable(g)
    start = time.perf_counter()
    if t is None:
        t = interval_table(g)
    if mode == EXHAUSTIVE_MAX:
        con, cert = convexity_number(g, t)
        if con != claimed:
            raise CertificationError(
                f"claimed con={claimed} refuted: maximum proper convex set "
                f"{cert.witness_vertices()} has size {con}",
                violating=cert.witness,
            )
        return ConvexityCertificate(
            claimed, cert.witness, EXHAUSTIVE_MAX, time.perf_counter() - start
        )
    witness = _find_convex_of_size(g, t, claimed)
    if witness is None:
        raise CertificationError(
            f"membership claim refuted: no proper convex set of size {claimed}"
        )
    return ConvexityCertificate(
        claimed, witness, MEMBERSHIP_ONLY, time.perf_counter() - start
    )


def _find_convex_of_size(
    g: OrientedGraph, t: IntervalTable, size: int
) -> VertexSet | None:
    full = (1 << g.n) - 1
    if size >= g.n:
        return None
    if size == 1:
        return 1
    if g.n <= SUBSET_SCAN_LIMIT:
        strong = is_strong(g)
        for s in _masks_by_size_desc(g.n):
            if s.bit_count() != size:
                continue
            if strong and not is_strong_on(g, s):
                continue
            if is_convex(g, t, s):
                return s
        return None
    for s in convex_sets(g, t):
        if s != full and s.bit_count() == size:
            return s
    return None


@dataclass(frozen=True)
class NearOrderReport:
    """Cross-check of the two near-order theorems against the exact solver."""

    n: int
    con: int
    special_vertices: tuple[tuple[int, str], ...]
    near_order_equivalence: bool  # con = n-1 iff source/sink/transitive exists
    no_convexity_two: bool  # order >= 4 implies con != 2
    ok: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "ok", self.near_order_equivalence and self.no_convexity_two
        )


def near_order_checks(g: OrientedGraph) -> NearOrderReport:
    con, _ = convexity_number(g)
    special = tuple(
        (v, kind)
        for v in range(g.n)
        if (kind := classify_vertex(g, v)) != ORDINARY
    )
    equiv = (con == g.n - 1) == bool(special)
    no_two = not (g.n >= 4 and con == 2)
    return NearOrderReport(g.n, con, special, equiv, no_two)
