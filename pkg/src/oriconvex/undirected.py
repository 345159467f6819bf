"""Simple undirected graphs: inputs for orientation enumeration and reductions."""

from __future__ import annotations

from typing import Iterable, Sequence

from .digraph import OrientedGraph, bits


class UndirectedGraph:
    """A simple loop-free graph with a canonical sorted edge list."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        seen: set[tuple[int, int]] = set()
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of vertex range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in seen:
                continue
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.adj = tuple(adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen == (1 << self.n) - 1

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in bits(self.adj[v]):
                    if color[u] < 0:
                        color[u] = color[v] ^ 1
                        stack.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def has_bridge(self) -> bool:
        """True iff some edge disconnects the graph (not 2-edge-connected)."""
        n = self.n
        disc = [-1] * n
        low = [0] * n
        found = False

        def dfs(root: int) -> None:
            nonlocal found
            time = 0
            stack: list[tuple[int, int, list[int]]] = [
                (root, -1, list(bits(self.adj[root])))
            ]
            disc[root] = low[root] = time
            time += 1
            while stack:
                v, parent, it = stack[-1]
                if it:
                    u = it.pop()
                    if u == parent:
                        # skip one parent edge occurrence (simple graph)
                        parent = -2
                        stack[-1] = (v, parent, it)
                        continue
                    if disc[u] < 0:
                        disc[u] = low[u] = time
                        time += 1
                        stack.append((u, v, list(bits(self.adj[u]))))
                    else:
                        low[v] = min(low[v], disc[u])
                else:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        low[p] = min(low[p], low[v])
                        if low[v] > disc[p]:
                            found = True

        for s in range(n):
            if disc[s] < 0:
                dfs(s)
        return found

    def orient(self, direction_bits: int) -> OrientedGraph:
        """Orient edge i as (u,v) when bit i is 0, as (v,u) when it is 1."""
        arcs = []
        for i, (u, v) in enumerate(self.edges):
            arcs.append((v, u) if direction_bits >> i & 1 else (u, v))
        return OrientedGraph(self.n, arcs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={list(self.edges)})"


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> UndirectedGraph:
    return UndirectedGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def max_clique_size(g: UndirectedGraph) -> int:
    """Brute-force clique number; fine for the desk-scale reduction inputs."""
    return max(len(c) for c in all_cliques(g))


def all_cliques(g: UndirectedGraph) -> list[tuple[int, ...]]:
    """Every clique of ``g`` (including singletons), lexicographically sorted."""
    cliques: list[tuple[int, ...]] = []

    def extend(current: list[int], candidates: int) -> None:
        if current:
            cliques.append(tuple(current))
        for v in bits(candidates):
            extend(current + [v], candidates & g.adj[v] & ~((1 << (v + 1)) - 1))

    extend([], (1 << g.n) - 1)
    return sorted(cliques)


def connected_induced_subsets(g: UndirectedGraph, max_size: int) -> list[int]:
    """All connected induced vertex subsets of size <= max_size, as bitmasks."""
    result: set[int] = set()
    frontier = {1 << v for v in range(g.n)}
    result |= frontier
    for _ in range(max_size - 1):
        nxt = set()
        for s in frontier:
            reach = 0
            for v in bits(s):
                reach |= g.adj[v]
            for v in bits(reach & ~s):
                nxt.add(s | 1 << v)
        nxt -= result
        result |= nxt
        frontier = nxt
    return sorted(result)


def graphs_connected_upto(max_n: int, min_n: int = 1) -> list[UndirectedGraph]:
    """Non-isomorphic connected graphs with min_n..max_n vertices.

    Brute-force canonicalization by vertex permutation; only meant for the
    small orders used in reduction tests (n <= 6).
    """
    from itertools import combinations, permutations

    out: list[UndirectedGraph] = []
    for n in range(min_n, max_n + 1):
        pairs = list(combinations(range(n), 2))
        perms = list(permutations(range(n)))
        seen_canon: set[frozenset[tuple[int, int]]] = set()
        for picks in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if picks >> i & 1]
            if len(edges) < n - 1:
                continue
            g = UndirectedGraph(n, edges)
            if not g.is_connected():
                continue
            canon = min(
                frozenset(
                    (min(p[u], p[v]), max(p[u], p[v])) for u, v in edges
                )
                for p in perms
            )
            if canon in seen_canon:
                continue
            seen_canon.add(canon)
            out.append(g)
    return out
