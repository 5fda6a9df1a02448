"""Simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional


Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """An immutable simple graph with vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``; neighbor
    tuples are kept in ascending id order so that every iteration over the
    graph is deterministic.
    """

    __slots__ = ("n", "edges", "adjacency", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self._edge_set = frozenset(seen)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, e={len(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = norm_edge(u, v)
        if e not in self._edge_set:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.n, [f for f in self.edges if f != e])

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(extra))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.component_of(0)) == self.n

    def component_of(self, v: int) -> set[int]:
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for v in range(self.n):
            if v not in seen:
                comp = self.component_of(v)
                seen |= comp
                out.append(sorted(comp))
        return out

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def is_triangle_free(g: Graph) -> bool:
    adj = [set(a) for a in g.adjacency]
    for u, v in g.edges:
        if adj[u] & adj[v]:
            return False
    return True


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    adj = [set(a) for a in g.adjacency]
    for u, v in g.edges:
        common = adj[u] & adj[v]
        if common:
            return (u, v, min(common))
    return None


def is_triangle_free_bruteforce(g: Graph) -> bool:
    """O(n^3) scan over vertex triples; used as an oracle in tests."""
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            return False
    return True


def is_bipartite(g: Graph) -> tuple[bool, Optional[list[int]]]:
    """BFS two-coloring. Returns ``(True, sides)`` or ``(False, None)``."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False, None
    return True, side


@dataclass(frozen=True)
class SizeBoundReport:
    n: int
    e: int
    triangle_free: bool
    general_bound: int
    general_ok: bool
    general_slack: int
    triangle_free_bound: Optional[int]
    triangle_free_ok: Optional[bool]
    triangle_free_slack: Optional[int]

    @property
    def ok(self) -> bool:
        return self.general_ok and self.triangle_free_ok is not False


def check_size_bounds(g: Graph, triangle_free: bool) -> SizeBoundReport:
    """Compare e(G) against 4n-8 and, for triangle-free inputs, 3n-6.

    Report-only: a violation means the caller's 1-planarity claim is wrong.
    """
    n, e = g.n, g.num_edges
    gen = 4 * n - 8
    tf = 3 * n - 6 if triangle_free else None
    return SizeBoundReport(
        n=n,
        e=e,
        triangle_free=triangle_free,
        general_bound=gen,
        general_ok=e <= gen,
        general_slack=gen - e,
        triangle_free_bound=tf,
        triangle_free_ok=None if tf is None else e <= tf,
        triangle_free_slack=None if tf is None else tf - e,
    )
