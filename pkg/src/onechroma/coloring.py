"""Proper edge colorings.

``vizing_color`` is the Misra-Gries fan/Kempe-chain procedure (at most
Delta+1 colors). ``exact_chromatic_index`` decides whether Delta colors
suffice by branch and bound; by Vizing's theorem the answer is otherwise
Delta+1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .graph import Edge, Graph, norm_edge

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class EdgeColoring:
    colors: dict[Edge, int]
    k: int

    @classmethod
    def from_assignment(cls, colors: dict) -> "EdgeColoring":
        """Build a coloring, compacting the used colors onto ``0..k-1``."""
        used = sorted(set(colors.values()))
        remap = {c: i for i, c in enumerate(used)}
        return cls({norm_edge(*e): remap[c] for e, c in colors.items()}, len(used))


class ColorClass(str, enum.Enum):
    ONE = "ONE"
    TWO = "TWO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ClassVerdict:
    chromatic_index: Optional[int]
    klass: ColorClass
    witness: Optional[EdgeColoring]
    max_degree: int
    lower: int
    upper: int
    nodes: int = 0

    @property
    def known(self) -> bool:
        return self.klass is not ColorClass.UNKNOWN


class CriticalVerdict(str, enum.Enum):
    CRITICAL = "CRITICAL"
    NOT_CRITICAL = "NOT_CRITICAL"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class CriticalityReport:
    verdict: CriticalVerdict
    chromatic_index: Optional[int]
    failing_edge: Optional[Edge] = None
    reason: str = ""


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class ColoringCheck:
    ok: bool
    conflicts: list = field(default_factory=list)


def verify_coloring(g: Graph, c: EdgeColoring) -> ColoringCheck:
    """Check properness. Each conflicting pair of adjacent edges is listed once."""
    domain = set(c.colors)
    if domain != set(g.edges):
        missing = sorted(set(g.edges) - domain)
        extra = sorted(domain - set(g.edges))
        raise ValueError(f"coloring domain mismatch: missing {missing}, extra {extra}")
    conflicts = []
    for v in range(g.n):
        inc = [norm_edge(v, w) for w in g.adjacency[v]]
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                if c.colors[inc[i]] == c.colors[inc[j]]:
                    conflicts.append((inc[i], inc[j]))
    return ColoringCheck(not conflicts, sorted(conflicts))


# ---------------------------------------------------------------------------
# Misra-Gries


class _Partial:
    def __init__(self, g: Graph):
        self.color: dict[Edge, int] = {}
        self.at: list[dict[int, int]] = [dict() for _ in range(g.n)]

    def set(self, u, v, c):
        self.color[norm_edge(u, v)] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def clear(self, u, v):
        c = self.color.pop(norm_edge(u, v))
        del self.at[u][c]
        del self.at[v][c]

    def get(self, u, v):
        return self.color.get(norm_edge(u, v))

    def free(self, v, c) -> bool:
        return c not in self.at[v]

    def first_free(self, v, palette) -> int:
        for c in range(palette):
            if c not in self.at[v]:
                return c
        raise AssertionError(f"no free color at {v}")


def _max_fan(g: Graph, pc: _Partial, u: int, v: int, palette: int) -> list[int]:
    fan = [v]
    in_fan = {v}
    while True:
        last = fan[-1]
        for c in range(palette):
            if c in pc.at[last]:
                continue
            w = pc.at[u].get(c)
            if w is not None and w not in in_fan:
                fan.append(w)
                in_fan.add(w)
                break
        else:
            return fan


def _invert_path(pc: _Partial, u: int, c: int, d: int) -> None:
    """Swap colors c and d along the alternating path leaving ``u`` on color d."""
    path = []
    x, cur = u, d
    while cur in pc.at[x]:
        y = pc.at[x][cur]
        path.append((x, y, cur))
        x = y
        cur = c if cur == d else d
    for x, y, _ in path:
        pc.clear(x, y)
    for x, y, col in path:
        pc.set(x, y, c if col == d else d)


def vizing_color(g: Graph) -> EdgeColoring:
    if g.num_edges == 0:
        raise ValueError("graph has no edges to color")
    palette = g.max_degree() + 1
    pc = _Partial(g)
    for u, v in g.edges:
        fan = _max_fan(g, pc, u, v, palette)
        c = pc.first_free(u, palette)
        d = pc.first_free(fan[-1], palette)
        if c != d:
            _invert_path(pc, u, c, d)
        # first fan prefix that is still a fan and ends at a vertex missing d
        w_idx = None
        for i, w in enumerate(fan):
            if i > 0:
                col = pc.get(u, w)
                if col is None or not pc.free(fan[i - 1], col):
                    break
            if pc.free(w, d):
                w_idx = i
                break
        assert w_idx is not None, "Misra-Gries invariant broken"
        for i in range(w_idx):
            col = pc.get(u, fan[i + 1])
            pc.clear(u, fan[i + 1])
            pc.set(u, fan[i], col)
        pc.set(u, fan[w_idx], d)
    return EdgeColoring.from_assignment(pc.color)


# ---------------------------------------------------------------------------
# exact search


class _BudgetExhausted(Exception):
    pass


def _overfull(g: Graph, k: int) -> bool:
    """Some component has more edges than k matchings can cover."""
    for comp in g.components():
        m = sum(len(g.adjacency[v]) for v in comp) // 2
        if m > k * (len(comp) // 2):
            return True
    return False


def _search_k_coloring(g: Graph, k: int, budget: int):
    """Find a proper k-edge-coloring or prove none exists.

    Returns ``(coloring | None, nodes)``; raises ``_BudgetExhausted``.
    """
    edges = list(g.edges)
    m = len(edges)
    n = g.n
    full = (1 << k) - 1
    inc: list[list[int]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)
    deg = [len(a) for a in g.adjacency]
    weight = [deg[u] + deg[v] for u, v in edges]
    used = [0] * n
    color = [-1] * m
    nodes = 0

    def assign(i, c):
        u, v = edges[i]
        color[i] = c
        used[u] |= 1 << c
        used[v] |= 1 << c

    def unassign(i):
        u, v = edges[i]
        c = color[i]
        color[i] = -1
        used[u] &= ~(1 << c)
        used[v] &= ~(1 << c)

    def avail(i):
        u, v = edges[i]
        return full & ~(used[u] | used[v])

    def hall_ok(w):
        # uncolored edges at w need distinct colors from the union of their options
        union = 0
        cnt = 0
        for j in inc[w]:
            if color[j] < 0:
                a = avail(j)
                if not a:
                    return False
                union |= a
                cnt += 1
        return bin(union).count("1") >= cnt

    # symmetry breaking: the edges at a max-degree vertex take 0..deg-1
    hub = max(range(n), key=lambda v: (deg[v], -v))
    for c, i in enumerate(sorted(inc[hub], key=lambda i: edges[i])):
        assign(i, c)
    for w in range(n):
        if not hall_ok(w):
            return None, nodes

    def pick():
        best = -1
        best_key = None
        for i in range(m):
            if color[i] < 0:
                a = avail(i)
                key = (bin(a).count("1"), -weight[i], i)
                if best_key is None or key < best_key:
                    best, best_key = i, key
                    if key[0] == 0:
                        break
        return best, best_key

    def solve():
        nonlocal nodes
        i, key = pick()
        if i < 0:
            return True
        if key[0] == 0:
            return False
        a = avail(i)
        u, v = edges[i]
        c = 0
        while a:
            if a & 1:
                nodes += 1
                if nodes > budget:
                    raise _BudgetExhausted(nodes)
                assign(i, c)
                touched = set(g.adjacency[u]) | set(g.adjacency[v])
                if all(hall_ok(w) for w in touched) and solve():
                    return True
                unassign(i)
            a >>= 1
            c += 1
        return False

    if solve():
        return {edges[i]: color[i] for i in range(m)}, nodes
    return None, nodes


def exact_chromatic_index(g: Graph, budget: int = DEFAULT_BUDGET) -> ClassVerdict:
    delta = g.max_degree()
    if g.num_edges == 0:
        return ClassVerdict(0, ColorClass.ONE, EdgeColoring({}, 0), 0, 0, 0)
    viz = vizing_color(g)
    if viz.k == delta:
        return ClassVerdict(delta, ColorClass.ONE, viz, delta, delta, delta)
    if _overfull(g, delta):
        return ClassVerdict(delta + 1, ColorClass.TWO, viz, delta, delta + 1, delta + 1)
    try:
        found, nodes = _search_k_coloring(g, delta, budget)
    except _BudgetExhausted as exc:
        return ClassVerdict(None, ColorClass.UNKNOWN, viz, delta, delta, delta + 1, exc.args[0])
    if found is not None:
        return ClassVerdict(delta, ColorClass.ONE, EdgeColoring.from_assignment(found), delta, delta, delta, nodes)
    return ClassVerdict(delta + 1, ColorClass.TWO, viz, delta, delta + 1, delta + 1, nodes)


def is_critical(g: Graph, budget: int = DEFAULT_BUDGET) -> CriticalityReport:
    """Class 2 and every single-edge deletion lowers the chromatic index."""
    base = exact_chromatic_index(g, budget)
    if not base.known:
        return CriticalityReport(CriticalVerdict.UNKNOWN, None, reason="budget exhausted on G")
    if base.klass is ColorClass.ONE:
        return CriticalityReport(CriticalVerdict.NOT_CRITICAL, base.chromatic_index, reason="class ONE")
    for e in g.edges:
        sub = exact_chromatic_index(g.remove_edge(*e), budget)
        if not sub.known:
            return CriticalityReport(CriticalVerdict.UNKNOWN, base.chromatic_index, e, "budget exhausted on G - e")
        if sub.chromatic_index >= base.chromatic_index:
            return CriticalityReport(
                CriticalVerdict.NOT_CRITICAL, base.chromatic_index, e,
                f"chromatic index unchanged after deleting {e}",
            )
    return CriticalityReport(CriticalVerdict.CRITICAL, base.chromatic_index)
