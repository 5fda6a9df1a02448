"""Curated drawings built from straight-line coordinates.

Rotations come from sorting edge directions by angle and crossings from
segment intersection, so these drawings do not depend on the generator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .drawing import CrossingPair, CrossRef, OnePlanarDrawing, orientation_for
from .graph import Graph, norm_edge


def _orient(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _segment_crossing(p1, p2, p3, p4):
    """Proper intersection point of two segments, or None."""
    d1 = _orient(p3, p4, p1)
    d2 = _orient(p3, p4, p2)
    d3 = _orient(p1, p2, p3)
    d4 = _orient(p1, p2, p4)
    if d1 * d2 < 0 and d3 * d4 < 0:
        t = Fraction(d1) / Fraction(d1 - d2)
        return (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
    return None


def _angle(src, dst):
    return math.atan2(float(dst[1] - src[1]), float(dst[0] - src[0]))


def from_coordinates(n: int, edges, pos) -> OnePlanarDrawing:
    """Straight-line drawing with vertex ``i`` at ``pos[i]``.

    Integer (or Fraction) coordinates keep intersection tests exact. Raises
    if an edge is crossed more than once.
    """
    g = Graph(n, edges)
    pos = [tuple(Fraction(c) for c in p) for p in pos]
    found = []
    for e1, e2 in combinations(g.edges, 2):
        if set(e1) & set(e2):
            continue
        pt = _segment_crossing(pos[e1[0]], pos[e1[1]], pos[e2[0]], pos[e2[1]])
        if pt is not None:
            found.append((e1, e2, pt))
    count = {}
    for e1, e2, _ in found:
        count[e1] = count.get(e1, 0) + 1
        count[e2] = count.get(e2, 0) + 1
    over = sorted(e for e, k in count.items() if k > 1)
    if over:
        raise ValueError(f"edges crossed more than once: {over}")
    crossings = []
    for e1, e2, pt in sorted(found):
        ends = [e1[0], e1[1], e2[0], e2[1]]
        ccw = tuple(sorted(ends, key=lambda v: _angle(pt, pos[v])))
        k = ccw.index(e1[0])
        crossings.append(CrossingPair(e1, e2, orientation_for(e1, e2, ccw[k:] + ccw[:k])))
    crossed = set(count)
    rots = []
    for u in range(n):
        nbrs = sorted(g.adjacency[u], key=lambda w: _angle(pos[u], pos[w]))
        rots.append(tuple(CrossRef(*norm_edge(u, w)) if norm_edge(u, w) in crossed else w for w in nbrs))
    return OnePlanarDrawing(graph=g, crossings=tuple(crossings), rotations=tuple(rots))


def _circle(n, radius=1000):
    # rounded to integers; convex position is preserved at this radius
    return [
        (round(radius * math.cos(2 * math.pi * i / n)), round(radius * math.sin(2 * math.pi * i / n)))
        for i in range(n)
    ]


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def hexx() -> OnePlanarDrawing:
    """C6 with the chords {0,3} and {1,4} crossing once."""
    return from_coordinates(6, cycle_edges(6) + [(0, 3), (1, 4)], _circle(6))


def cycle(n: int) -> OnePlanarDrawing:
    return from_coordinates(n, cycle_edges(n), _circle(n))


def path(n: int) -> OnePlanarDrawing:
    return from_coordinates(n, [(i, i + 1) for i in range(n - 1)], [(i, 0) for i in range(n)])


def single_edge() -> OnePlanarDrawing:
    return path(2)


def star(k: int) -> OnePlanarDrawing:
    pos = [(0, 0)] + _circle(k)
    return from_coordinates(k + 1, [(0, i) for i in range(1, k + 1)], pos)


def cube() -> OnePlanarDrawing:
    outer = [(-4, -4), (4, -4), (4, 4), (-4, 4)]
    inner = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
    edges = cycle_edges(4) + [(4 + a, 4 + b) for a, b in cycle_edges(4)] + [(i, i + 4) for i in range(4)]
    return from_coordinates(8, edges, outer + inner)


def k4() -> OnePlanarDrawing:
    pos = [(0, 10), (-9, -5), (9, -5), (0, 0)]
    return from_coordinates(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], pos)


def k23() -> OnePlanarDrawing:
    pos = [(0, 4), (0, -4), (-3, 0), (0, 0), (3, 0)]
    return from_coordinates(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)], pos)


def octagon_two_crossings() -> OnePlanarDrawing:
    """C8 with crossing chord pairs {0,3}x{1,4} and {0,5}x{4,7}."""
    return from_coordinates(8, cycle_edges(8) + [(0, 3), (1, 4), (0, 5), (4, 7)], _circle(8))


def lemma2_case1_witness() -> OnePlanarDrawing:
    """A 4-cycle drawn with two crossing sides.

    Vertex 0 has degree 2 and lies on a 3-face with the crossing, which a
    crossing-minimal drawing cannot have.
    """
    pos = [(0, 0), (2, 0), (2, 2), (0, 2)]
    return from_coordinates(4, [(0, 1), (0, 2), (1, 3), (2, 3)], pos)


def two_triangles() -> OnePlanarDrawing:
    pos = [(0, 0), (2, 0), (1, 2), (10, 0), (12, 0), (11, 2)]
    return from_coordinates(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], pos)


def petersen() -> Graph:
    outer = cycle_edges(5)
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star_graph(k: int) -> Graph:
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, cycle_edges(n))


# name -> builder; every entry is triangle-free and passes validation
CURATED = {
    "hexx": hexx,
    "c4": lambda: cycle(4),
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "c8": lambda: cycle(8),
    "cube": cube,
    "star7": lambda: star(7),
    "p3": lambda: path(3),
    "edge": single_edge,
    "k23": k23,
    "octx2": octagon_two_crossings,
}

# shipped alongside CURATED but outside the triangle-free set
EXTRA = {
    "k4": k4,
    "lemma2_witness": lemma2_case1_witness,
    "two_triangles": two_triangles,
}
