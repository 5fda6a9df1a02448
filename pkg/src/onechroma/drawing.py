"""Combinatorial 1-planar drawings and their planarization.

A drawing is a rotation system plus a list of crossing pairs. At each
original vertex the rotation lists darts: an ``int`` for an uncrossed edge
toward that neighbor, or a :class:`CrossRef` for the segment of a crossed
edge running toward its crossing point.

Planarized vertex ids are ``0..n-1`` for the original vertices followed by
``n + i`` for crossing ``i``. Faces are traced with the rule: the dart after
``u -> w`` is ``w -> succ_w(u)``, where ``succ_w`` is the cyclic successor
in the rotation at ``w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .graph import Edge, Graph, norm_edge


class CrossRef(NamedTuple):
    """A dart pointing at the crossing on the (crossed) edge ``{a, b}``."""

    a: int
    b: int

    @property
    def edge(self) -> Edge:
        return norm_edge(self.a, self.b)


Token = Union[int, CrossRef]


@dataclass(frozen=True)
class CrossingPair:
    first: Edge
    second: Edge
    orientation: int = 0

    def endpoints(self) -> tuple[int, int, int, int]:
        return (*self.first, *self.second)

    def rotation(self) -> tuple[int, int, int, int]:
        """Cyclic order of the original endpoints around the crossing point."""
        a, b = self.first
        c, d = self.second
        return (a, c, b, d) if self.orientation == 0 else (a, d, b, c)


@dataclass(frozen=True)
class OnePlanarDrawing:
    graph: Graph
    crossings: tuple[CrossingPair, ...]
    rotations: tuple[tuple[Token, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "rotations", tuple(tuple(r) for r in self.rotations))

    def crossed_edges(self) -> dict[Edge, int]:
        """Map each crossed edge to the index of its crossing pair."""
        out: dict[Edge, int] = {}
        for i, cp in enumerate(self.crossings):
            out.setdefault(norm_edge(*cp.first), i)
            out.setdefault(norm_edge(*cp.second), i)
        return out

    def uncrossed_edges(self) -> list[Edge]:
        crossed = self.crossed_edges()
        return [e for e in self.graph.edges if e not in crossed]


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def __str__(self):
        if self.ok:
            return "OK"
        return "\n".join(str(v) for v in self.violations)


class InvalidDrawingError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(f"invalid drawing:\n{report}")
        self.report = report


@dataclass(frozen=True)
class PlanarizedGraph:
    """The associated plane graph of a drawing.

    ``faces`` holds each face as the cyclic list of vertices met along its
    boundary walk; a vertex appears once per incidence.
    """

    base: OnePlanarDrawing
    rotations: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def n_original(self) -> int:
        return self.base.graph.n

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def is_crossing(self, v: int) -> bool:
        return v >= self.n_original

    def crossing_vertices(self) -> range:
        return range(self.n_original, self.num_vertices)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def edges(self) -> list[Edge]:
        return sorted({norm_edge(u, w) for u, rot in enumerate(self.rotations) for w in rot})

    def faces_at(self, v: int) -> list[int]:
        """Indices of distinct faces whose boundary contains ``v``."""
        return [i for i, f in enumerate(self.faces) if v in f]


def _succ_map(rotations) -> list[dict[int, int]]:
    succ = []
    for rot in rotations:
        m = {}
        k = len(rot)
        for i, w in enumerate(rot):
            m[w] = rot[(i + 1) % k]
        succ.append(m)
    return succ


def trace_faces(rotations) -> list[tuple[int, ...]]:
    """Decompose all darts of a rotation system into face walks.

    Walks start from the smallest unvisited dart in ``(u, w)`` order, so the
    output is deterministic. An edgeless single vertex yields one empty face.
    """
    succ = _succ_map(rotations)
    darts = sorted((u, w) for u, rot in enumerate(rotations) for w in rot)
    seen = set()
    faces = []
    for start in darts:
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            u, w = d
            walk.append(u)
            try:
                d = (w, succ[w][u])
            except (KeyError, IndexError):
                raise ValueError(f"dart {u}->{w} has no reverse dart") from None
        if d != start:
            raise ValueError(f"face walk from {start} does not close; rotation system is inconsistent")
        faces.append(tuple(walk))
    if not darts and len(rotations) == 1:
        faces.append(())
    return faces


def _planar_rotations(d: OnePlanarDrawing) -> list[tuple[int, ...]]:
    n = d.graph.n
    crossed = d.crossed_edges()
    rots = []
    for u in range(n):
        row = []
        for t in d.rotations[u] if u < len(d.rotations) else ():
            if isinstance(t, CrossRef):
                row.append(n + crossed[t.edge])
            else:
                row.append(t)
        rots.append(tuple(row))
    for cp in d.crossings:
        rots.append(cp.rotation())
    return rots


def _structural_violations(d: OnePlanarDrawing) -> list[Violation]:
    g = d.graph
    out: list[Violation] = []
    times_crossed: dict[Edge, int] = {}
    for i, cp in enumerate(d.crossings):
        e1, e2 = norm_edge(*cp.first), norm_edge(*cp.second)
        for e in (e1, e2):
            if not g.has_edge(*e):
                out.append(Violation("unknown edge", f"crossing {i} names {e}, which is not an edge"))
            times_crossed[e] = times_crossed.get(e, 0) + 1
        if e1 == e2:
            out.append(Violation("self crossing", f"crossing {i} pairs edge {e1} with itself"))
        elif len(set(cp.endpoints())) != 4:
            out.append(Violation("shared endpoint", f"crossing {i} pairs {e1} and {e2}"))
        if cp.orientation not in (0, 1):
            out.append(Violation("bad orientation", f"crossing {i} has orientation {cp.orientation}"))
    for e, k in sorted(times_crossed.items()):
        if k > 1:
            out.append(Violation("edge crossed twice", f"edge {e} appears in {k} crossing pairs"))
    if out:
        return out

    if len(d.rotations) != g.n:
        out.append(Violation("rotation count", f"{len(d.rotations)} rotations for {g.n} vertices"))
        return out
    crossed = d.crossed_edges()
    for u in range(g.n):
        rot = d.rotations[u]
        if len(rot) != g.degree(u):
            out.append(Violation(
                "rotation dart count",
                f"vertex {u} lists {len(rot)} darts but has degree {g.degree(u)}",
            ))
        seen = set()
        for t in rot:
            if isinstance(t, CrossRef):
                e = t.edge
                if u not in e or e not in crossed:
                    out.append(Violation("bad dart", f"vertex {u}: z({t.a} {t.b}) is not a crossed edge at {u}"))
                    continue
            else:
                e = norm_edge(u, t)
                if not (0 <= t < g.n) or not g.has_edge(u, t):
                    out.append(Violation("bad dart", f"vertex {u}: {t} is not a neighbor"))
                    continue
                if e in crossed:
                    out.append(Violation("bad dart", f"vertex {u}: edge {e} is crossed, dart must be z({e[0]} {e[1]})"))
                    continue
            if e in seen:
                out.append(Violation("bad dart", f"vertex {u}: edge {e} listed twice"))
            seen.add(e)
    return out


def validate_drawing(d: OnePlanarDrawing) -> ValidationReport:
    out = _structural_violations(d)
    if out:
        return ValidationReport(tuple(out))

    g = d.graph
    n = g.n
    rots = _planar_rotations(d)
    for z in range(n, len(rots)):
        for w in rots[z]:
            if w >= n:
                out.append(Violation("adjacent crossings", f"crossing vertices {z} and {w} are adjacent"))
    if not g.is_connected():
        out.append(Violation("disconnected", f"{len(g.components())} components"))
        return ValidationReport(tuple(out))

    try:
        faces = trace_faces(rots)
    except ValueError as exc:
        out.append(Violation("euler", str(exc)))
        return ValidationReport(tuple(out))
    v_x = len(rots)
    e_x = sum(len(r) for r in rots) // 2
    f_x = len(faces)
    if v_x - e_x + f_x != 2:
        out.append(Violation(
            "euler",
            f"V - E + F = {v_x} - {e_x} + {f_x} = {v_x - e_x + f_x} != 2 (not a sphere embedding)",
        ))
    is_tree = g.num_edges == n - 1
    if n >= 3 and not is_tree:
        for i, f in enumerate(faces):
            if len(f) < 3:
                out.append(Violation("degenerate face", f"face {i} {list(f)} has degree {len(f)}"))
    return ValidationReport(tuple(out))


def planarize(d: OnePlanarDrawing) -> PlanarizedGraph:
    report = validate_drawing(d)
    if not report.ok:
        raise InvalidDrawingError(report)
    rots = _planar_rotations(d)
    return PlanarizedGraph(base=d, rotations=tuple(rots), faces=tuple(trace_faces(rots)))


def face_degrees(p: PlanarizedGraph) -> list[int]:
    return sorted(len(f) for f in p.faces)


def _require_original(p: PlanarizedGraph, v: int) -> None:
    if not (0 <= v < p.num_vertices):
        raise ValueError(f"vertex {v} out of range")
    if p.is_crossing(v):
        raise ValueError(f"vertex {v} is a crossing vertex; quantity is defined for original vertices only")


def fk_count(p: PlanarizedGraph, v: int, k: int) -> int:
    """Number of distinct faces of degree ``k`` incident to ``v``."""
    _require_original(p, v)
    return sum(1 for f in p.faces if len(f) == k and v in f)


def f3_count(p: PlanarizedGraph, v: int) -> int:
    return fk_count(p, v, 3)


def nc_count(p: PlanarizedGraph, v: int) -> int:
    _require_original(p, v)
    return sum(1 for w in p.rotations[v] if p.is_crossing(w))


def crossing_free_drawing(g: Graph, rotations) -> OnePlanarDrawing:
    return OnePlanarDrawing(graph=g, crossings=(), rotations=tuple(tuple(r) for r in rotations))


def orientation_for(first: Edge, second: Edge, cyclic: tuple[int, ...]) -> Optional[int]:
    """Orientation bit whose derived crossing rotation matches ``cyclic``."""
    for o in (0, 1):
        rot = CrossingPair(first, second, o).rotation()
        k = rot.index(cyclic[0]) if cyclic[0] in rot else -1
        if k >= 0 and tuple(rot[k:] + rot[:k]) == tuple(cyclic):
            return o
    return None


def drawing_from_planar_rotations(n: int, rotations) -> OnePlanarDrawing:
    """Rebuild a drawing from a planarized rotation system.

    Vertices ``>= n`` must be crossing vertices of degree 4 whose rotation
    alternates between the two crossed edges.
    """
    edges = set()
    pairs = []
    zmap: dict[int, tuple[Edge, Edge]] = {}
    for z in range(n, len(rotations)):
        rot = tuple(rotations[z])
        if len(rot) != 4:
            raise ValueError(f"crossing vertex {z} has degree {len(rot)}")
        e1 = norm_edge(rot[0], rot[2])
        e2 = norm_edge(rot[1], rot[3])
        first, second = sorted((e1, e2))
        o = orientation_for(first, second, rot)
        if o is None:
            raise ValueError(f"crossing vertex {z}: rotation {rot} does not interleave its edges")
        zmap[z] = (first, second)
        pairs.append((first, second, o))
        edges.update((first, second))
    for u in range(n):
        for w in rotations[u]:
            if w < n:
                edges.add(norm_edge(u, w))
    g = Graph(n, edges)
    # sort crossings canonically and renumber
    order = sorted(range(len(pairs)), key=lambda i: pairs[i][:2])
    crossings = tuple(CrossingPair(*pairs[i]) for i in order)
    rots = []
    for u in range(n):
        row = []
        for w in rotations[u]:
            if w < n:
                row.append(w)
            else:
                first, second = zmap[w]
                e = first if u in first else second
                row.append(CrossRef(*e))
        rots.append(tuple(row))
    return OnePlanarDrawing(graph=g, crossings=crossings, rotations=tuple(rots))
