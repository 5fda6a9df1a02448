"""Seeded construction of triangle-free 1-planar drawings.

Instances start from a plane quadrangulation grown by splitting 4-faces
(bipartite, every face a 4-cycle). A crossing pair is two chords of one
face whose endpoints interleave along the boundary, so they cross exactly
once. Chords are rejected when their endpoints are adjacent or share a
neighbor, which keeps the graph triangle-free.
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .drawing import OnePlanarDrawing, drawing_from_planar_rotations, planarize, trace_faces
from .graph import Graph, is_bipartite, is_triangle_free

MAX_ATTEMPTS = 64


class Mode(str, enum.Enum):
    BIPARTITE = "bipartite"
    TRIANGLE_FREE = "triangle_free"


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n: int
    target_delta: int
    crossings: int = 0
    mode: Mode = Mode.BIPARTITE

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")
        if self.crossings < 0:
            raise ValueError("crossings must be >= 0")
        if self.target_delta > self.n - 1:
            raise ValueError(f"target_delta {self.target_delta} exceeds n - 1 = {self.n - 1}")


@dataclass(frozen=True)
class Instance:
    graph: Graph
    drawing: OnePlanarDrawing
    spec: GenSpec
    attempt: int
    crossings_inserted: int

    def metadata(self) -> dict:
        return {
            "seed": self.spec.seed,
            "mode": self.spec.mode.value,
            "n": self.graph.n,
            "edges": self.graph.num_edges,
            "target_delta": self.spec.target_delta,
            "delta": self.graph.max_degree(),
            "crossings": self.crossings_inserted,
            "attempt": self.attempt,
        }


class _Embedding:
    """Mutable planarized rotation system; vertex ids ``>= n`` are crossings."""

    def __init__(self, n: int, rotations):
        self.n = n
        self.rot: list[list[int]] = [list(r) for r in rotations]

    @classmethod
    def from_drawing(cls, d: OnePlanarDrawing) -> "_Embedding":
        p = planarize(d)
        return cls(d.graph.n, p.rotations)

    def to_drawing(self) -> OnePlanarDrawing:
        return drawing_from_planar_rotations(self.n, self.rot)

    def faces(self):
        return trace_faces(self.rot)

    def original_adjacency(self) -> list[set[int]]:
        """Adjacency of the underlying graph G (crossing segments joined)."""
        adj = [set() for _ in range(self.n)]
        for u in range(self.n):
            for w in self.rot[u]:
                if w < self.n:
                    adj[u].add(w)
                else:
                    z = self.rot[w]
                    adj[u].add(z[(z.index(u) + 2) % 4])
        return adj

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def _insert_in_corner(self, v: int, pred: int, new: int) -> None:
        # corner of the face at v entered from pred
        r = self.rot[v]
        r.insert(r.index(pred) + 1, new)

    def split_quad(self, face, i: int) -> int:
        """Put a new vertex inside 4-face ``face`` joined to face[i] and face[i+2]."""
        a, b, c, d = (face[(i + j) % 4] for j in range(4))
        x = len(self.rot)
        assert x == self.n
        self.rot.append([a, c])
        self.n += 1
        self._insert_in_corner(a, d, x)
        self._insert_in_corner(c, b, x)
        return x

    def remove_edge(self, u: int, w: int) -> None:
        self.rot[u].remove(w)
        self.rot[w].remove(u)

    def insert_crossing(self, walk, ia: int, ic: int, ib: int, id_: int) -> int:
        """Add chords walk[ia]-walk[ib] and walk[ic]-walk[id_] crossing at a new vertex.

        The positions must satisfy ia < ic < ib < id_ cyclically.
        """
        m = len(walk)
        a, c, b, d = walk[ia], walk[ic], walk[ib], walk[id_]
        z = len(self.rot)
        for pos in (ia, ic, ib, id_):
            self._insert_in_corner(walk[pos], walk[(pos - 1) % m], z)
        self.rot.append([a, d, b, c])
        return z


def _grow_quadrangulation(rng: random.Random, n: int, hub: Optional[int] = None,
                          hub_target: int = 0, max_degree: Optional[int] = None) -> _Embedding:
    emb = _Embedding(4, [[1, 3], [2, 0], [3, 1], [0, 2]])
    cap = max_degree if max_degree is not None else n
    while emb.n < n:
        hub_choices, other_choices = [], []
        for face in emb.faces():
            for a_pos in range(4):
                a, c = face[a_pos], face[(a_pos + 2) % 4]
                if hub is not None and c == hub:
                    continue
                if a == hub:
                    if emb.degree(a) < hub_target and emb.degree(c) < cap:
                        hub_choices.append((face, a_pos))
                elif emb.degree(a) < cap and emb.degree(c) < cap:
                    other_choices.append((face, a_pos))
        # the hub grows first; other splits rotate fresh vertices opposite it
        choices = hub_choices or other_choices
        if not choices:
            raise GenerationError("no 4-face split keeps every degree within the cap")
        face, i = rng.choice(sorted(set(choices)))
        emb.split_quad(face, i)
    return emb


def gen_quadrangulation(seed: int, n: int) -> OnePlanarDrawing:
    """A crossing-free plane quadrangulation on ``n >= 4`` vertices."""
    if n < 4:
        raise ValueError(f"quadrangulation needs n >= 4, got {n}")
    rng = random.Random(seed)
    return _grow_quadrangulation(rng, n).to_drawing()


def _chord_ok(adj, sides, u: int, w: int, mode: Mode) -> bool:
    if w in adj[u] or adj[u] & adj[w]:
        return False
    if mode is Mode.BIPARTITE and sides[u] == sides[w]:
        return False
    return True


def _face_candidates(walk, adj, sides, mode: Mode, deg, cap):
    """Interleaved chord pairs inside one face, smallest vertex ids first."""
    m = len(walk)
    out = []
    for ia in range(m):
        for ib in range(ia + 3, m):
            if min(ib - ia, m - (ib - ia)) < 3:
                continue
            for ic in range(ia + 1, ib):
                for id_ in range(ib + 1, m):
                    if min(id_ - ic, m - (id_ - ic)) < 3:
                        continue
                    ends = (walk[ia], walk[ic], walk[ib], walk[id_])
                    if any(deg[v] >= cap for v in ends):
                        continue
                    out.append((ia, ic, ib, id_))
    chosen = []
    for ia, ic, ib, id_ in out:
        a, c, b, d = walk[ia], walk[ic], walk[ib], walk[id_]
        if not _chord_ok(adj, sides, a, b, mode):
            continue
        adj2 = [s for s in adj]
        adj2[a] = adj[a] | {b}
        adj2[b] = adj[b] | {a}
        if not _chord_ok(adj2, sides, c, d, mode):
            continue
        odd = sides is not None and (sides[a] == sides[b] or sides[c] == sides[d])
        load = max(deg[a], deg[b], deg[c], deg[d])
        chords = tuple(sorted((tuple(sorted((a, b))), tuple(sorted((c, d))))))
        key = (0 if (mode is Mode.TRIANGLE_FREE and odd) else 1, load, chords)
        chosen.append((key, (ia, ic, ib, id_)))
    chosen.sort()
    return [c for _, c in chosen]


def _add_crossings(emb: _Embedding, k: int, rng: random.Random, mode: Mode, cap: int) -> int:
    inserted = 0
    used_faces = set()
    while inserted < k:
        faces = emb.faces()
        eligible = [
            f for f in faces
            if len(f) >= 6 and len(set(f)) == len(f) and all(v < emb.n for v in f)
            and tuple(sorted(f)) not in used_faces
        ]
        rng.shuffle(eligible)
        adj = emb.original_adjacency()
        ok, sides = is_bipartite(Graph(emb.n, {(min(u, w), max(u, w)) for u in range(emb.n) for w in adj[u]}))
        if not ok:
            sides = None
            if mode is Mode.BIPARTITE:
                raise ValueError("BIPARTITE mode needs a bipartite input")
        deg = [emb.degree(v) for v in range(emb.n)]
        options = []
        for f in eligible:
            cands = _face_candidates(f, adj, sides, mode, deg, cap)
            if cands:
                options.append((len(cands), f, cands[0]))
            else:
                used_faces.add(tuple(sorted(f)))
        if not options:
            break
        # most constrained face first
        _, f, cand = min(options, key=lambda o: o[0])
        emb.insert_crossing(f, *cand)
        inserted += 1
    return inserted


def add_crossing_pairs(d: OnePlanarDrawing, k: int, seed: int, mode=Mode.BIPARTITE,
                       max_degree: Optional[int] = None) -> tuple[OnePlanarDrawing, int]:
    """Insert up to ``k`` crossing chord pairs into faces of degree >= 6.

    Returns the new drawing and how many pairs were inserted.
    """
    mode = Mode(mode)
    if not is_triangle_free(d.graph):
        raise ValueError("input graph must be triangle-free")
    emb = _Embedding.from_drawing(d)
    if k == 0:
        return d, 0
    cap = max_degree if max_degree is not None else d.graph.n
    inserted = _add_crossings(emb, k, random.Random(seed), mode, cap)
    if inserted == 0:
        return d, 0
    return emb.to_drawing(), inserted


def _cross_candidates(emb: _Embedding, adj, sides, mode: Mode, cap: int):
    """New edges p-r drawn across an uncrossed edge uw between two faces.

    Equivalent to deleting uw (merging its two faces into one walk) and
    drawing uw and pr back as interleaved chords of that walk.
    """
    faces = [f for f in emb.faces() if len(set(f)) == len(f)]
    by_dart = {}
    for f in faces:
        m = len(f)
        for i in range(m):
            by_dart[(f[i], f[(i + 1) % m])] = (f, i)
    out = []
    for u, w in sorted(by_dart):
        if u >= w or u >= emb.n or w >= emb.n or (w, u) not in by_dart:
            continue
        f1, i1 = by_dart[(u, w)]
        f2, i2 = by_dart[(w, u)]
        if f1 is f2 or (set(f1) & set(f2)) != {u, w}:
            continue
        for p in f1:
            if p in (u, w) or p >= emb.n or emb.degree(p) >= cap:
                continue
            for r in f2:
                if r in (u, w) or r >= emb.n or emb.degree(r) >= cap:
                    continue
                if _chord_ok(adj, sides, p, r, mode):
                    out.append((u, w, p, r))
    return out


def _cross_edge(emb: _Embedding, u: int, w: int, p: int, r: int) -> int:
    emb.remove_edge(u, w)
    for walk in emb.faces():
        if {u, w, p, r} <= set(walk) and len(set(walk)) == len(walk):
            pos = {v: i for i, v in enumerate(walk)}
            # walk order is u, p, w, r up to rotation, or u, r, w, p
            iu, iw = pos[u], pos[w]
            ip = pos[p]
            between = (ip - iu) % len(walk) < (iw - iu) % len(walk)
            if between:
                return emb.insert_crossing(walk, iu, ip, iw, pos[r])
            return emb.insert_crossing(walk, iu, pos[r], iw, ip)
    raise AssertionError("merged face not found")


def _odd_path(emb: _Embedding, face, i: int) -> None:
    """Join face[i] to face[i+2] by a 2-vertex path, splitting a 4-face into two 5-faces."""
    a, b, c, _ = (face[(i + j) % 4] for j in range(4))
    x, y = emb.n, emb.n + 1
    emb.rot.append([a, y])
    emb.rot.append([x, c])
    emb.n += 2
    emb._insert_in_corner(a, face[(i + 3) % 4], x)
    emb._insert_in_corner(c, b, y)


def _add_odd_paths(emb: _Embedding, rng: random.Random, count: int, cap: int) -> None:
    for _ in range(count):
        options = [
            (f, i) for f in emb.faces()
            if len(f) == 4 and len(set(f)) == 4 and all(v < emb.n for v in f)
            for i in range(4)
            if emb.degree(f[i]) < cap and emb.degree(f[(i + 2) % 4]) < cap
        ]
        if not options:
            raise GenerationError("no 4-face has room for an odd path")
        _odd_path(emb, *rng.choice(sorted(options)))


def _sides(emb: _Embedding):
    adj = emb.original_adjacency()
    _, sides = is_bipartite(Graph(emb.n, {(u, w) for u in range(emb.n) for w in adj[u] if u < w}))
    return adj, sides


def _attempt(spec: GenSpec, sub_seed: int) -> tuple[_Embedding, int]:
    rng = random.Random(sub_seed)
    hub = 0
    target = spec.target_delta
    odd = 0
    if spec.mode is Mode.TRIANGLE_FREE:
        # each odd path costs two vertices; the hub substrate needs target + 2
        odd = min(1 + rng.randint(0, 1), (spec.n - target - 2) // 2)
    # other vertices stay below the target so crossing edges can reach them
    growth_cap = max(target - rng.randint(1, 2), min(target, 4))
    emb = _grow_quadrangulation(rng, spec.n - 2 * odd, hub=hub, hub_target=target, max_degree=growth_cap)
    if emb.degree(hub) != target:
        raise GenerationError(f"hub reached degree {emb.degree(hub)}, not {target}")
    _add_odd_paths(emb, rng, odd, target)
    inserted = 0
    while inserted < spec.crossings:
        adj, sides = _sides(emb)
        cands = _cross_candidates(emb, adj, sides, spec.mode, target)
        if not cands:
            break
        _cross_edge(emb, *rng.choice(cands))
        inserted += 1
    if inserted < spec.crossings:
        raise GenerationError(f"only {inserted} of {spec.crossings} crossing pairs admissible")
    return emb, inserted


def gen_theorem1_instance(spec: GenSpec) -> Instance:
    """Triangle-free 1-planar drawing whose maximum degree equals ``target_delta``.

    The hub (vertex 0) is grown to ``target_delta`` neighbors while the
    quadrangulation is built; every other vertex is kept below that value.
    Each crossing pair is a new edge drawn across an uncrossed edge that
    separates two faces. This is the same as deleting that edge and putting
    it back together with the new edge as two interleaved chords of the
    merged face. In TRIANGLE_FREE mode one or two 4-faces are first split
    into pairs of 5-faces, so the output is not bipartite.
    """
    if spec.target_delta < 3:
        raise GenerationError(f"target_delta = {spec.target_delta} < 3 has no quadrangulation hub")
    if spec.n < spec.target_delta + 2:
        raise GenerationError(
            f"n = {spec.n} too small: the quadrangulation substrate needs n >= target_delta + 2"
        )
    last = None
    for i in range(MAX_ATTEMPTS):
        try:
            emb, inserted = _attempt(spec, spec.seed ^ i)
        except GenerationError as exc:
            last = exc
            continue
        d = emb.to_drawing()
        return Instance(d.graph, d, spec, i, inserted)
    raise GenerationError(f"attempt budget of {MAX_ATTEMPTS} exhausted; last failure: {last}")
