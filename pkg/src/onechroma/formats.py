"""Text formats: ``.opg`` drawings, edge lists and coloring listings.

``.opg``::

    opg 1
    v 6
    e 0 1
    ...
    x (0 3) (1 4) 0
    r 0: 1 z(0 3) 5

Edge list::

    v 6
    e 0 1
    ...
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Optional, Union

from .drawing import CrossingPair, CrossRef, OnePlanarDrawing
from .graph import Graph, norm_edge

OPG_MAGIC = "opg 1"

_CROSS_RE = re.compile(r"^x\s*\(\s*(\d+)\s+(\d+)\s*\)\s*\(\s*(\d+)\s+(\d+)\s*\)\s+(\d+)$")
_ZTOK_RE = re.compile(r"z\(\s*(\d+)\s+(\d+)\s*\)")


class ParseError(ValueError):
    def __init__(self, message: str, lineno: Optional[int] = None, source: str = "<input>"):
        where = f"{source}:{lineno}: " if lineno is not None else f"{source}: "
        super().__init__(where + message)
        self.lineno = lineno
        self.source = source


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def detect_format(text: str) -> str:
    """``"opg"`` if the first content line is the magic, else ``"edgelist"``."""
    for _, line in _content_lines(text):
        return "opg" if line.split() == OPG_MAGIC.split() else "edgelist"
    return "edgelist"


def _int(tok: str, lineno: int, source: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno, source) from None


def _graph(n: int, edges: list, source: str) -> Graph:
    seen = {}
    for lineno, u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for v {n}", lineno, source)
        if u == v:
            raise ParseError(f"loop edge at vertex {u}", lineno, source)
        e = norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {e} (first on line {seen[e]})", lineno, source)
        seen[e] = lineno
    return Graph(n, [(u, v) for _, u, v in edges])


def parse_edgelist(text: str, source: str = "<input>") -> Graph:
    n = None
    edges = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "v":
            if n is not None:
                raise ParseError("repeated vertex count line", lineno, source)
            if len(parts) != 2:
                raise ParseError("expected 'v N'", lineno, source)
            n = _int(parts[1], lineno, source)
            if n < 0:
                raise ParseError("negative vertex count", lineno, source)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before vertex count", lineno, source)
            if len(parts) != 3:
                raise ParseError("expected 'e u v'", lineno, source)
            edges.append((lineno, _int(parts[1], lineno, source), _int(parts[2], lineno, source)))
        else:
            raise ParseError(f"unknown record {parts[0]!r}", lineno, source)
    if n is None:
        raise ParseError("missing 'v N' line", None, source)
    return _graph(n, edges, source)


def parse_opg(text: str, source: str = "<input>") -> OnePlanarDrawing:
    # sections must appear in order: magic, v, e*, x*, r*
    stage = 0
    n = None
    edges = []
    crossings = []
    rotations: dict[int, tuple] = {}
    for lineno, line in _content_lines(text):
        head = line.split()[0]
        if stage == 0:
            if line.split() != OPG_MAGIC.split():
                raise ParseError(f"expected magic {OPG_MAGIC!r}", lineno, source)
            stage = 1
            continue
        order = {"v": 2, "e": 3, "x": 4, "r": 5}
        if head not in order:
            raise ParseError(f"unknown record {head!r}", lineno, source)
        st = order[head]
        if st < stage or (st == 2 and stage == 2):
            raise ParseError(f"record {head!r} out of order", lineno, source)
        if st > 2 and n is None:
            raise ParseError("missing 'v N' line before other records", lineno, source)
        stage = st
        if head == "v":
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("expected 'v N'", lineno, source)
            n = _int(parts[1], lineno, source)
            if n < 0:
                raise ParseError("negative vertex count", lineno, source)
        elif head == "e":
            parts = line.split()
            if len(parts) != 3:
                raise ParseError("expected 'e u v'", lineno, source)
            edges.append((lineno, _int(parts[1], lineno, source), _int(parts[2], lineno, source)))
        elif head == "x":
            m = _CROSS_RE.match(line)
            if not m:
                raise ParseError("expected 'x (a b) (c d) o'", lineno, source)
            a, b, c, d, o = (int(t) for t in m.groups())
            if o not in (0, 1):
                raise ParseError(f"orientation must be 0 or 1, got {o}", lineno, source)
            crossings.append(CrossingPair((a, b), (c, d), o))
        else:
            if ":" not in line:
                raise ParseError("expected 'r u: tokens'", lineno, source)
            left, right = line.split(":", 1)
            lparts = left.split()
            if len(lparts) != 2:
                raise ParseError("expected 'r u: tokens'", lineno, source)
            u = _int(lparts[1], lineno, source)
            if not (0 <= u < n):
                raise ParseError(f"rotation for vertex {u} out of range", lineno, source)
            if u in rotations:
                raise ParseError(f"second rotation for vertex {u}", lineno, source)
            rotations[u] = _parse_tokens(right, lineno, source)
    if stage == 0:
        raise ParseError("empty file", None, source)
    if n is None:
        raise ParseError("missing 'v N' line", None, source)
    g = _graph(n, edges, source)
    rots = tuple(rotations.get(u, ()) for u in range(n))
    return OnePlanarDrawing(graph=g, crossings=tuple(crossings), rotations=rots)


def _parse_tokens(text: str, lineno: int, source: str) -> tuple:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _ZTOK_RE.match(text, pos)
        if m:
            out.append(CrossRef(int(m.group(1)), int(m.group(2))))
            pos = m.end()
            continue
        end = pos
        while end < len(text) and not text[end].isspace():
            end += 1
        out.append(_int(text[pos:end], lineno, source))
        pos = end
    return tuple(out)


def format_opg(d: OnePlanarDrawing, header: Optional[dict] = None) -> str:
    lines = [OPG_MAGIC]
    for key, value in (header or {}).items():
        lines.append(f"# {key}: {value}")
    lines.append(f"v {d.graph.n}")
    lines.extend(f"e {u} {v}" for u, v in d.graph.edges)
    for cp in d.crossings:
        lines.append(f"x ({cp.first[0]} {cp.first[1]}) ({cp.second[0]} {cp.second[1]}) {cp.orientation}")
    for u, rot in enumerate(d.rotations):
        toks = [f"z({t.a} {t.b})" if isinstance(t, CrossRef) else str(t) for t in rot]
        lines.append(f"r {u}: " + " ".join(toks) if toks else f"r {u}:")
    return "\n".join(lines) + "\n"


def format_edgelist(g: Graph) -> str:
    lines = [f"v {g.n}"] + [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def load(path: Union[str, Path]) -> Union[OnePlanarDrawing, Graph]:
    """Read a file, auto-detecting ``.opg`` versus edge-list by its magic line."""
    path = Path(path)
    text = path.read_text()
    if detect_format(text) == "opg":
        return parse_opg(text, str(path))
    return parse_edgelist(text, str(path))


def format_coloring(coloring) -> str:
    lines = [f"colors {coloring.k}"]
    for (u, v), c in sorted(coloring.colors.items()):
        lines.append(f"c {u} {v} {c}")
    return "\n".join(lines) + "\n"
