"""Executable checks for the structural lemmas and the Class 1 theorem.

The face lemmas hold for crossing-minimal drawings. Minimality is never
certified here, so a FAIL on a triangle-free input is reported with a
caveat: it witnesses that the drawing is not crossing-minimal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional

from .coloring import DEFAULT_BUDGET, ColorClass, exact_chromatic_index
from .drawing import InvalidDrawingError, OnePlanarDrawing, PlanarizedGraph, f3_count, nc_count, planarize
from .graph import Graph, is_triangle_free

MINIMALITY_CAVEAT = "conditional on a crossing-minimal drawing"


class Verdict(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class LemmaViolation:
    element: Any
    observed: dict
    required: str
    case: Optional[str] = None

    def __str__(self):
        obs = " ".join(f"{k}={v}" for k, v in self.observed.items())
        tag = f"[{self.case}] " if self.case else ""
        return f"{tag}{self.element}: {obs}; requires {self.required}"


@dataclass(frozen=True)
class LemmaReport:
    tag: str
    verdict: Verdict
    violations: tuple[LemmaViolation, ...] = ()
    caveats: tuple[str, ...] = ()
    note: str = ""

    def __post_init__(self):
        if self.verdict is Verdict.FAIL and not self.violations:
            raise ValueError("FAIL report needs at least one violation")
        if self.verdict is Verdict.PASS and self.violations:
            raise ValueError("PASS report cannot carry violations")

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "verdict": self.verdict.value,
            "caveats": list(self.caveats),
            "note": self.note,
            "violations": [
                {"element": repr(v.element), "observed": v.observed, "required": v.required, "case": v.case}
                for v in self.violations
            ],
        }


def _verdict(violations) -> Verdict:
    return Verdict.FAIL if violations else Verdict.PASS


def _check_pair(p: PlanarizedGraph, g: Graph) -> None:
    if p.base.graph != g:
        raise ValueError("planarized graph was not built from a drawing of this graph")


def check_lemma1(p: PlanarizedGraph, g: Graph) -> LemmaReport:
    _check_pair(p, g)
    if not is_triangle_free(g):
        return LemmaReport("lemma1", Verdict.NOT_APPLICABLE, note="graph has a triangle")
    bad = []
    for v in range(g.n):
        f3, nc = f3_count(p, v), nc_count(p, v)
        if f3 > nc:
            bad.append(LemmaViolation(v, {"f3": f3, "nc": nc}, "f3 <= nc"))
    return LemmaReport("lemma1", _verdict(bad), tuple(bad), (MINIMALITY_CAVEAT,))


def _incident_large_face(p: PlanarizedGraph, v: int) -> bool:
    return any(len(f) >= 6 and v in f for f in p.faces)


def lemma2_violations(p: PlanarizedGraph, g: Graph, v: int) -> list[LemmaViolation]:
    d, f3, nc = g.degree(v), f3_count(p, v), nc_count(p, v)
    obs = {"d": d, "f3": f3, "nc": nc}
    out = []
    if d == 2 and f3 != 0:
        out.append(LemmaViolation(v, obs, "f3 = 0", "case 1"))
    elif d == 3 and nc >= 2:
        if f3 > 2:
            out.append(LemmaViolation(v, obs, "f3 <= 2", "case 2"))
        elif f3 == 2 and not _incident_large_face(p, v):
            out.append(LemmaViolation(v, obs, "a face of degree >= 6 at v when f3 = 2", "case 2"))
    elif d == 4 and nc >= 3 and f3 > 2:
        out.append(LemmaViolation(v, obs, "f3 <= 2", "case 3"))
    elif d == 5 and nc >= 4 and f3 > 2:
        out.append(LemmaViolation(v, obs, "f3 <= 2", "case 4"))
    elif d == 6 and nc >= 5 and f3 > 2:
        out.append(LemmaViolation(v, obs, "f3 <= 2", "case 5"))
    elif d == 7 and nc >= 5 and f3 > 4:
        out.append(LemmaViolation(v, obs, "f3 <= 4", "case 6"))
    return out


def check_lemma2(p: PlanarizedGraph, g: Graph) -> LemmaReport:
    _check_pair(p, g)
    if not is_triangle_free(g):
        return LemmaReport("lemma2", Verdict.NOT_APPLICABLE, note="graph has a triangle")
    bad = []
    for v in range(g.n):
        bad.extend(lemma2_violations(p, g, v))
    return LemmaReport("lemma2", _verdict(bad), tuple(bad), (MINIMALITY_CAVEAT,))


def f3_upper_bound(d: int, n_c: int) -> int:
    """Tightest bound on f3(v) given by combining the two face lemmas."""
    if not 2 <= d <= 7:
        raise ValueError(f"degree must lie in 2..7, got {d}")
    if not 0 <= n_c <= d:
        raise ValueError(f"crossing count must lie in 0..{d}, got {n_c}")
    if d == 2:
        return 0
    if d == 3:
        return min(n_c, 2)
    if d == 7:
        return min(n_c, 4)
    # d = 4, 5, 6: the second lemma caps f3 at 2 once n_c >= d - 1
    return n_c if n_c <= d - 2 else 2


def check_vizing_adjacency(g: Graph, assume_critical: bool = False) -> LemmaReport:
    """For every edge uv with d(v) = k, u has >= Delta - k + 1 neighbors of degree Delta.

    Checked in both directions along each edge.
    """
    delta = g.max_degree()
    deg = g.degrees()
    bad = []
    for a, b in g.edges:
        for u, v in ((a, b), (b, a)):
            need = delta - deg[v] + 1
            have = sum(1 for w in g.adjacency[u] if deg[w] == delta)
            if have < need:
                bad.append(LemmaViolation(
                    (u, v), {"d(v)": deg[v], "delta_neighbors_of_u": have}, f">= {need} neighbors of degree {delta}",
                ))
    if assume_critical:
        caveat = "graph certified critical: a FAIL indicates a software defect"
    else:
        caveat = "a FAIL proves the graph is not Delta-critical"
    return LemmaReport("lemma3", _verdict(bad), tuple(bad), (caveat,))


def check_critical_size(g: Graph, k: int, assume_k_critical: bool = False) -> LemmaReport:
    if k < 8:
        return LemmaReport("lemma4", Verdict.NOT_APPLICABLE, note=f"k = {k} < 8")
    n, e = g.n, g.num_edges
    if e >= 3 * n:
        return LemmaReport("lemma4", Verdict.PASS, note="e >= 3n")
    v = LemmaViolation("G", {"e": e, "n": n}, f"e >= 3n = {3 * n}")
    caveat = ("graph certified critical: a FAIL indicates a software defect" if assume_k_critical
              else f"a FAIL proves the graph is not {k}-critical")
    return LemmaReport("lemma4", Verdict.FAIL, (v,), (caveat,))


def check_theorem1(g: Graph, d: OnePlanarDrawing, budget: int = DEFAULT_BUDGET) -> LemmaReport:
    if d.graph != g:
        raise ValueError("drawing does not draw this graph")
    planarize(d)  # raises InvalidDrawingError
    if not is_triangle_free(g):
        return LemmaReport("theorem1", Verdict.NOT_APPLICABLE, note="graph has a triangle")
    delta = g.max_degree()
    if delta < 7:
        return LemmaReport("theorem1", Verdict.NOT_APPLICABLE, note=f"max degree {delta} < 7")
    res = exact_chromatic_index(g, budget)
    if res.klass is ColorClass.UNKNOWN:
        return LemmaReport("theorem1", Verdict.UNKNOWN, note=f"budget of {budget} nodes exhausted")
    if res.klass is ColorClass.ONE:
        return LemmaReport("theorem1", Verdict.PASS, note=f"chromatic index {res.chromatic_index} = max degree")
    v = LemmaViolation("G", {"delta": delta, "chromatic_index": res.chromatic_index}, "chromatic index = delta")
    return LemmaReport("theorem1", Verdict.FAIL, (v,), note="counterexample to the Class 1 theorem")


__all__ = [
    "InvalidDrawingError",
    "LemmaReport",
    "LemmaViolation",
    "Verdict",
    "check_critical_size",
    "check_lemma1",
    "check_lemma2",
    "check_theorem1",
    "check_vizing_adjacency",
    "f3_upper_bound",
    "lemma2_violations",
]
