"""Charges on the associated plane graph and the four redistribution rules.

Initial charge is ``deg - 4`` on every vertex and face; on a connected plane
graph these sum to -8. The rules move charge as follows (all degrees are
degrees in G, which agree with G× on original vertices):

* R1  d(u) = 7, 2 <= d(v) <= 6, uv in E(G): u sends 1/(d(v)-1) to v.
* R2  d(u) = 6, uv in E(G): u sends 1/2 to v if d(v) = 3, 1/6 if d(v) = 4.
* R3  3-face uvw with exactly one crossing vertex w: u and v each send 1/2.
* R4  face of degree >= 6 sends 2/3 to each incident degree-3 original
      vertex, once per incidence on the boundary walk.

Everything is exact ``Fraction`` arithmetic.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .drawing import PlanarizedGraph
from .graph import Graph

EULER_TOTAL = Fraction(-8)
RULE_AMOUNTS = frozenset(Fraction(x) for x in ("1", "1/2", "1/3", "1/4", "1/5", "1/6", "2/3"))


class Kind(str, enum.Enum):
    ORIGINAL_VERTEX = "vertex"
    CROSSING_VERTEX = "crossing"
    FACE = "face"


_KIND_ORDER = {Kind.ORIGINAL_VERTEX: 0, Kind.CROSSING_VERTEX: 1, Kind.FACE: 2}


class Element(NamedTuple):
    kind: Kind
    id: int

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.id)

    def __str__(self):
        return f"{self.kind.value}:{self.id}"


class Transfer(NamedTuple):
    rule: str
    source: Element
    target: Element
    amount: Fraction


@dataclass(frozen=True)
class ChargeLedger:
    initial: dict[Element, Fraction]
    final: dict[Element, Fraction]
    transfers: tuple[Transfer, ...] = ()

    @property
    def initial_total(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    @property
    def final_total(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    @property
    def conserved(self) -> bool:
        return self.initial_total == self.final_total

    def replay(self) -> dict[Element, Fraction]:
        """Recompute final charges from the initial charges and the transfer log."""
        out = dict(self.initial)
        for t in self.transfers:
            out[t.source] -= t.amount
            out[t.target] += t.amount
        return out

    def elements(self) -> list[Element]:
        return sorted(self.initial, key=Element.sort_key)


class DisconnectedError(ValueError):
    pass


def _element(p: PlanarizedGraph, v: int) -> Element:
    return Element(Kind.CROSSING_VERTEX if p.is_crossing(v) else Kind.ORIGINAL_VERTEX, v)


def _check_connected(p: PlanarizedGraph) -> None:
    if not p.base.graph.is_connected():
        raise DisconnectedError("charge identity needs a connected plane graph")
    if p.num_vertices - p.num_edges + p.num_faces != 2:
        raise DisconnectedError("planarized graph fails V - E + F = 2")


def initial_charges(p: PlanarizedGraph) -> ChargeLedger:
    _check_connected(p)
    init = {}
    for v in range(p.num_vertices):
        init[_element(p, v)] = Fraction(p.degree(v) - 4)
    for i, f in enumerate(p.faces):
        init[Element(Kind.FACE, i)] = Fraction(len(f) - 4)
    return ChargeLedger(init, dict(init))


def euler_charge_total(p: PlanarizedGraph) -> Fraction:
    total = initial_charges(p).initial_total
    assert total == EULER_TOTAL, f"charge total {total} != -8"
    return total


def _r1_r2(g: Graph) -> tuple[list[Transfer], list[Transfer]]:
    r1, r2 = [], []
    deg = g.degrees()
    for a, b in g.edges:
        for u, v in ((a, b), (b, a)):
            src = Element(Kind.ORIGINAL_VERTEX, u)
            dst = Element(Kind.ORIGINAL_VERTEX, v)
            if deg[u] == 7 and 2 <= deg[v] <= 6:
                r1.append(Transfer("R1", src, dst, Fraction(1, deg[v] - 1)))
            if deg[u] == 6:
                if deg[v] == 3:
                    r2.append(Transfer("R2", src, dst, Fraction(1, 2)))
                elif deg[v] == 4:
                    r2.append(Transfer("R2", src, dst, Fraction(1, 6)))
    return r1, r2


def _r3(p: PlanarizedGraph) -> list[Transfer]:
    out = []
    for i, f in enumerate(p.faces):
        if len(f) != 3:
            continue
        crossing = [v for v in f if p.is_crossing(v)]
        if len(crossing) != 1:
            continue
        for v in f:
            if not p.is_crossing(v):
                out.append(Transfer("R3", Element(Kind.ORIGINAL_VERTEX, v), Element(Kind.FACE, i), Fraction(1, 2)))
    return out


def _r4(p: PlanarizedGraph, g: Graph) -> list[Transfer]:
    out = []
    for i, f in enumerate(p.faces):
        if len(f) < 6:
            continue
        for v in f:
            if not p.is_crossing(v) and g.degree(v) == 3:
                out.append(Transfer("R4", Element(Kind.FACE, i), Element(Kind.ORIGINAL_VERTEX, v), Fraction(2, 3)))
    return out


def _canonical(transfers: list[Transfer]) -> list[Transfer]:
    return sorted(transfers, key=lambda t: (t.source.sort_key(), t.target.sort_key()))


def apply_rules(p: PlanarizedGraph, g: Graph) -> ChargeLedger:
    if p.base.graph != g:
        raise ValueError("planarized graph was not built from a drawing of this graph")
    ledger = initial_charges(p)
    r1, r2 = _r1_r2(g)
    log = _canonical(r1) + _canonical(r2) + _canonical(_r3(p)) + _canonical(_r4(p, g))
    final = dict(ledger.initial)
    for t in log:
        final[t.source] -= t.amount
        final[t.target] += t.amount
    return ChargeLedger(ledger.initial, final, tuple(log))


def negative_elements(ledger: ChargeLedger) -> list[tuple[Element, Fraction]]:
    neg = [(x, c) for x, c in ledger.final.items() if c < 0]
    return sorted(neg, key=lambda xc: (xc[1], xc[0].sort_key()))


def fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_ledger(ledger: ChargeLedger) -> str:
    lines = [
        f"{x.kind.value} {x.id} {fmt_fraction(ledger.initial[x])} {fmt_fraction(ledger.final[x])}"
        for x in ledger.elements()
    ]
    if ledger.transfers:
        lines.append("transfers")
        lines.extend(f"{t.rule} {t.source} {t.target} {fmt_fraction(t.amount)}" for t in ledger.transfers)
    lines.append(f"initial {fmt_fraction(ledger.initial_total)} final {fmt_fraction(ledger.final_total)}")
    return "\n".join(lines) + "\n"


def ledger_to_dict(ledger: ChargeLedger) -> dict:
    by_rule = defaultdict(int)
    for t in ledger.transfers:
        by_rule[t.rule] += 1
    return {
        "elements": [
            {"kind": x.kind.value, "id": x.id,
             "initial": fmt_fraction(ledger.initial[x]), "final": fmt_fraction(ledger.final[x])}
            for x in ledger.elements()
        ],
        "transfers": [
            {"rule": t.rule, "source": str(t.source), "target": str(t.target), "amount": fmt_fraction(t.amount)}
            for t in ledger.transfers
        ],
        "rule_counts": dict(sorted(by_rule.items())),
        "initial_total": fmt_fraction(ledger.initial_total),
        "final_total": fmt_fraction(ledger.final_total),
        "conserved": ledger.conserved,
        "negative": [{"element": str(x), "final": fmt_fraction(c)} for x, c in negative_elements(ledger)],
    }
