"""Two Eulerian trails with different labels, found by repeated splitting off."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import GroupOracle, Word
from .brute import iter_trails
from .decide import PreconditionError, VerdictKind, decide
from .euler import (
    Trail,
    concat_trails,
    empty_trail,
    insert_subcircuit,
    invert_trail,
    is_eulerian,
    is_trail,
    make_trail,
    subcircuits,
    trail_label,
    trail_vertices,
)
from .graph import Arc, LabeledGraph, split_off


class WitnessError(RuntimeError):
    """The split-off loop ended without a non-involutive loop to report."""


@dataclass(frozen=True)
class SplitStep:
    first: Arc
    second: Arc
    new_edge: str
    graph: LabeledGraph


@dataclass(frozen=True)
class Witness:
    circuit: Trail
    before: Trail
    after: Trail
    decide_calls: int = 0
    steps: tuple[SplitStep, ...] = field(default=(), repr=False)
    forbidden: frozenset[tuple[Arc, Arc]] = field(default=frozenset(), repr=False)
    # (junction key, accepted) for every split that was tried, in order
    attempts: tuple[tuple[tuple[Arc, Arc], bool], ...] = field(default=(), repr=False)
    provenance: dict[str, Trail] = field(default_factory=dict, repr=False)
    final_graph: LabeledGraph | None = field(default=None, repr=False)

    @property
    def trail(self) -> Trail:
        """T1 L T2."""
        return insert_subcircuit(self.before, self.circuit, self.after)

    @property
    def flipped_trail(self) -> Trail:
        """T1 L^-1 T2."""
        return insert_subcircuit(self.before, invert_trail(self.circuit), self.after)

    def labels(self, g: LabeledGraph) -> tuple[Word, Word]:
        return trail_label(g, self.trail), trail_label(g, self.flipped_trail)


class _Provenance:
    """Trail of the original graph behind each current edge's forward arc."""

    def __init__(self, g: LabeledGraph):
        self.trails = {e.id: make_trail(g, [Arc(e.id)]) for e in g.edges}

    def of(self, a: Arc) -> Trail:
        t = self.trails[a.edge]
        return invert_trail(t) if a.reverse else t

    def merge(self, a1: Arc, a2: Arc, new_edge: str) -> None:
        merged = concat_trails(self.of(a1), self.of(a2))
        del self.trails[a1.edge], self.trails[a2.edge]
        self.trails[new_edge] = merged

    def expand(self, arcs, anchor: str) -> Trail:
        if not arcs:
            return empty_trail(anchor)
        return concat_trails(*(self.of(a) for a in arcs))


def _candidate_pairs(g: LabeledGraph) -> list[tuple[Arc, Arc]]:
    pairs = []
    for a1 in g.arcs():
        for a2 in g.out_arcs(g.head(a1)):
            if a2.edge != a1.edge:
                pairs.append((a1, a2))
    pairs.sort()
    return pairs


def find_witness(g: LabeledGraph, oracle: GroupOracle, a: str, b: str) -> Witness:
    """Circuit L and trails T1, T2 with T1 L T2 Eulerian and L's label not an involution.

    Arc pairs are split off whenever the answer stays "no"; a pair rejected
    once is remembered by the original arcs at its junction and never tried
    again.  After each successful split the scan restarts from the smallest
    pair.  The few trails of the final graph are enumerated to locate L.
    """
    calls = 1
    if decide(g, oracle, a, b).kind is not VerdictKind.NO:
        raise PreconditionError("all Eulerian trails already share one label")

    prov = _Provenance(g)
    forbidden: set[tuple[Arc, Arc]] = set()
    steps: list[SplitStep] = []
    attempts: list[tuple[tuple[Arc, Arc], bool]] = []
    cur = g
    progressed = True
    while progressed:
        progressed = False
        for a1, a2 in _candidate_pairs(cur):
            key = (prov.of(a1).arcs[-1], prov.of(a2).arcs[0])
            if key in forbidden:
                continue
            nxt, new_id = split_off(cur, a1, a2)
            calls += 1
            accepted = decide(nxt, oracle, a, b).kind is VerdictKind.NO
            attempts.append((key, accepted))
            if accepted:
                prov.merge(a1, a2, new_id)
                steps.append(SplitStep(a1, a2, new_id, nxt))
                cur = nxt
                progressed = True
                break
            forbidden.add(key)

    for t in iter_trails(cur, a, b):
        vs = trail_vertices(cur, t)
        ranges = sorted(subcircuits(cur, t), key=lambda r: (r[1] - r[0], r[0]))
        for i, j in ranges:
            loop = Trail(t.arcs[i:j], vs[i], vs[j])
            if not oracle.has_order_at_most_2(trail_label(cur, loop)):
                return Witness(
                    circuit=prov.expand(loop.arcs, vs[i]),
                    before=prov.expand(t.arcs[:i], a),
                    after=prov.expand(t.arcs[j:], vs[j]),
                    decide_calls=calls,
                    steps=tuple(steps),
                    forbidden=frozenset(forbidden),
                    attempts=tuple(attempts),
                    provenance=dict(prov.trails),
                    final_graph=cur,
                )
    raise WitnessError(f"no non-involutive subcircuit left in a graph with {len(cur)} edges")


def validate_witness(g: LabeledGraph, oracle: GroupOracle, a: str, b: str, w: Witness) -> bool:
    for t in (w.circuit, w.before, w.after):
        if not is_trail(g, t):
            return False
    if not w.circuit.is_circuit or w.before.tail != a or w.after.head != b:
        return False
    if w.before.head != w.circuit.tail or w.circuit.head != w.after.tail:
        return False
    try:
        full, flipped = w.trail, w.flipped_trail
    except ValueError:
        return False
    if not (is_eulerian(g, full, a, b) and is_eulerian(g, flipped, a, b)):
        return False
    if oracle.has_order_at_most_2(trail_label(g, w.circuit)):
        return False
    return not oracle.equals(trail_label(g, full), trail_label(g, flipped))
