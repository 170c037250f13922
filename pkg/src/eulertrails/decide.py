"""Deciding whether all Eulerian a->b trails carry the same label."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import GroupOracle, Word, concat, free_reduce, invert
from .cores import ValidInstance, core_partition, extract_all
from .euler import find_trail, trail_exists
from .graph import GraphError, LabeledGraph, Shifting, apply_shifting, is_connected, is_three_edge_connected, iter_bfs_tree


class PreconditionError(ValueError):
    pass


class VerdictKind(str, enum.Enum):
    VACUOUS_YES = "vacuous-yes"
    YES = "yes"
    NO = "no"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Violation:
    """Why a labeling is not involutive-and-commuting.

    ``reason`` is ``"order"`` (one label squared is not the identity; both
    entries of ``edges``/``labels`` then name the same edge) or ``"commute"``.
    """

    reason: str
    edges: tuple[str, str]
    labels: tuple[Word, Word]


@dataclass(frozen=True)
class CoreReport:
    instance: ValidInstance
    shifting: Shifting
    normalized: LabeledGraph
    violation: Violation | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    shifting: Shifting | None = None
    core: tuple[str, ...] | None = None
    violation: Violation | None = None
    reports: tuple[CoreReport, ...] = field(default=())

    @property
    def same_label(self) -> bool:
        return self.kind is not VerdictKind.NO


def normalized_shifting(g: LabeledGraph, root: str) -> tuple[Shifting, LabeledGraph]:
    """Shift along a BFS tree so every tree arc ends up labeled by the empty word.

    Each non-root vertex is shifted by the (reduced) label its parent arc has
    once the parent has been shifted, i.e. by the product of labels along the
    tree path from the root.  Returned labels are freely reduced.
    """
    if not g.has_vertex(root):
        raise GraphError(f"unknown vertex {root!r}")
    if not is_connected(g):
        raise PreconditionError("normalization needs a connected graph")
    words: dict[str, Word] = {}
    for x, parent_arc in iter_bfs_tree(g, root):
        if parent_arc is None:
            continue
        p = g.tail(parent_arc)
        e = g.edge(parent_arc.edge)
        label = invert(e.label) if parent_arc.reverse else e.label
        words[x] = free_reduce(concat(words.get(p, ()), label))
    s = Shifting({x: w for x, w in words.items() if w})
    return s, apply_shifting(g, s).reduced()


def tree_edges(g: LabeledGraph, root: str) -> list[str]:
    return [a.edge for _, a in iter_bfs_tree(g, root) if a is not None]


def find_violation(g: LabeledGraph, oracle: GroupOracle) -> Violation | None:
    """First label that is not an involution, else first non-commuting pair.

    Empty words are skipped; they pass both tests without a query.
    """
    labelled = [(e.id, free_reduce(e.label)) for e in g.edges]
    labelled = [(eid, w) for eid, w in labelled if w]
    for eid, w in labelled:
        if not oracle.has_order_at_most_2(w):
            return Violation("order", (eid, eid), (w, w))
    for (e1, w1), (e2, w2) in combinations(labelled, 2):
        if not oracle.commutes(w1, w2):
            return Violation("commute", (e1, e2), (w1, w2))
    return None


def _decide_instance(inst: ValidInstance, oracle: GroupOracle) -> CoreReport:
    s, normalized = normalized_shifting(inst.graph, inst.start)
    return CoreReport(inst, s, normalized, find_violation(normalized, oracle))


def decide_3ec(g: LabeledGraph, oracle: GroupOracle, a: str, b: str, root: str | None = None) -> Verdict:
    """Decision for a 3-edge-connected graph with an Eulerian a->b trail."""
    if not trail_exists(g, a, b):
        raise PreconditionError(f"no Eulerian trail from {a!r} to {b!r}")
    if not is_three_edge_connected(g):
        raise PreconditionError("graph is not 3-edge-connected")
    s, normalized = normalized_shifting(g, a if root is None else root)
    violation = find_violation(normalized, oracle)
    core = tuple(g.vertices)
    if violation is not None:
        return Verdict(VerdictKind.NO, core=core, violation=violation)
    return Verdict(VerdictKind.YES, shifting=s)


def decide(g: LabeledGraph, oracle: GroupOracle, a: str, b: str) -> Verdict:
    """Do all Eulerian trails from a to b have the same label?

    Splits G into cores along one Eulerian trail C and checks each core's
    instance separately.  Stops at the first failing core.
    """
    if not trail_exists(g, a, b):
        return Verdict(VerdictKind.VACUOUS_YES)
    c = find_trail(g, a, b)
    reports = []
    shifting = Shifting()
    for inst in extract_all(g, c, core_partition(g)):
        report = _decide_instance(inst, oracle)
        reports.append(report)
        if not report.ok:
            return Verdict(
                VerdictKind.NO,
                core=inst.core,
                violation=report.violation,
                reports=tuple(reports),
            )
        shifting = shifting.merged(report.shifting)
    return Verdict(VerdictKind.YES, shifting=shifting, reports=tuple(reports))


def verify_same_label(g: LabeledGraph, oracle: GroupOracle, a: str, b: str, s: Shifting) -> bool:
    """Re-check a yes-shifting: every core instance of the shifted graph must
    already be labeled by pairwise commuting involutions."""
    if not trail_exists(g, a, b):
        return True
    shifted = apply_shifting(g, s)
    c = find_trail(shifted, a, b)
    for inst in extract_all(shifted, c):
        if find_violation(inst.graph, oracle) is not None:
            return False
    return True
