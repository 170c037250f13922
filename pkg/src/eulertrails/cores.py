"""3-cores and the valid instance obtained from each core along a trail."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .euler import Trail, TrailError, is_eulerian, make_trail, trail_label, trail_vertices
from .graph import Arc, Edge, GraphError, LabeledGraph, connected_components, delta, edge_connectivity_at_least


@dataclass(frozen=True)
class CorePartition:
    blocks: tuple[tuple[str, ...], ...]

    def block_of(self, x: str) -> tuple[str, ...]:
        for block in self.blocks:
            if x in block:
                return block
        raise KeyError(x)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def core_partition(g: LabeledGraph) -> CorePartition:
    """Maximal vertex sets with pairwise edge-connectivity at least 3.

    lambda(u, w) >= min(lambda(u, v), lambda(v, w)), so "at least 3" is an
    equivalence and each vertex only needs testing against one member of
    each existing block.
    """
    blocks: list[list[str]] = []
    for x in g.vertices:
        for block in blocks:
            if edge_connectivity_at_least(g, block[0], x, 3):
                block.append(x)
                break
        else:
            blocks.append([x])
    return CorePartition(tuple(sorted(tuple(sorted(b)) for b in blocks)))


def check_core_boundary(g: LabeledGraph, xs: Iterable[str]) -> bool:
    """Every component of G - X sends at most two edges into X."""
    core = set(xs)
    rest = g.induced([x for x in g.vertices if x not in core])
    for comp in connected_components(rest):
        if len(delta(g, comp)) > 2:
            return False
    return True


@dataclass(frozen=True)
class ValidInstance:
    """The graph H on a core X, its ends, and where each H-edge came from.

    ``provenance`` maps every H edge id to the trail of G its forward arc
    stands for: a single arc for edges copied from G, the whole excursion of
    C otherwise.
    """

    core: tuple[str, ...]
    graph: LabeledGraph
    start: str
    end: str
    provenance: Mapping[str, Trail] = field(default_factory=dict)

    @property
    def excursion_count(self) -> int:
        return sum(1 for t in self.provenance.values() if len(t) > 1)

    def summary(self) -> dict:
        return {
            "core": list(self.core),
            "vertices": len(self.graph.vertices),
            "edges": len(self.graph),
            "start": self.start,
            "end": self.end,
            "excursions": self.excursion_count,
        }


def extract_valid_instance(
    g: LabeledGraph,
    c: Trail,
    xs: Iterable[str],
    partition: CorePartition | None = None,
) -> ValidInstance:
    """Build (H, a', b') and its labeling from core X along the Eulerian trail C.

    Consecutive visits of C to X are joined by one H edge: the original edge
    when they are one step apart, otherwise an edge labeled by the excursion
    between them.  The parts of C before the first and after the last visit
    contribute nothing.
    """
    core = tuple(sorted(set(xs)))
    if partition is None:
        partition = core_partition(g)
    if core not in partition.blocks:
        raise GraphError(f"{list(core)} is not a core of the graph")
    if not is_eulerian(g, c, c.tail, c.head):
        raise TrailError("C is not an Eulerian trail of the graph")

    inside = set(core)
    vs = trail_vertices(g, c)
    hits = [i for i, x in enumerate(vs) if x in inside]
    if not hits:
        # only an isolated vertex can be missed by an Eulerian trail
        only = core[0]
        return ValidInstance(core, LabeledGraph((), core), only, only, {})

    edges = []
    provenance: dict[str, Trail] = {}
    for i, j in zip(hits, hits[1:]):
        piece = Trail(c.arcs[i:j], vs[i], vs[j])
        if j == i + 1:
            arc = c.arcs[i]
            e = g.edge(arc.edge)
            edges.append(e)
            provenance[e.id] = make_trail(g, [Arc(e.id)])
        else:
            eid = "*".join(piece.edge_ids)
            while eid in provenance or g.has_edge(eid):
                eid += "~"
            edges.append(Edge(eid, vs[i], vs[j], trail_label(g, piece)))
            provenance[eid] = piece
    h = LabeledGraph(edges, core)
    return ValidInstance(core, h, vs[hits[0]], vs[hits[-1]], provenance)


def extract_all(g: LabeledGraph, c: Trail, partition: CorePartition | None = None) -> list[ValidInstance]:
    if partition is None:
        partition = core_partition(g)
    return [extract_valid_instance(g, c, block, partition) for block in partition.blocks]
