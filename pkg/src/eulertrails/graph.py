"""Group-labeled multigraphs.

Graphs are immutable values.  Every operation that changes a graph returns a
new one.  An edge stores only the label of its forward arc (``u -> v``); the
reverse arc's label is always the formal inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .algebra import Word, concat, free_reduce, invert


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str
    label: Word = ()

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other_end(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"{x!r} is not an end of edge {self.id!r}")


@dataclass(frozen=True, order=True)
class Arc:
    """One orientation of an edge; sorts by (edge id, forward before reverse)."""

    edge: str
    reverse: bool = False

    def inverse(self) -> "Arc":
        return Arc(self.edge, not self.reverse)

    def token(self) -> str:
        return self.edge + ("'" if self.reverse else "")

    @classmethod
    def from_token(cls, token: str) -> "Arc":
        if token.endswith("'"):
            return cls(token[:-1], True)
        return cls(token, False)

    def __str__(self) -> str:
        return self.token()


class LabeledGraph:
    def __init__(self, edges: Iterable[Edge] = (), vertices: Iterable[str] = ()):
        verts = set(vertices)
        emap: dict[str, Edge] = {}
        for e in edges:
            if e.id in emap:
                raise GraphError(f"duplicate edge id {e.id!r}")
            emap[e.id] = Edge(e.id, e.u, e.v, tuple(e.label))
            verts.add(e.u)
            verts.add(e.v)
        self._edges = dict(sorted(emap.items()))
        self._vertices = tuple(sorted(verts))
        inc: dict[str, list[Edge]] = {x: [] for x in self._vertices}
        for e in self._edges.values():
            inc[e.u].append(e)
            if not e.is_loop:
                inc[e.v].append(e)
        self._incident = inc

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self._edges.values())

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def has_vertex(self, x: str) -> bool:
        return x in self._incident

    def has_edge(self, eid: str) -> bool:
        return eid in self._edges

    def edge(self, eid: str) -> Edge:
        try:
            return self._edges[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid!r}") from None

    def _require_vertex(self, x: str) -> None:
        if x not in self._incident:
            raise GraphError(f"unknown vertex {x!r}")

    def incident(self, x: str) -> list[Edge]:
        """Edges at x in ascending id order; a loop appears once."""
        self._require_vertex(x)
        return list(self._incident[x])

    def degree(self, x: str) -> int:
        return sum(2 if e.is_loop else 1 for e in self.incident(x))

    def tail(self, a: Arc) -> str:
        e = self.edge(a.edge)
        return e.v if a.reverse else e.u

    def head(self, a: Arc) -> str:
        e = self.edge(a.edge)
        return e.u if a.reverse else e.v

    def arcs(self) -> list[Arc]:
        return [Arc(eid, r) for eid in self._edges for r in (False, True)]

    def out_arcs(self, x: str) -> list[Arc]:
        """Arcs with tail x, sorted; a loop contributes both its arcs."""
        out = []
        for e in self.incident(x):
            if e.is_loop:
                out.append(Arc(e.id, False))
                out.append(Arc(e.id, True))
            elif e.u == x:
                out.append(Arc(e.id, False))
            else:
                out.append(Arc(e.id, True))
        return out

    @property
    def total_word_length(self) -> int:
        return sum(len(e.label) for e in self._edges.values())

    def labels(self) -> dict[str, Word]:
        return {eid: e.label for eid, e in self._edges.items()}

    # structural edits, each returning a new graph

    def with_edges(self, edges: Iterable[Edge]) -> "LabeledGraph":
        return LabeledGraph(list(self._edges.values()) + list(edges), self._vertices)

    def without_edges(self, eids: Iterable[str]) -> "LabeledGraph":
        drop = set(eids)
        for eid in drop:
            self.edge(eid)
        return LabeledGraph([e for e in self._edges.values() if e.id not in drop], self._vertices)

    def without_vertex(self, x: str) -> "LabeledGraph":
        self._require_vertex(x)
        return LabeledGraph(
            [e for e in self._edges.values() if x not in (e.u, e.v)],
            [y for y in self._vertices if y != x],
        )

    def induced(self, xs: Iterable[str]) -> "LabeledGraph":
        keep = set(xs)
        return LabeledGraph(
            [e for e in self._edges.values() if e.u in keep and e.v in keep], keep
        )

    def relabeled(self, labels: Mapping[str, Word]) -> "LabeledGraph":
        return LabeledGraph(
            [Edge(e.id, e.u, e.v, tuple(labels.get(e.id, e.label))) for e in self._edges.values()],
            self._vertices,
        )

    def reduced(self) -> "LabeledGraph":
        """Same graph with every label freely reduced."""
        return self.relabeled({eid: free_reduce(e.label) for eid, e in self._edges.items()})

    def fresh_edge_id(self, base: str) -> str:
        if base not in self._edges:
            return base
        n = 2
        while f"{base}~{n}" in self._edges:
            n += 1
        return f"{base}~{n}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._edges.values())))

    def __repr__(self) -> str:
        return f"LabeledGraph(|V|={len(self._vertices)}, |E|={len(self._edges)})"


def arc_label(g: LabeledGraph, a: Arc) -> Word:
    label = g.edge(a.edge).label
    return invert(label) if a.reverse else label


@dataclass(frozen=True)
class Shifting:
    """Per-vertex shift words; vertices not listed shift by the identity."""

    words: Mapping[str, Word] = field(default_factory=dict)

    def at(self, x: str) -> Word:
        return self.words.get(x, ())

    @property
    def difference(self) -> int:
        return max((len(w) for w in self.words.values()), default=0)

    def merged(self, other: "Shifting") -> "Shifting":
        overlap = set(self.words) & set(other.words)
        if any(self.words[x] != other.words[x] for x in overlap):
            raise GraphError("shiftings disagree on a shared vertex")
        return Shifting({**self.words, **other.words})


def shift_at(g: LabeledGraph, x: str, alpha: Word) -> LabeledGraph:
    g._require_vertex(x)
    return apply_shifting(g, Shifting({x: tuple(alpha)}))


def apply_shifting(g: LabeledGraph, s: Shifting) -> LabeledGraph:
    """Forward arc u->v becomes alpha_u + label + alpha_v^-1 (no reduction)."""
    new = {}
    for e in g.edges:
        au, av = s.at(e.u), s.at(e.v)
        if au or av:
            new[e.id] = concat(au, e.label, invert(av))
    return g.relabeled(new)


def split_off(g: LabeledGraph, a1: Arc, a2: Arc) -> tuple[LabeledGraph, str]:
    if a1.edge == a2.edge:
        raise GraphError("cannot split off two arcs of the same edge")
    if g.head(a1) != g.tail(a2):
        raise GraphError(f"head of {a1} is not the tail of {a2}")
    new_id = g.fresh_edge_id(f"{a1.edge}*{a2.edge}")
    new_edge = Edge(new_id, g.tail(a1), g.head(a2), concat(arc_label(g, a1), arc_label(g, a2)))
    return g.without_edges([a1.edge, a2.edge]).with_edges([new_edge]), new_id


def smooth(g: LabeledGraph, x: str) -> LabeledGraph:
    inc = g.incident(x)
    if len(inc) != 2 or any(e.is_loop for e in inc):
        return g
    e1, e2 = inc
    into = Arc(e1.id, reverse=(e1.v != x))
    out = Arc(e2.id, reverse=(e2.u != x))
    new_edge = Edge(
        g.fresh_edge_id(f"{e1.id}*{e2.id}"),
        g.tail(into),
        g.head(out),
        concat(arc_label(g, into), arc_label(g, out)),
    )
    return g.without_vertex(x).with_edges([new_edge])


def delete_edge(g: LabeledGraph, eid: str) -> LabeledGraph:
    return g.without_edges([eid])


def delta(g: LabeledGraph, xs: Iterable[str]) -> list[Edge]:
    side = set(xs)
    return [e for e in g.edges if (e.u in side) != (e.v in side)]


def _adjacency(g: LabeledGraph) -> dict[str, list[tuple[str, str]]]:
    adj: dict[str, list[tuple[str, str]]] = {x: [] for x in g.vertices}
    for e in g.edges:
        if not e.is_loop:
            adj[e.u].append((e.id, e.v))
            adj[e.v].append((e.id, e.u))
    return adj


def edge_connectivity_at_least(g: LabeledGraph, u: str, v: str, k: int) -> bool:
    """True iff there are k pairwise edge-disjoint u-v paths.

    Unit-capacity augmenting paths in the undirected multigraph; stops after
    k successful rounds.
    """
    g._require_vertex(u)
    g._require_vertex(v)
    if u == v:
        raise GraphError("edge connectivity needs two distinct vertices")
    if k <= 0:
        return True
    adj = _adjacency(g)
    ends = {e.id: e.u for e in g.edges}
    flow: dict[str, int] = {}  # +1 means one unit sent from edge.u to edge.v

    def residual(eid: str, frm: str) -> int:
        f = flow.get(eid, 0)
        return 1 - f if ends[eid] == frm else 1 + f

    for _ in range(k):
        parent: dict[str, tuple[str, str]] = {u: ("", "")}
        queue = deque([u])
        while queue and v not in parent:
            x = queue.popleft()
            for eid, y in adj[x]:
                if y not in parent and residual(eid, x) > 0:
                    parent[y] = (eid, x)
                    queue.append(y)
        if v not in parent:
            return False
        y = v
        while y != u:
            eid, x = parent[y]
            flow[eid] = flow.get(eid, 0) + (1 if ends[eid] == x else -1)
            y = x
    return True


def connected_components(g: LabeledGraph) -> list[list[str]]:
    adj = _adjacency(g)
    seen: set[str] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for _, y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: LabeledGraph) -> bool:
    return len(connected_components(g)) <= 1


def iter_bfs_tree(g: LabeledGraph, root: str) -> Iterator[tuple[str, Arc | None]]:
    """Yield (vertex, arc from its parent) in breadth-first order.

    Neighbours are explored in ascending edge-id order; the root comes with
    ``None``.
    """
    g._require_vertex(root)
    seen = {root}
    queue = deque([root])
    yield root, None
    while queue:
        x = queue.popleft()
        for a in g.out_arcs(x):
            y = g.head(a)
            if y not in seen:
                seen.add(y)
                queue.append(y)
                yield y, a


def is_three_edge_connected(g: LabeledGraph) -> bool:
    """No proper nonempty vertex set has at most two crossing edges."""
    vs = g.vertices
    if len(vs) <= 1:
        return True
    if any(g.degree(x) - 2 * sum(e.is_loop for e in g.incident(x)) < 3 for x in vs):
        return False
    # pairwise connectivity >= 3 is transitive, so one root suffices
    return all(edge_connectivity_at_least(g, vs[0], y, 3) for y in vs[1:])
