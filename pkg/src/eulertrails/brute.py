"""Exhaustive trail enumeration and seeded random instances.

Everything here is deliberately naive; it is the ground truth the decision
procedure is checked against.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .algebra import GroupOracle, Word, free_reduce
from .euler import Trail, trail_exists, trail_label
from .graph import Arc, Edge, LabeledGraph, connected_components

DEFAULT_CAP = 100_000


class EnumerationOverflow(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} Eulerian trails")
        self.cap = cap


def iter_trails(g: LabeledGraph, a: str, b: str) -> Iterator[Trail]:
    """Every Eulerian a->b trail once, in lexicographic arc order."""
    for x in (a, b):
        g.incident(x)
    m = len(g)
    out = {x: g.out_arcs(x) for x in g.vertices}
    used: set[str] = set()
    path: list[Arc] = []

    def extend(x: str) -> Iterator[Trail]:
        if len(path) == m:
            if x == b:
                yield Trail(tuple(path), a, b)
            return
        for arc in out[x]:
            if arc.edge in used:
                continue
            used.add(arc.edge)
            path.append(arc)
            yield from extend(g.head(arc))
            path.pop()
            used.discard(arc.edge)

    yield from extend(a)


def count_trails(g: LabeledGraph, a: str, b: str) -> int:
    """Number of Eulerian a->b trails, memoized on (vertex, used edges)."""
    for x in (a, b):
        g.incident(x)
    bit = {eid: 1 << i for i, eid in enumerate(g.edge_ids)}
    full = (1 << len(g)) - 1
    out = {x: [(bit[arc.edge], g.head(arc)) for arc in g.out_arcs(x)] for x in g.vertices}

    @lru_cache(maxsize=None)
    def count(x: str, used: int) -> int:
        if used == full:
            return int(x == b)
        return sum(count(y, used | m) for m, y in out[x] if not used & m)

    return count(a, 0)


def enumerate_trails(g: LabeledGraph, a: str, b: str, cap: int = DEFAULT_CAP) -> list[Trail]:
    if cap < 1:
        raise ValueError("cap must be positive")
    trails = []
    for t in iter_trails(g, a, b):
        if len(trails) == cap:
            raise EnumerationOverflow(cap)
        trails.append(t)
    return trails


def distinct_labels(
    g: LabeledGraph, oracle: GroupOracle, a: str, b: str, cap: int = DEFAULT_CAP
) -> tuple[int, list[Word]]:
    """Number of trails and one representative word per distinct group element."""
    trails = enumerate_trails(g, a, b, cap)
    reps: list[Word] = []
    seen_words: set[Word] = set()
    for t in trails:
        w = free_reduce(trail_label(g, t))
        if w in seen_words:
            continue
        seen_words.add(w)
        if not any(oracle.equals(w, r) for r in reps):
            reps.append(w)
    return len(trails), reps


VACUOUS = "vacuous"


def all_labels_equal(
    g: LabeledGraph, oracle: GroupOracle, a: str, b: str, cap: int = DEFAULT_CAP
) -> bool | str:
    """True/False, or ``VACUOUS`` when no Eulerian a->b trail exists.

    Stops at the first trail whose label differs from the first one.
    """
    first: Word | None = None
    checked: set[Word] = set()
    count = 0
    for t in iter_trails(g, a, b):
        count += 1
        if count > cap:
            raise EnumerationOverflow(cap)
        w = free_reduce(trail_label(g, t))
        if first is None:
            first = w
            checked.add(w)
            continue
        if w in checked:
            continue
        if not oracle.equals(w, first):
            return False
        checked.add(w)
    return VACUOUS if first is None else True


@dataclass(frozen=True)
class InstanceParams:
    vertex_count: int = 4
    edge_count: int = 8
    max_label_length: int = 2
    force_eulerian: bool = True
    endpoints: str = "same"  # or "distinct"


def random_word(rng: random.Random, generator_count: int, max_length: int) -> Word:
    if generator_count == 0:
        return ()
    length = rng.randint(0, max_length)
    return tuple(rng.randint(1, generator_count) * rng.choice((1, -1)) for _ in range(length))


def random_instance(
    seed: int, params: InstanceParams, oracle: GroupOracle, max_tries: int = 1000
) -> tuple[LabeledGraph, str, str]:
    """A seeded random labeled multigraph with chosen endpoints.

    With ``force_eulerian`` the degree sequence and connectivity are repaired
    by adding edges, and samples whose repaired size exceeds ``edge_count``
    are redrawn (from the same seeded stream).
    """
    n, m = params.vertex_count, params.edge_count
    if n < 1 or m < 0:
        raise ValueError("need at least one vertex and a non-negative edge count")
    if params.endpoints not in ("same", "distinct"):
        raise ValueError("endpoints must be 'same' or 'distinct'")
    if params.endpoints == "distinct" and (n < 2 or m < 1):
        raise ValueError("distinct endpoints need two vertices and an edge")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    for _ in range(max_tries):
        a = rng.choice(names)
        if params.endpoints == "same":
            b = a
        else:
            b = rng.choice([x for x in names if x != a])
        base = rng.randint(0, m)
        ends = [(rng.choice(names), rng.choice(names)) for _ in range(base)]
        if params.force_eulerian:
            ends = _repair(rng, names, ends, a, b)
            if len(ends) > m:
                continue
        edges = [
            Edge(f"e{i:02d}", u, v, random_word(rng, oracle.generator_count, params.max_label_length))
            for i, (u, v) in enumerate(ends)
        ]
        g = LabeledGraph(edges, names)
        if params.force_eulerian and not trail_exists(g, a, b):  # pragma: no cover
            continue
        return g, a, b
    raise ValueError(f"no instance with these parameters after {max_tries} draws")


def _repair(rng: random.Random, names: list[str], ends: list[tuple[str, str]], a: str, b: str) -> list[tuple[str, str]]:
    ends = list(ends)
    g = LabeledGraph([Edge(str(i), u, v) for i, (u, v) in enumerate(ends)], names)
    # join every component carrying an edge (plus a's and b's) into one
    comps = connected_components(g)
    wanted = [c for c in comps if a in c or b in c or any(g.degree(x) for x in c)]
    for c1, c2 in zip(wanted, wanted[1:]):
        ends.append((rng.choice(c1), rng.choice(c2)))
    degree = {x: 0 for x in names}
    for u, v in ends:
        degree[u] += 1
        degree[v] += 1
    target = {x: (a != b and x in (a, b)) for x in names}
    bad = [x for x in names if (degree[x] % 2 == 1) != target[x]]
    rng.shuffle(bad)
    for u, v in zip(bad[::2], bad[1::2]):
        ends.append((u, v))
    return ends
