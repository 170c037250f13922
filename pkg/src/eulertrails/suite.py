"""The seeded random instance family used by the acceptance runs and scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import CyclicOracle, ElementaryAbelianOracle, FreeGroupOracle, GroupOracle, symmetric3
from .brute import InstanceParams, count_trails, random_instance, random_word
from .graph import Edge, LabeledGraph

BACKENDS = ("z2^2", "z6", "s3", "free2")

# redraw instances with more Eulerian trails than this, to keep brute force cheap
TRAIL_BUDGET = 20_000


def make_oracle(name: str) -> GroupOracle:
    if name == "z2^2":
        return ElementaryAbelianOracle(2)
    if name == "z6":
        return CyclicOracle(6)
    if name == "s3":
        return symmetric3()
    if name == "free2":
        return FreeGroupOracle(2)
    raise ValueError(f"unknown backend {name!r}")


@dataclass
class SuiteInstance:
    seed: int
    backend: str
    params: InstanceParams
    graph: LabeledGraph
    a: str
    b: str

    def oracle(self) -> GroupOracle:
        """A fresh oracle, so its counters only see one run."""
        return make_oracle(self.backend)


def suite_instance(seed: int, max_edges: int = 10, max_label_length: int = 2) -> SuiteInstance:
    """Instance ``seed`` of the family: backends rotate with the seed, sizes
    and endpoint modes are drawn from the seed; one draw in eight skips the
    Eulerian repair so vacuous answers are covered too.  Draws with more
    than ``TRAIL_BUDGET`` Eulerian trails are replaced by the next draw."""
    backend = BACKENDS[seed % len(BACKENDS)]
    rng = random.Random(f"suite-{seed}")
    while True:
        distinct = rng.random() < 0.5
        params = InstanceParams(
            vertex_count=rng.randint(2 if distinct else 1, 6),
            edge_count=rng.randint(1, max_edges),
            max_label_length=max_label_length,
            force_eulerian=rng.random() >= 0.125,
            endpoints="distinct" if distinct else "same",
        )
        g, a, b = random_instance(rng.randrange(2**32), params, make_oracle(backend))
        if count_trails(g, a, b) <= TRAIL_BUDGET:
            return SuiteInstance(seed, backend, params, g, a, b)


def random_3ec_instance(
    seed: int, backend: str, vertex_count: int = 5, extra_edges: int = 4, max_label_length: int = 2
) -> tuple[LabeledGraph, str, str]:
    """A 3-edge-connected graph with an Eulerian a->b trail.

    A cycle of tripled edges through all vertices (three parallel edges when
    there are two) plus random chords, then parity repair between the
    vertices with the wrong degree parity.
    """
    rng = random.Random(f"3ec-{seed}")
    oracle = make_oracle(backend)
    names = [f"x{i}" for i in range(vertex_count)]
    ends: list[tuple[str, str]] = []
    if vertex_count == 2:
        ends += [(names[0], names[1])] * 3
    elif vertex_count > 2:
        for i in range(vertex_count):
            ends += [(names[i], names[(i + 1) % vertex_count])] * 3
    ends += [(rng.choice(names), rng.choice(names)) for _ in range(rng.randint(0, extra_edges))]
    a = rng.choice(names)
    b = rng.choice(names) if rng.random() < 0.5 else a
    degree = {x: 0 for x in names}
    for u, v in ends:
        degree[u] += 1
        degree[v] += 1
    bad = [x for x in names if (degree[x] % 2 == 1) != (a != b and x in (a, b))]
    rng.shuffle(bad)
    ends += list(zip(bad[::2], bad[1::2]))
    edges = [
        Edge(f"e{i:02d}", u, v, random_word(rng, oracle.generator_count, max_label_length))
        for i, (u, v) in enumerate(ends)
    ]
    return LabeledGraph(edges, names), a, b


def random_connected_graph(
    seed: int, backend: str, vertex_count: int = 6, extra_edges: int = 6, max_label_length: int = 3
) -> LabeledGraph:
    """A random spanning tree plus random extra edges (loops and parallels allowed)."""
    rng = random.Random(f"connected-{seed}")
    oracle = make_oracle(backend)
    names = [f"x{i}" for i in range(vertex_count)]
    ends = [(names[rng.randrange(i)], names[i]) for i in range(1, vertex_count)]
    ends += [(rng.choice(names), rng.choice(names)) for _ in range(rng.randint(0, extra_edges))]
    rng.shuffle(ends)
    edges = [
        Edge(f"e{i:02d}", *(uv if rng.random() < 0.5 else uv[::-1]), random_word(rng, oracle.generator_count, max_label_length))
        for i, uv in enumerate(ends)
    ]
    return LabeledGraph(edges, names)
