from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulertrails.algebra import FreeGroupOracle, symmetric3
from eulertrails.brute import (
    VACUOUS,
    EnumerationOverflow,
    InstanceParams,
    all_labels_equal,
    count_trails,
    distinct_labels,
    enumerate_trails,
    random_instance,
)
from eulertrails.euler import empty_trail, is_eulerian, trail_exists, trail_label
from eulertrails.graph import Arc, Edge, LabeledGraph

from .strategies import eulerian_instances, labeled_graphs


def parallel(k):
    return LabeledGraph([Edge(f"e{i}", "u", "v", (i + 1,)) for i in range(k)])


def test_enumerate_examples(loaded):
    assert enumerate_trails(LabeledGraph([], ["x"]), "x", "x") == [empty_trail("x")]
    loop = LabeledGraph([Edge("l", "x", "x", (1,))])
    assert [t.arcs for t in enumerate_trails(loop, "x", "x")] == [(Arc("l"),), (Arc("l", True),)]
    p = loaded("doubled_path.graph")
    trails = enumerate_trails(p.graph, "u0", "u0")
    assert trails
    for t in trails:
        # (123)(12) read left to right
        assert p.oracle.equals(trail_label(p.graph, t), (1, 2))


@pytest.mark.parametrize("k", [2, 4, 6])
def test_parallel_edges_count(k):
    # a closed trail at u alternates u->v->u and may take the edges in any order
    g = parallel(k)
    assert len(enumerate_trails(g, "u", "u")) == factorial(k)
    assert count_trails(g, "u", "u") == factorial(k)


def test_enumeration_is_lexicographic():
    g = parallel(4)
    trails = enumerate_trails(g, "u", "u")
    keys = [t.arcs for t in trails]
    assert keys == sorted(keys)


def test_all_labels_equal_examples(loaded):
    p = loaded("three_cores.graph")
    assert all_labels_equal(p.graph, p.oracle, "a", "b") is True
    p = loaded("three_parallel.graph")
    assert all_labels_equal(p.graph, p.oracle, "u", "v") is False
    g = LabeledGraph([Edge("l1", "x", "x"), Edge("l2", "y", "y")])
    assert all_labels_equal(g, symmetric3(), "x", "x") == VACUOUS


def test_distinct_labels_uses_the_oracle():
    # two loops whose labels are different words for the same element of S3
    g = LabeledGraph([Edge("l1", "x", "x", (2,)), Edge("l2", "x", "x", (-2,))])
    count, reps = distinct_labels(g, symmetric3(), "x", "x")
    assert count == 8
    assert len(reps) == 1
    count, reps = distinct_labels(g, FreeGroupOracle(2), "x", "x")
    assert len(reps) == 3  # s^2, s^-2 and the empty word


def test_overflow():
    with pytest.raises(EnumerationOverflow) as info:
        enumerate_trails(parallel(6), "u", "u", cap=100)
    assert info.value.cap == 100
    with pytest.raises(EnumerationOverflow):
        all_labels_equal(parallel(6).relabeled({f"e{i}": () for i in range(6)}), symmetric3(), "u", "u", cap=10)
    with pytest.raises(ValueError):
        enumerate_trails(parallel(2), "u", "u", cap=0)


@settings(max_examples=100, deadline=None)
@given(eulerian_instances(budget=3000))
def test_enumeration_sound_and_complete(case):
    _, g, a, b = case
    trails = enumerate_trails(g, a, b)
    assert len(set(trails)) == len(trails) == count_trails(g, a, b)
    assert all(is_eulerian(g, t, a, b) for t in trails)
    assert trails


@settings(max_examples=60, deadline=None)
@given(labeled_graphs(max_vertices=3, max_edges=5), st.data())
def test_count_matches_existence(g, data):
    a = data.draw(st.sampled_from(g.vertices))
    b = data.draw(st.sampled_from(g.vertices))
    assert (count_trails(g, a, b) > 0) == trail_exists(g, a, b)


@pytest.mark.parametrize("endpoints", ["same", "distinct"])
@pytest.mark.parametrize("seed", range(20))
def test_random_instance_contract(seed, endpoints):
    o = symmetric3()
    params = InstanceParams(vertex_count=4, edge_count=8, max_label_length=2, endpoints=endpoints)
    g, a, b = random_instance(seed, params, o)
    assert (g, a, b) == random_instance(seed, params, o)
    assert trail_exists(g, a, b)
    assert len(g) <= 8
    assert (a == b) == (endpoints == "same")
    assert all(len(e.label) <= 2 for e in g.edges)


def test_random_instance_infeasible():
    with pytest.raises(ValueError):
        random_instance(0, InstanceParams(vertex_count=1, endpoints="distinct"), symmetric3())
    with pytest.raises(ValueError):
        random_instance(0, InstanceParams(endpoints="both"), symmetric3())
