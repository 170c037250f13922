import pytest
from hypothesis import given, settings

from eulertrails.algebra import symmetric3
from eulertrails.brute import distinct_labels, iter_trails
from eulertrails.decide import PreconditionError, VerdictKind, decide
from eulertrails.euler import empty_trail, invert_trail, is_eulerian, make_trail, trail_label
from eulertrails.graph import Arc, Edge, LabeledGraph
from eulertrails.witness import find_witness, validate_witness

from .strategies import eulerian_instances, fresh


def no_instances(case):
    o, g, a, b = case
    return decide(g, o, a, b).kind is VerdictKind.NO


def test_single_loop():
    s3 = symmetric3()
    g = LabeledGraph([Edge("l", "x", "x", (1,))])
    w = find_witness(g, s3, "x", "x")
    assert w.before == empty_trail("x") and w.after == empty_trail("x")
    assert w.circuit.edge_ids == ("l",)
    assert validate_witness(g, s3, "x", "x", w)


def test_three_parallel(loaded):
    p = loaded("three_parallel.graph")
    g, s3 = p.graph, p.oracle
    w = find_witness(g, s3, "u", "v")
    assert len(w.circuit) == 2
    assert "e3" in w.circuit.edge_ids
    assert not s3.has_order_at_most_2(trail_label(g, w.circuit))
    assert validate_witness(g, s3, "u", "v", w)
    full, flipped = w.labels(g)
    assert {tuple(s3.evaluate(full)), tuple(s3.evaluate(flipped))} == {
        tuple(s3.evaluate((1,))),
        tuple(s3.evaluate((-1,))),
    }
    assert {t for t in iter_trails(g, "u", "v")} >= {w.trail, w.flipped_trail}


def test_broken_three_cores(loaded):
    p = loaded("three_cores_broken.graph")
    g, s3 = p.graph, p.oracle
    w = find_witness(g, s3, "a", "b")
    assert validate_witness(g, s3, "a", "b", w)
    touched = {x for eid in w.circuit.edge_ids for x in (g.edge(eid).u, g.edge(eid).v)}
    assert touched <= {"v1", "v2"}
    _, reps = distinct_labels(g, s3, "a", "b")
    assert len(reps) >= 2


def test_yes_instance_rejected(loaded):
    p = loaded("three_cores.graph")
    with pytest.raises(PreconditionError):
        find_witness(p.graph, p.oracle, "a", "b")


def test_validate_rejects_bad_witnesses(loaded):
    p = loaded("three_parallel.graph")
    g, s3 = p.graph, p.oracle
    w = find_witness(g, s3, "u", "v")
    # an involutive circuit in place of L
    g2 = g.relabeled({"e3": (2,)})
    assert not validate_witness(g2, s3, "u", "v", w)
    # a graph with one more edge: T1 L T2 no longer covers it
    bigger = g.with_edges([Edge("extra", "u", "u")])
    assert not validate_witness(bigger, s3, "u", "v", w)
    # wrong endpoints
    assert not validate_witness(g, s3, "v", "u", w)


def test_circuit_flip_is_eulerian(loaded):
    p = loaded("three_cores_broken.graph")
    g = p.graph
    w = find_witness(g, p.oracle, "a", "b")
    assert w.flipped_trail.arcs[len(w.before) : len(w.before) + len(w.circuit)] == invert_trail(w.circuit).arcs
    assert is_eulerian(g, w.flipped_trail, "a", "b")


@settings(max_examples=80, deadline=None)
@given(eulerian_instances(budget=2000).filter(no_instances))
def test_witness_valid(case):
    o, g, a, b = case
    w = find_witness(g, fresh(o), a, b)
    assert validate_witness(g, o, a, b, w)
    assert len(w.final_graph) <= 3


@settings(max_examples=40, deadline=None)
@given(eulerian_instances(max_edges=7, budget=500).filter(no_instances))
def test_split_off_soundness(case):
    o, g, a, b = case
    w = find_witness(g, o, a, b)
    prev = g
    for step in w.steps:
        _, before = distinct_labels(prev, o, a, b)
        _, after = distinct_labels(step.graph, o, a, b)
        assert len(after) >= 2
        assert all(any(o.equals(x, y) for y in before) for x in after)
        prev = step.graph


@settings(max_examples=60, deadline=None)
@given(eulerian_instances(budget=2000).filter(no_instances))
def test_provenance_duality_and_monotone_forbidding(case):
    o, g, a, b = case
    w = find_witness(g, o, a, b)
    for eid, t in w.provenance.items():
        assert make_trail(g, t.arcs).arcs == t.arcs
        assert invert_trail(invert_trail(t)) == t
        if w.final_graph is not None and w.final_graph.has_edge(eid):
            e = w.final_graph.edge(eid)
            assert (t.tail, t.head) == (e.u, e.v)
            assert trail_label(g, t) == e.label
            assert trail_label(g, invert_trail(t)) == trail_label(w.final_graph, make_trail(w.final_graph, [Arc(eid, True)]))
    rejected = set()
    for key, accepted in w.attempts:
        assert key not in rejected
        if not accepted:
            rejected.add(key)
    assert rejected == set(w.forbidden)
