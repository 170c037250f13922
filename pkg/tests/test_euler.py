import pytest
from hypothesis import given, settings

from eulertrails.algebra import invert, symmetric3
from eulertrails.brute import iter_trails
from eulertrails.euler import (
    TrailError,
    concat_trails,
    empty_trail,
    find_trail,
    insert_subcircuit,
    invert_trail,
    is_eulerian,
    make_trail,
    parse_trail,
    subcircuits,
    trail_exists,
    trail_label,
    trail_vertices,
)
from eulertrails.graph import Arc, Edge, LabeledGraph

from .strategies import eulerian_instances

CAPTION_TRAIL = "e1 e2' e3 e4 e5' e6 e7 e8"


def test_trail_exists_examples(loaded):
    g = loaded("konigsberg_plus.graph").graph
    assert trail_exists(g, "a", "b")
    assert trail_exists(g, "b", "a")
    assert not trail_exists(g, "a", "a")
    assert trail_exists(LabeledGraph([], ["x"]), "x", "x")
    assert not trail_exists(LabeledGraph([], ["x", "y"]), "x", "y")
    triangle = LabeledGraph([Edge("e1", "x", "y"), Edge("e2", "y", "z"), Edge("e3", "z", "x")])
    assert trail_exists(triangle, "x", "x")
    assert not trail_exists(triangle, "x", "y")
    # even degrees but two components
    split = LabeledGraph([Edge("l1", "x", "x"), Edge("l2", "y", "y")])
    assert not trail_exists(split, "x", "x")


def test_find_trail_examples(loaded):
    assert find_trail(LabeledGraph([], ["x"]), "x", "x") == empty_trail("x")
    loop = LabeledGraph([Edge("l", "x", "x", (1,))])
    assert find_trail(loop, "x", "x").arcs == (Arc("l"),)
    g = loaded("konigsberg_plus.graph").graph
    t = find_trail(g, "a", "b")
    assert is_eulerian(g, t, "a", "b")
    assert t in set(iter_trails(g, "a", "b"))
    with pytest.raises(TrailError):
        find_trail(g, "a", "a")


def test_caption_trail_label(loaded):
    g = loaded("konigsberg_plus.graph").graph
    t = parse_trail(g, CAPTION_TRAIL, "a")
    assert is_eulerian(g, t, "a", "b")
    assert trail_label(g, t) == (1, -2, 3, 4, -5, 6, 7, 8)


def test_is_eulerian_negatives(loaded):
    g = loaded("konigsberg_plus.graph").graph
    full = parse_trail(g, CAPTION_TRAIL, "a")
    short = make_trail(g, full.arcs[:-1], "a")
    assert not is_eulerian(g, short, "a", short.head)
    assert not is_eulerian(g, full, "a", "a")


def test_make_trail_errors(loaded):
    g = loaded("konigsberg_plus.graph").graph
    with pytest.raises(TrailError):
        parse_trail(g, "e1 e1'")
    with pytest.raises(TrailError):
        parse_trail(g, "e1 e3")
    with pytest.raises(TrailError):
        parse_trail(g, "nope")
    with pytest.raises(TrailError):
        make_trail(g, [])


def test_empty_trail_label():
    g = LabeledGraph([], ["x"])
    assert trail_label(g, empty_trail("x")) == ()


def test_concat_and_invert(loaded):
    g = loaded("konigsberg_plus.graph").graph
    t1 = parse_trail(g, "e1 e2'")
    t2 = parse_trail(g, "e3 e4")
    assert concat_trails(empty_trail("a"), t1) == t1
    assert invert_trail(concat_trails(t1, t2)) == concat_trails(invert_trail(t2), invert_trail(t1))
    with pytest.raises(TrailError):
        concat_trails(t2, t2)
    with pytest.raises(TrailError):
        concat_trails(t2, t1)


def test_flipping_a_non_involutive_circuit_changes_the_label():
    s3 = symmetric3()
    g = LabeledGraph(
        [
            Edge("t1", "a", "x", (2,)),
            Edge("c1", "x", "y", (1,)),
            Edge("c2", "y", "x", ()),
            Edge("t2", "x", "b", (2, 1)),
        ]
    )
    t1, circuit, t2 = parse_trail(g, "t1"), parse_trail(g, "c1 c2"), parse_trail(g, "t2")
    assert not s3.has_order_at_most_2(trail_label(g, circuit))
    forward = insert_subcircuit(t1, circuit, t2)
    flipped = insert_subcircuit(t1, invert_trail(circuit), t2)
    assert is_eulerian(g, forward, "a", "b") and is_eulerian(g, flipped, "a", "b")
    assert not s3.equals(trail_label(g, forward), trail_label(g, flipped))
    with pytest.raises(TrailError):
        insert_subcircuit(t1, parse_trail(g, "c1"), t2)


def test_subcircuits_are_circuits(loaded):
    g = loaded("konigsberg_plus.graph").graph
    t = parse_trail(g, CAPTION_TRAIL, "a")
    vs = trail_vertices(g, t)
    ranges = list(subcircuits(g, t))
    assert ranges
    for i, j in ranges:
        assert vs[i] == vs[j]
        assert make_trail(g, t.arcs[i:j]).is_circuit


@settings(max_examples=100, deadline=None)
@given(eulerian_instances())
def test_find_trail_is_eulerian_and_deterministic(case):
    _, g, a, b = case
    t = find_trail(g, a, b)
    assert is_eulerian(g, t, a, b)
    assert find_trail(g, a, b) == t
    rebuilt = LabeledGraph(reversed(g.edges), reversed(g.vertices))
    assert find_trail(rebuilt, a, b) == t


@settings(max_examples=100, deadline=None)
@given(eulerian_instances())
def test_reversal_symmetry(case):
    _, g, a, b = case
    t = find_trail(g, a, b)
    back = invert_trail(t)
    assert is_eulerian(g, back, b, a)
    assert trail_label(g, back) == invert(trail_label(g, t))


@settings(max_examples=100, deadline=None)
@given(eulerian_instances(budget=2000))
def test_trail_exists_matches_enumeration(case):
    _, g, a, b = case
    for x in g.vertices:
        for y in g.vertices:
            assert trail_exists(g, x, y) == any(True for _ in iter_trails(g, x, y))
