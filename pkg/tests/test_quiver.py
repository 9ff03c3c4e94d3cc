import pytest

from taumap.quiver import Quiver, QuiverError

TWO_CYCLE = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)])
LINE = Quiver([1, 2], [("a", 1, 2)])
LOOP = Quiver([1], [("x", 1, 1)])


def test_components():
    assert Quiver([1]).components() == [(1,)]
    assert [set(b) for b in TWO_CYCLE.components()] == [{1, 2}]
    q = Quiver([1, 2, 3], [("a", 1, 2)])
    assert [set(b) for b in q.components()] == [{1, 2}, {3}]
    assert not q.is_connected()


def test_is_acyclic():
    assert LINE.is_acyclic()
    assert not TWO_CYCLE.is_acyclic()
    assert not LOOP.is_acyclic()


def test_sources_and_sinks():
    assert LINE.sources_and_sinks() == ({1}, {2})
    assert TWO_CYCLE.sources_and_sinks() == (set(), set())
    q = Quiver([1, 2, 3], [("a", 1, 2)])
    so, si = q.sources_and_sinks()
    assert 3 in so and 3 in si


def test_oriented_cycle_type():
    assert TWO_CYCLE.oriented_cycle_type() == 2
    assert LOOP.oriented_cycle_type() == 1
    assert LINE.oriented_cycle_type() is None
    assert Quiver([1, 2, 3], [("a", 1, 2), ("b", 2, 1), ("c", 3, 2)]).oriented_cycle_type() is None


def test_full_subquiver():
    q = Quiver([1, 2, 3], [("a", 1, 2), ("b", 2, 1), ("c", 3, 2)])
    assert q.full_subquiver({1, 2}) == TWO_CYCLE
    assert q.full_subquiver(q.vertices) == q
    assert LINE.full_subquiver({1}) == Quiver([1])


def test_opposite_and_parallel():
    q = Quiver([1, 2], [("a", 1, 2), ("b", 1, 2), ("c", 2, 2)])
    assert q.opposite().arrow("a").source == 2
    assert q.opposite().opposite() == q
    assert q.identify_parallel_arrows() == {(1, 2), (2, 2)}


def test_invalid_quivers():
    with pytest.raises(QuiverError):
        Quiver([1, 1])
    with pytest.raises(QuiverError):
        Quiver([1, 2], [("a", 1, 2), ("a", 2, 1)])
    with pytest.raises(QuiverError):
        Quiver([1], [("a", 1, 5)])


def test_mixed_id_order():
    q = Quiver(["x", 2, 1])
    assert q.vertices == (1, 2, "x")
