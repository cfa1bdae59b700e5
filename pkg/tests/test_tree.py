"""Tree structure, nearest-neighbour queries, and path extraction."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrtkit import Config, Tree, metric, path_length

coords = st.floats(min_value=-1000, max_value=1000, allow_nan=False, allow_infinity=False)


def chain_tree(points: list[tuple[float, float]]) -> Tree:
    t = Tree(Config(*points[0]))
    for i, pt in enumerate(points[1:]):
        t.add_node(Config(*pt), i)
    return t


def test_init_single_node():
    t = Tree(Config(10, 10))
    assert len(t) == 1
    assert t.node(0) == Config(10, 10)
    assert t.parent(0) == -1
    assert t.as_records() == [{"id": 0, "x": 10.0, "y": 10.0, "parent": None}]


def test_init_nearest_is_root():
    t = Tree(Config(10, 10))
    assert t.nearest_neighbour(Config(99, 99)) == 0


def test_init_path_is_root_only():
    t = Tree(Config(10, 10))
    assert t.extract_path(0) == [Config(10, 10)]


def test_add_node_returns_next_id():
    t = Tree(Config(0, 0))
    node_id = t.add_node(Config(5, 5), 0)
    assert node_id == 1
    assert len(t) == 2


def test_add_node_then_path_of_two():
    t = Tree(Config(0, 0))
    t.add_node(Config(5, 5), 0)
    assert t.extract_path(1) == [Config(0, 0), Config(5, 5)]


def test_sequential_chain_parents():
    t = chain_tree([(0, 0), (1, 0), (2, 0), (3, 0)])
    for k in (1, 2, 3):
        assert t.parent(k) == k - 1


def test_add_node_rejects_bad_parent():
    t = Tree(Config(0, 0))
    with pytest.raises(ValueError):
        t.add_node(Config(1, 1), 5)
    with pytest.raises(ValueError):
        t.add_node(Config(1, 1), -1)


def test_nearest_closer_of_two():
    t = Tree(Config(0, 0))
    t.add_node(Config(10, 0), 0)
    # sqrt(10) to node 0 versus sqrt(50) to node 1
    assert t.nearest_neighbour(Config(3, 1)) == 0


def test_nearest_tie_breaks_to_smallest_id():
    t = Tree(Config(0, 0))
    t.add_node(Config(10, 0), 0)
    assert t.nearest_neighbour(Config(5, 0)) == 0


def test_nearest_single_node():
    t = Tree(Config(2, 3))
    assert t.nearest_neighbour(Config(-500, 800)) == 0


def test_nearest_matches_exhaustive_scan_bulk():
    rng = np.random.default_rng(42)
    for _ in range(200):
        n = int(rng.integers(1, 60))
        pts = rng.uniform(-100, 100, size=(n, 2))
        t = Tree(Config(*pts[0]))
        for pt in pts[1:]:
            t.add_node(Config(*pt), int(rng.integers(0, len(t))))
        q = Config(*rng.uniform(-120, 120, 2))
        best = min(range(n), key=lambda i: (metric(t.node(i), q), i))
        assert t.nearest_neighbour(q) == best


def test_nearest_distance_matches_nearest_neighbour():
    rng = np.random.default_rng(5)
    pts = rng.uniform(-50, 50, size=(20, 2))
    t = Tree(Config(*pts[0]))
    for pt in pts[1:]:
        t.add_node(Config(*pt), 0)
    q = Config(3, -8)
    assert t.nearest_distance(q) == pytest.approx(metric(t.node(t.nearest_neighbour(q)), q), abs=1e-12)


def test_extract_path_chain_order():
    t = chain_tree([(0, 0), (20, 0), (40, 0)])
    path = t.extract_path(2)
    assert path == [Config(0, 0), Config(20, 0), Config(40, 0)]
    assert path_length(path) == pytest.approx(40.0, abs=1e-12)


def test_extract_path_branching():
    t = Tree(Config(0, 0))
    t.add_node(Config(10, 0), 0)
    t.add_node(Config(0, 10), 0)
    t.add_node(Config(0, 20), 2)
    assert t.extract_path(3) == [Config(0, 0), Config(0, 10), Config(0, 20)]


def test_extract_path_rejects_bad_id():
    t = Tree(Config(0, 0))
    with pytest.raises(ValueError):
        t.extract_path(1)


def test_path_length_single():
    assert path_length([Config(0, 0)]) == 0.0


def test_path_length_one_edge():
    assert path_length([Config(0, 0), Config(3, 4)]) == 5.0


def test_path_length_two_edges():
    assert path_length([Config(0, 0), Config(20, 0), Config(20, 15)]) == pytest.approx(35.0, abs=1e-12)


@given(st.lists(st.tuples(coords, coords), min_size=1, max_size=20))
def test_path_length_reversal_invariant(points):
    path = [Config(x, y) for x, y in points]
    assert path_length(path) == pytest.approx(path_length(list(reversed(path))), rel=1e-12, abs=1e-9)


@given(st.lists(st.tuples(coords, coords), min_size=2, max_size=40), st.randoms(use_true_random=False))
def test_parent_invariants_after_random_builds(points, rnd):
    t = Tree(Config(*points[0]))
    for pt in points[1:]:
        t.add_node(Config(*pt), rnd.randrange(len(t)))
    for k in range(1, len(t)):
        assert t.parent(k) < k
    # every parent chain terminates at the root within size steps
    for k in range(len(t)):
        steps = 0
        i = k
        while i != 0:
            i = t.parent(i)
            steps += 1
            assert steps <= len(t)
    records = t.as_records()
    assert [r["id"] for r in records] == list(range(len(t)))
    assert records[0]["parent"] is None
    assert all(records[k]["parent"] == t.parent(k) for k in range(1, len(t)))


def test_capacity_growth_preserves_contents():
    t = Tree(Config(0, 0))
    for i in range(1, 600):
        t.add_node(Config(float(i), float(-i)), i - 1)
    assert len(t) == 600
    assert t.node(599) == Config(599.0, -599.0)
    assert t.parent(599) == 598
    assert t.nearest_neighbour(Config(599.2, -599.2)) == 599


def test_extract_path_consecutive_pairs_are_parent_child():
    t = Tree(Config(0, 0))
    ids = [0]
    for i in range(1, 30):
        ids.append(t.add_node(Config(float(i), math.sin(i)), ids[i // 2]))
    path = t.extract_path(ids[-1])
    assert path[0] == t.node(0)
    assert path[-1] == t.node(ids[-1])
