import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grounded.range_maxima import VARIANTS, WeightedPoint, build, fanout_for


def workload(seed, n_points, n_ops, coord=None, wmax=20):
    rng = random.Random(seed)
    coord = coord or n_points
    cells = rng.sample([(x, y) for x in range(1, coord + 1) for y in range(1, coord + 1)], n_points)
    points = [WeightedPoint(i, x, y) for i, (x, y) in enumerate(cells)]
    ops = []
    for _ in range(n_ops):
        if points and rng.random() < 0.5:
            ops.append(("set", rng.randrange(n_points), rng.randint(0, wmax)))
        else:
            xa, xb = sorted(rng.randint(0, coord + 1) for _ in range(2))
            ya, yb = sorted(rng.randint(0, coord + 1) for _ in range(2))
            ops.append(("query", xa, xb, ya, yb))
    return points, ops


def replay(points, ops, variant, eps=0.5):
    idx = build(points, variant, eps)
    out = []
    for op in ops:
        if op[0] == "set":
            idx.set_weight(op[1], op[2])
        else:
            out.append(idx.query_max(*op[1:]))
    return out


def scan(points, weights, xa, xb, ya, yb):
    best = None
    for p in points:
        w = weights.get(p.point_id, 0)
        if w and xa <= p.x <= xb and ya <= p.y <= yb:
            if best is None or w > best[1] or (w == best[1] and p.point_id < best[0]):
                best = (p.point_id, w)
    return best


@pytest.mark.parametrize("variant", VARIANTS)
def test_examples(variant):
    assert build([], variant).query_max(0, 10, 0, 10) is None
    one = build([WeightedPoint("p", 1, 1, 5)], variant)
    assert one.query_max(1, 1, 1, 1) == ("p", 5)
    assert one.query_max(2, 3, 1, 1) is None
    two = build([WeightedPoint(1, 1, 1, 5), WeightedPoint(2, 3, 2, 7)], variant)
    assert two.query_max(0, 2, 0, 3) == (1, 5)
    assert two.query_max(0, 4, 0, 4) == (2, 7)
    two.set_weight(2, 0)
    assert two.query_max(0, 4, 0, 4) == (1, 5)
    two.set_weight(1, 9)
    assert two.query_max(1, 1, 1, 1) == (1, 9)


@pytest.mark.parametrize("variant", VARIANTS)
def test_errors(variant):
    with pytest.raises(ValueError):
        build([WeightedPoint(1, 1, 1), WeightedPoint(2, 1, 1)], variant)
    idx = build([WeightedPoint(1, 1, 1)], variant)
    with pytest.raises(KeyError):
        idx.set_weight(99, 3)
    with pytest.raises(ValueError):
        idx.set_weight(1, -1)


@pytest.mark.parametrize("variant", VARIANTS)
def test_ties_go_to_smallest_id(variant):
    idx = build([WeightedPoint(5, 1, 1, 4), WeightedPoint(2, 2, 2, 4), WeightedPoint(9, 3, 3, 4)], variant)
    assert idx.query_max(0, 9, 0, 9) == (2, 4)
    assert idx.query_max(3, 3, 0, 9) == (9, 4)


@given(st.integers(0, 10 ** 6), st.integers(0, 60), st.sampled_from([0.25, 0.5]))
def test_variants_match_scan(seed, n, eps):
    points, ops = workload(seed, n, 150, coord=max(n, 1) + 3)
    weights = {}
    expected = []
    for op in ops:
        if op[0] == "set":
            weights[op[1]] = op[2]
        else:
            expected.append(scan(points, weights, *op[1:]))
    for variant in VARIANTS:
        assert replay(points, ops, variant, eps) == expected


@given(st.integers(0, 10 ** 6))
def test_shared_coordinates_allowed(seed):
    # distinct points may share an x or a y value
    rng = random.Random(seed)
    cells = rng.sample([(x, y) for x in range(1, 5) for y in range(1, 5)], 10)
    points = [WeightedPoint(i, x, y) for i, (x, y) in enumerate(cells)]
    _, ops = workload(seed, 10, 100, coord=4)
    results = [replay(points, ops, v) for v in VARIANTS]
    assert results[0] == results[1] == results[2]


@given(st.integers(0, 10 ** 6))
def test_enlarging_rectangle_never_lowers_max(seed):
    rng = random.Random(seed)
    points, ops = workload(seed, 40, 60)
    idx = build(points, "wide")
    for op in ops:
        if op[0] == "set":
            idx.set_weight(op[1], op[2])
    for _ in range(30):
        xa, xb = sorted(rng.randint(1, 40) for _ in range(2))
        ya, yb = sorted(rng.randint(1, 40) for _ in range(2))
        inner = idx.query_max(xa, xb, ya, yb)
        outer = idx.query_max(xa - rng.randint(0, 5), xb + rng.randint(0, 5), ya - 1, yb + 2)
        assert (inner[1] if inner else 0) <= (outer[1] if outer else 0)


def test_fanout():
    assert fanout_for(1) == 2
    assert fanout_for(1000, 0.5) == math.ceil(math.log2(1000) ** 0.5)
    with pytest.raises(ValueError):
        fanout_for(10, 0.75)


@pytest.mark.parametrize("n, eps", [(1, 0.5), (7, 0.5), (100, 0.5), (1000, 0.5), (1000, 0.3)])
def test_wide_structure_bounds(n, eps):
    points, _ = workload(n, n, 0)
    idx = build(points, "wide", eps)
    stats = idx.structure_stats()
    d = fanout_for(n, eps)
    assert stats["fanout"] == d
    assert stats["max_y_children"] <= d
    assert stats["max_label"] < d
    assert stats["max_x_children"] <= d
