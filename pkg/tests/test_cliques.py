import pytest
from hypothesis import given
from hypothesis import strategies as st

from grounded.cliques import (ALGORITHMS, max_clique, max_clique_brute, max_clique_one_sided,
                              max_clique_square, max_clique_two_sided, route)
from grounded.errors import GeneralPositionError, InstanceTooLarge, ShapeClassError
from grounded.generate import GenConfig, generate
from grounded.geometry import LShape, Representation, strings_intersect
from grounded.graph import build_intersection_graph, independence_number, max_clique_bruteforce
from grounded.reductions import build_ymonotone_rep, named_cubic_graph

from properties import (permutation_mismatches, rectangle_counterexamples,
                        square_exit_violations, stem_rule_violations)
from strategies import general_lsets
from test_geometry import STAIRCASE


def oracle(rep) -> int:
    return max_clique_bruteforce(build_intersection_graph(rep)).size


def certified(rep, clique) -> bool:
    shapes = {s.id: s for s in rep}
    members = list(clique.members)
    return all(strings_intersect(shapes[a], shapes[b])
               for i, a in enumerate(members) for b in members[i + 1:])


def test_empty_and_singleton():
    for algo in (max_clique_two_sided, max_clique_square, max_clique_one_sided):
        assert algo(Representation()).size == 0
    assert max_clique_two_sided(Representation([LShape(1, 0, 1, "R", 3)])).size == 1
    assert max_clique_square(Representation([LShape(1, 0, 1, "R", 1)])).size == 1


def test_staircase():
    assert max_clique_two_sided(STAIRCASE).size == 3
    assert max_clique_one_sided(STAIRCASE).size == 3


def test_side_by_side_one_sided():
    rep = Representation([LShape(1, 0, 1, "R", 1), LShape(2, 5, 2, "R", 1)])
    assert max_clique_one_sided(rep).size == 1


def test_square_examples():
    crossing = Representation([LShape(1, 0, 2, "R", 2), LShape(2, 1, 3, "L", 3)])
    assert max_clique_square(crossing).size == 2
    apart = Representation([LShape(1, 0, 1, "R", 1), LShape(2, 5, 2, "L", 2)])
    assert max_clique_square(apart).size == 1
    hand = Representation([LShape("A", 0, 4, "R", 4), LShape("B", 2, 6, "L", 6),
                           LShape("C", 3, 5, "R", 5)])
    assert oracle(hand) == 2
    assert max_clique_square(hand).size == 2
    assert max_clique_two_sided(hand).size == 2


def test_edgeless_input_gives_one():
    rep = Representation([LShape(i, 10 * i, i + 1, "L", 1) for i in range(5)])
    assert max_clique_two_sided(rep).size == 1


def test_precondition_errors():
    mixed = Representation([LShape(1, 0, 2, "R", 3), LShape(2, 1, 3, "L", 3)])
    with pytest.raises(ShapeClassError):
        max_clique_square(mixed)
    with pytest.raises(ShapeClassError):
        max_clique_one_sided(mixed)
    clash = Representation([LShape(1, 0, 2, "R", 3), LShape(2, 1, 2, "L", 3)])
    with pytest.raises(GeneralPositionError):
        max_clique_two_sided(clash)
    strings = build_ymonotone_rep(named_cubic_graph("K4")).rep
    with pytest.raises(ShapeClassError):
        max_clique_two_sided(strings)
    with pytest.raises(InstanceTooLarge):
        max_clique_brute(strings, limit=10)


def test_dispatcher_routes():
    assert route(generate(GenConfig("square", 10, 1))) is max_clique_square
    assert route(generate(GenConfig("one-sided", 10, 1))) is max_clique_one_sided
    assert route(generate(GenConfig("two-sided", 10, 1))) is max_clique_two_sided
    art = build_ymonotone_rep(named_cubic_graph("K4"))
    assert route(art.rep) is max_clique_brute
    assert max_clique(art.rep).size == independence_number(art.G) == 7


@given(general_lsets())
def test_two_sided_matches_oracle(rep):
    for variant in ("naive", "segtree", "wide"):
        c = max_clique_two_sided(rep, variant)
        assert c.size == oracle(rep)
        assert certified(rep, c)


@given(general_lsets(square=True))
def test_square_matches_oracle(rep):
    for method in ("patience", "veb"):
        c = max_clique_square(rep, method)
        assert c.size == oracle(rep)
        assert certified(rep, c)


@given(general_lsets(direction="R"))
def test_one_sided_right_matches_oracle(rep):
    c = max_clique_one_sided(rep)
    assert c.size == oracle(rep)
    assert certified(rep, c)


@given(general_lsets(direction="L"))
def test_one_sided_left_matches_oracle(rep):
    c = max_clique_one_sided(rep, "veb")
    assert c.size == oracle(rep)
    assert certified(rep, c)


@given(st.sampled_from(["two-sided", "square", "one-sided"]), st.integers(0, 10 ** 6),
       st.sampled_from([5, 10, 20, 40]))
def test_generated_instances_agree_across_algorithms(cls, seed, n):
    rep = generate(GenConfig(cls, n, seed))
    expected = oracle(rep)
    assert max_clique(rep).size == expected
    assert max_clique_two_sided(rep).size == expected
    if cls == "square":
        assert max_clique_square(rep).size == expected
    if cls == "one-sided":
        assert max_clique_one_sided(rep).size == expected


@given(general_lsets())
def test_rectangle_queries_are_sound(rep):
    assert rectangle_counterexamples(rep) == 0


@given(general_lsets(square=True))
def test_square_exit_and_permutation_model(rep):
    assert square_exit_violations(rep) == 0
    assert permutation_mismatches(rep) == 0


@given(general_lsets(direction="R"))
def test_stem_rule_right(rep):
    assert stem_rule_violations(rep) == 0


@given(general_lsets(direction="L"))
def test_stem_rule_left(rep):
    assert stem_rule_violations(rep) == 0


def test_algorithm_table():
    assert set(ALGORITHMS) == {"two-sided", "square", "one-sided", "brute"}
