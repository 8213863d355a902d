from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grounded.errors import ParseError
from grounded.formats import (emit_graph, emit_shapes, format_rational, parse_graph,
                              parse_rational, parse_shapes)
from grounded.generate import GenConfig, generate
from grounded.geometry import Direction, GroundedString, LShape
from grounded.reductions import build_ymonotone_rep, named_cubic_graph, random_cubic_graph


def test_l_record():
    rep = parse_shapes("GROUNDED v1\nL 1 0 2 R 5\n")
    (s,) = rep
    assert s == LShape(1, 0, 2, Direction.RIGHT, 5)


def test_s_record_detects_straight_chain():
    rep = parse_shapes("GROUNDED v1\nS 1 0/1 0 0 2 5 2\nS 2 1 0 0 2 -3 8\n")
    bent, straight = rep
    assert isinstance(bent, GroundedString) and not bent.degenerate_bend
    assert straight.degenerate_bend


def test_comments_and_string_ids():
    rep = parse_shapes("# header follows\nGROUNDED v1\n\nL a 1/2 3 L 1  # trailing\n")
    assert rep.ids == ["a"] and rep.shapes[0].ground_x == Fraction(1, 2)


@pytest.mark.parametrize("text, lineno", [
    ("L 1 0 2 R 5\n", 1),
    ("GROUNDED v1\nL 1 0 2 R\n", 2),
    ("GROUNDED v1\nL 1 0 2 U 5\n", 2),
    ("GROUNDED v1\nL 1 0 2 R 5\nL 1 3 4 R 5\n", 3),
    ("GROUNDED v1\nL 1 0 2/0 R 5\n", 2),
    ("GROUNDED v1\nL 1 0 x R 5\n", 2),
    ("GROUNDED v1\nQ 1\n", 2),
    ("GROUNDED v1\nL 1 0 0 R 5\n", 2),
    ("GROUNDED v1\nS 1 0 0 0 2 -3 8\nS 2 1 1 0 2 3 3\n", 3),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_shapes(text)
    assert exc.value.lineno == lineno
    assert str(exc.value).startswith(f"line {lineno}:")


@given(st.fractions())
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@given(st.sampled_from(["two-sided", "square", "one-sided"]), st.integers(0, 40), st.integers(0, 999))
def test_shape_round_trip(cls, n, seed):
    rep = generate(GenConfig(cls, n, seed))
    text = emit_shapes(rep)
    assert parse_shapes(text) == rep
    assert emit_shapes(parse_shapes(text)) == text


@pytest.mark.parametrize("name", ["K4", "petersen"])
def test_reduction_output_round_trips(name):
    rep = build_ymonotone_rep(named_cubic_graph(name)).rep
    text = emit_shapes(rep)
    assert parse_shapes(text) == rep
    assert emit_shapes(parse_shapes(text)) == text


def test_graph_round_trip():
    g = random_cubic_graph(10, 4)
    text = emit_graph(g)
    assert text.startswith("GRAPH v1 10 15\n")
    assert parse_graph(text) == g
    assert emit_graph(parse_graph(text)) == text


@pytest.mark.parametrize("text, lineno", [
    ("GRAPH v1 3\n", 1),
    ("GRAPH v1 3 1\n1 4\n", 2),
    ("GRAPH v1 3 1\n2 2\n", 2),
    ("GRAPH v1 3 2\n1 2\n2 1\n", 3),
    ("GRAPH v1 3 2\n1 2\n", 2),
    ("GRAPH v1 3 1\n1 2 3\n", 2),
])
def test_graph_errors(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.lineno == lineno
