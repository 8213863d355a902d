"""Plain-text formats for shape sets and graphs.

Shape files start with ``GROUNDED v1`` and hold one record per line::

    L <id> <ground_x> <height> <L|R> <arm>
    S <id> <x0> <y0> <xb> <yb> <x1> <y1>

Graph files start with ``GRAPH v1 <n> <m>`` followed by ``m`` lines ``u v``
over vertices ``1..n``. Numbers are integers or ``p/q``; ``#`` starts a
comment. Emitting a parsed canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, TextIO, Union

from .errors import GeometryError, ParseError
from .geometry import GroundedString, LShape, Point, Representation, orient
from .graph import Graph

SHAPES_HEADER = "GROUNDED v1"
GRAPH_HEADER = "GRAPH v1"

_RAT = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")

Source = Union[str, TextIO, Iterable[str]]


def _lines(src: Source) -> Iterable[tuple[int, str]]:
    if isinstance(src, str):
        src = src.splitlines()
    for lineno, raw in enumerate(src, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_rational(token: str, lineno: int = 0) -> Fraction:
    m = _RAT.match(token)
    if not m:
        raise ParseError(lineno, f"not a rational number: {token!r}")
    if m.group(2) is not None and int(m.group(2)) == 0:
        raise ParseError(lineno, f"zero denominator in {token!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _parse_id(token: str):
    return int(token) if re.fullmatch(r"[+-]?\d+", token) else token


def parse_shapes(src: Source) -> Representation:
    lines = iter(_lines(src))
    first = next(lines, None)
    if first is None or first[1] != SHAPES_HEADER:
        raise ParseError(first[0] if first else 1, f"expected header {SHAPES_HEADER!r}")
    shapes = []
    seen = set()
    for lineno, line in lines:
        kind, *fields = line.split()
        try:
            if kind == "L":
                if len(fields) != 5:
                    raise ParseError(lineno, "L record needs: id ground_x height dir arm")
                sid, gx, h, d, arm = fields
                if d not in ("L", "R"):
                    raise ParseError(lineno, f"direction must be L or R, got {d!r}")
                shape = LShape(_parse_id(sid), parse_rational(gx, lineno),
                               parse_rational(h, lineno), d, parse_rational(arm, lineno))
            elif kind == "S":
                if len(fields) != 7:
                    raise ParseError(lineno, "S record needs: id x0 y0 xb yb x1 y1")
                sid, *coords = fields
                c = [parse_rational(t, lineno) for t in coords]
                ground, bend, tip = Point(c[0], c[1]), Point(c[2], c[3]), Point(c[4], c[5])
                straight = bend not in (ground, tip) and orient(ground, bend, tip) == 0
                shape = GroundedString(_parse_id(sid), ground, bend, tip, degenerate_bend=straight)
            else:
                raise ParseError(lineno, f"unknown record type {kind!r}")
        except GeometryError as exc:
            raise ParseError(lineno, str(exc)) from None
        if shape.id in seen:
            raise ParseError(lineno, f"duplicate id {shape.id!r}")
        seen.add(shape.id)
        shapes.append(shape)
    return Representation(shapes)


def emit_shapes(rep: Representation) -> str:
    out = [SHAPES_HEADER]
    for s in rep:
        if isinstance(s, LShape):
            out.append(f"L {s.id} {format_rational(s.ground_x)} {format_rational(s.height)} "
                       f"{s.dir.value} {format_rational(s.arm)}")
        else:
            coords = " ".join(format_rational(c) for p in (s.ground, s.bend, s.tip) for c in p)
            out.append(f"S {s.id} {coords}")
    return "\n".join(out) + "\n"


def parse_graph(src: Source) -> Graph:
    """Vertices are labelled ``1..n``."""
    lines = iter(_lines(src))
    first = next(lines, None)
    head = first[1].split() if first else []
    if len(head) != 4 or " ".join(head[:2]) != GRAPH_HEADER:
        raise ParseError(first[0] if first else 1, f"expected header '{GRAPH_HEADER} <n> <m>'")
    try:
        n, m = int(head[2]), int(head[3])
    except ValueError:
        raise ParseError(first[0], "vertex and edge counts must be integers") from None
    if n < 0 or m < 0:
        raise ParseError(first[0], "counts must be non-negative")
    edges = []
    seen = set()
    last = first[0]
    for lineno, line in lines:
        last = lineno
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(lineno, "edge line needs two vertex numbers")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"vertex out of range 1..{n}")
        if u == v:
            raise ParseError(lineno, f"self-loop at {u}")
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(lineno, f"repeated edge {u} {v}")
        seen.add(key)
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise ParseError(last, f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(list(range(1, n + 1)), edges)


def emit_graph(g: Graph) -> str:
    """Vertices are written by position, so labels are replaced by ``1..n``."""
    edges = g.edges()
    lines = [f"{GRAPH_HEADER} {g.n} {len(edges)}"]
    lines += [f"{u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"
