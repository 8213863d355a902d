"""Cubic graph -> 2-subdivision -> complement -> explicit grounded string drawing.

Vertex ``i`` of the cubic graph ``H`` (1-based, in index order) becomes an
*original* string: the segment from ``(i, 0)`` to ``(-3ni, 6n + 2)``. All of
them pass through ``(0, 2)`` and reverse their left-to-right order above it.

Edge ``j = (c, d)`` with ``c`` the ``t``-th and ``d`` the ``r``-th vertex,
``t < r``, yields two *division* strings:

* ``s1`` rises from ``(t - 1/j, 0)`` to ``q = (-3n^2 - 1, Y1)`` and runs
  right along ``y = Y1`` until it has crossed every original string to the
  left of ``c``'s.
* ``s2`` rises from ``w = (r - 1/j, 0)`` along the line ``wq`` up to
  ``y = Y1 - 1`` and then runs right until it has crossed every original
  string to the left of ``d``'s.

Each free segment stops halfway between the last string it has to cross and
the string it has to miss. ``Y1 = 6n + 2 - spacing * (j - 1)``; with
``spacing=1`` consecutive edges share a horizontal line, with the default
``spacing=2`` every division string gets its own line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable

from .errors import ReductionError
from .geometry import GroundedString, Point, Representation, strings_intersect
from .graph import (Clique, Graph, build_intersection_graph, complement,
                    independence_number, max_clique_bruteforce, subdivide)


def check_cubic(h: Graph) -> None:
    bad = [h.labels[v] for v in range(h.n) if h.degree(v) != 3]
    if bad:
        raise ReductionError(f"not cubic: vertices {bad[:5]} do not have degree 3")
    if h.n == 0 or h.n % 2:
        raise ReductionError("a cubic graph has a positive even number of vertices")


@dataclass
class ReductionArtifact:
    H: Graph
    G: Graph
    Gbar: Graph
    rep: Representation
    shape_of: dict[Hashable, str]
    slope: Fraction = Fraction(0)
    spacing: int = 2


def _original_id(i: int) -> str:
    return f"v{i}"


def _division_id(j: int, k: int) -> str:
    return f"s{j}_{k}"


def _line_hit(i: int, intercept: Fraction, slope: Fraction) -> Fraction:
    """x where original string ``i`` meets ``y = intercept + slope * x``."""
    # original i lies on 2x + i*y = 2i
    return Fraction(i) * (2 - intercept) / (2 + i * slope)


def _free_end(n: int, excluded: int, bend_x: Fraction, intercept: Fraction,
              slope: Fraction) -> Fraction:
    """Stop abscissa for a free segment that must cross originals ``excluded+1..n``
    and miss ``excluded``."""
    miss = _line_hit(excluded, intercept, slope)
    hits = [_line_hit(k, intercept, slope) for k in range(excluded + 1, n + 1)]
    last = max(hits) if hits else bend_x
    if not (bend_x < last if hits else True) or not all(bend_x < x for x in hits + [miss]):
        raise ReductionError("bend is not left of every original crossing on its line")
    if not last < miss:
        raise ReductionError("crossing order along a free segment is not the reversed ground order")
    return (last + miss) / 2


def build_ymonotone_rep(h: Graph, slope=0, spacing: int = 2) -> ReductionArtifact:
    """Generate the string representation of complement(subdivide(h, 2)).

    A positive ``slope`` tilts every free segment upward, making the strings
    strictly y-monotone; the result is then verified before it is returned.
    """
    check_cubic(h)
    slope = Fraction(slope)
    if slope < 0:
        raise ReductionError("slope must be non-negative")
    if spacing < 1:
        raise ReductionError("spacing must be at least 1")
    n = h.n
    top = 6 * n + 2
    x_line = Fraction(-3 * n * n - 1)
    shapes: list[GroundedString] = []
    shape_of: dict[Hashable, str] = {}
    p = Point(0, 2)
    for i in range(1, n + 1):
        shapes.append(GroundedString(_original_id(i), Point(i, 0), p,
                                     Point(-3 * n * i, top), degenerate_bend=True))
        shape_of[h.labels[i - 1]] = _original_id(i)

    used = set(range(1, n + 1))
    edges = h.edges()
    if 6 * n + 3 - spacing * len(edges) < 3:
        raise ReductionError("spacing too large: division lines would drop below y = 3")

    def start(base: int, j: int) -> Fraction:
        x = base - Fraction(1, j)
        while x in used:
            x += Fraction(1, j * (3 * n + 2))
        if not base - 1 <= x < base:
            raise ReductionError(f"edge {j}: start abscissa left its ground slot")
        used.add(x)
        return x

    for j, (u, v) in enumerate(edges, start=1):
        t, r = u + 1, v + 1
        y1 = Fraction(top - spacing * (j - 1))
        y2 = y1 - 1
        # free segments lie on y = intercept + slope * x
        c1 = y1
        c2 = y2
        q = Point(x_line, c1 + slope * x_line)
        x0 = start(t, j)
        end1 = _free_end(n, t, q.x, c1, slope)
        shapes.append(GroundedString(_division_id(j, 1), Point(x0, 0), q,
                                     Point(end1, c1 + slope * end1)))
        w = Point(start(r, j), 0)
        # bend of s2: line w -> q meets y = c2 + slope * x
        dx, dy = q.x - w.x, q.y - w.y
        lam = (c2 + slope * w.x - w.y) / (dy - slope * dx)
        if not 0 < lam < 1:
            raise ReductionError(f"edge {j}: second bend falls outside segment wq")
        b2 = Point(w.x + lam * dx, w.y + lam * dy)
        end2 = _free_end(n, r, b2.x, c2, slope)
        shapes.append(GroundedString(_division_id(j, 2), w, b2,
                                     Point(end2, c2 + slope * end2)))
        shape_of[("s", j, 1)] = _division_id(j, 1)
        shape_of[("s", j, 2)] = _division_id(j, 2)

    g = subdivide(h, 2)
    art = ReductionArtifact(h, g, complement(g), Representation(shapes), shape_of,
                            slope, spacing)
    if slope:
        report = verify_reduction(art)
        if not report.ok:
            raise ReductionError(f"tilted construction failed verification: {report}")
    return art


@dataclass(frozen=True)
class Mismatch:
    u: Hashable
    v: Hashable
    expected: bool
    actual: bool
    detail: str

    def __str__(self) -> str:
        want = "edge" if self.expected else "non-edge"
        return f"{self.u!r}-{self.v!r}: expected {want}, drawing disagrees ({self.detail})"


@dataclass
class VerificationReport:
    mismatches: list[Mismatch] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.problems

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(self.problems + [str(m) for m in self.mismatches])


def _describe(shape) -> str:
    return f"{shape.id}: {shape.ground.x},{shape.ground.y} -> {shape.bend.x},{shape.bend.y} -> {shape.tip.x},{shape.tip.y}"


def verify_reduction(art: ReductionArtifact) -> VerificationReport:
    """Compare the drawing's intersection graph with ``art.Gbar`` pair by pair."""
    report = VerificationReport()
    ids = set(art.rep.ids)
    mapped = [art.shape_of.get(lab) for lab in art.Gbar.labels]
    missing = [lab for lab, sid in zip(art.Gbar.labels, mapped) if sid not in ids]
    if missing:
        report.problems.append(f"vertices without a string: {missing[:5]}")
        return report
    if len(set(mapped)) != len(mapped) or set(mapped) != ids:
        report.problems.append("vertex-to-string correspondence is not a bijection")
        return report
    drawn = build_intersection_graph(art.rep)
    for u, v in combinations(range(art.Gbar.n), 2):
        want = art.Gbar.has_edge(u, v)
        a, b = drawn.index(mapped[u]), drawn.index(mapped[v])
        got = drawn.has_edge(a, b)
        if want != got:
            sa, sb = art.rep.shapes[a], art.rep.shapes[b]
            report.mismatches.append(Mismatch(art.Gbar.labels[u], art.Gbar.labels[v], want, got,
                                              f"{_describe(sa)} | {_describe(sb)}"))
    return report


@dataclass
class CliqueIndependenceReport:
    omega: int
    alpha: int
    clique: Clique

    @property
    def ok(self) -> bool:
        return self.omega == self.alpha

    def __bool__(self) -> bool:
        return self.ok


def clique_equals_independence(art: ReductionArtifact) -> CliqueIndependenceReport:
    """Largest clique of the drawing versus largest independent set of ``G``,
    each found by its own exhaustive search."""
    clique = max_clique_bruteforce(build_intersection_graph(art.rep))
    shapes = {s.id: s for s in art.rep}
    for a, b in combinations(clique.members, 2):
        if not strings_intersect(shapes[a], shapes[b]):
            raise AssertionError("oracle returned a non-clique")
    return CliqueIndependenceReport(clique.size, independence_number(art.G), clique)


def named_cubic_graph(name: str) -> Graph:
    """``K4``, ``K33``, ``cube`` or ``petersen``, labelled 1..n."""
    if name == "K4":
        edges = list(combinations(range(4), 2))
        n = 4
    elif name == "K33":
        edges = [(a, b) for a in range(3) for b in range(3, 6)]
        n = 6
    elif name == "cube":
        edges = [(a, a ^ (1 << k)) for a in range(8) for k in range(3) if a < a ^ (1 << k)]
        n = 8
    elif name == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        edges = outer + spokes + inner
        n = 10
    else:
        raise ValueError(f"unknown cubic graph {name!r}")
    return Graph.from_edges(list(range(1, n + 1)), edges)


def random_cubic_graph(n: int, seed: int = 0) -> Graph:
    """Uniform-ish simple cubic graph on ``n`` vertices by pairing with rejection."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need an even n >= 4")
    rng = random.Random(seed)
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = {tuple(sorted(stubs[i:i + 2])) for i in range(0, len(stubs), 2)}
        if len(pairs) == 3 * n // 2 and all(a != b for a, b in pairs):
            return Graph.from_edges(list(range(1, n + 1)), sorted(pairs))
