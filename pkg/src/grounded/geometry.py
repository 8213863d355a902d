"""Exact rational plane geometry for grounded 1-bend strings and L-shapes.

Every coordinate is a :class:`fractions.Fraction`; no predicate in this module
ever touches floating point. The ground line is ``y = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Union

from .errors import GeometryError

Rat = Fraction


def rat(value) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a canonical Fraction.

    Floats are refused: a float literal silently carries binary rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coordinate {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", rat(self.x))
        object.__setattr__(self, "y", rat(self.y))

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise GeometryError(f"degenerate segment at {self.a}")

    @property
    def is_horizontal(self) -> bool:
        return self.a.y == self.b.y

    @property
    def is_vertical(self) -> bool:
        return self.a.x == self.b.x


def orient(o: Point, a: Point, b: Point) -> int:
    """Sign of the cross product (a - o) x (b - o): 1 left turn, -1 right, 0 collinear."""
    cross = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
    return (cross > 0) - (cross < 0)


def _on_segment(p: Point, s: Segment) -> bool:
    # assumes p is collinear with s
    return (min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y))


def seg_intersect(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments share at least one point."""
    # bounding boxes first; cheap and settles most axis-aligned pairs
    if max(s1.a.x, s1.b.x) < min(s2.a.x, s2.b.x) or max(s2.a.x, s2.b.x) < min(s1.a.x, s1.b.x):
        return False
    if max(s1.a.y, s1.b.y) < min(s2.a.y, s2.b.y) or max(s2.a.y, s2.b.y) < min(s1.a.y, s1.b.y):
        return False
    d1 = orient(s1.a, s1.b, s2.a)
    d2 = orient(s1.a, s1.b, s2.b)
    d3 = orient(s2.a, s2.b, s1.a)
    d4 = orient(s2.a, s2.b, s1.b)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and _on_segment(s2.a, s1))
            or (d2 == 0 and _on_segment(s2.b, s1))
            or (d3 == 0 and _on_segment(s1.a, s2))
            or (d4 == 0 and _on_segment(s1.b, s2)))


def collinear_segments(s1: Segment, s2: Segment) -> bool:
    """True iff both segments lie on one supporting line."""
    return orient(s1.a, s1.b, s2.a) == 0 and orient(s1.a, s1.b, s2.b) == 0


class Direction(str, Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def sign(self) -> int:
        return -1 if self is Direction.LEFT else 1


@dataclass(frozen=True)
class GroundedString:
    """A polygonal chain ground -> bend -> tip with its ground endpoint on y = 0.

    ``degenerate_bend`` marks a straight string whose nominal bend sits on
    the segment from ground to tip.
    """

    id: object
    ground: Point
    bend: Point
    tip: Point
    degenerate_bend: bool = False

    def __post_init__(self):
        if self.ground.y != 0:
            raise GeometryError(f"string {self.id}: ground endpoint not on y = 0")
        if self.bend.y <= 0:
            raise GeometryError(f"string {self.id}: bend must lie above the ground line")
        if self.tip.y <= 0:
            raise GeometryError(f"string {self.id}: free endpoint must lie above the ground line")
        if self.bend == self.ground or self.bend == self.tip:
            raise GeometryError(f"string {self.id}: zero-length segment")
        straight = orient(self.ground, self.bend, self.tip) == 0
        if straight and not self.degenerate_bend:
            raise GeometryError(f"string {self.id}: collinear bend must be flagged degenerate")
        if self.degenerate_bend:
            if not straight:
                raise GeometryError(f"string {self.id}: flagged degenerate but bend is proper")
            if not _on_segment(self.bend, Segment(self.ground, self.tip)):
                raise GeometryError(f"string {self.id}: degenerate bend outside the chain")

    @cached_property
    def segments(self) -> tuple[Segment, Segment]:
        return Segment(self.ground, self.bend), Segment(self.bend, self.tip)

    @property
    def ground_x(self) -> Fraction:
        return self.ground.x

    @property
    def is_y_monotone(self) -> bool:
        return self.bend.y <= self.tip.y

    @property
    def is_strictly_y_monotone(self) -> bool:
        return self.bend.y < self.tip.y


@dataclass(frozen=True)
class LShape:
    """Axis-aligned grounded 1-bend string: a vertical stem plus one horizontal arm."""

    id: object
    ground_x: Fraction
    height: Fraction
    dir: Direction
    arm: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ground_x", rat(self.ground_x))
        object.__setattr__(self, "height", rat(self.height))
        object.__setattr__(self, "arm", rat(self.arm))
        object.__setattr__(self, "dir", Direction(self.dir))
        if self.height <= 0:
            raise GeometryError(f"L-shape {self.id}: height must be positive")
        if self.arm <= 0:
            raise GeometryError(f"L-shape {self.id}: arm must be positive")

    @property
    def tip_x(self) -> Fraction:
        return self.ground_x + self.dir.sign * self.arm

    @property
    def ground(self) -> Point:
        return Point(self.ground_x, Fraction(0))

    @property
    def bend(self) -> Point:
        return Point(self.ground_x, self.height)

    @property
    def tip(self) -> Point:
        return Point(self.tip_x, self.height)

    @property
    def arm_span(self) -> tuple[Fraction, Fraction]:
        """Closed x-interval covered by the horizontal arm."""
        return (min(self.ground_x, self.tip_x), max(self.ground_x, self.tip_x))

    @property
    def square(self) -> bool:
        return self.arm == self.height

    @cached_property
    def segments(self) -> tuple[Segment, Segment]:
        return Segment(self.ground, self.bend), Segment(self.bend, self.tip)


Shape = Union[GroundedString, LShape]


class ClassTag(str, Enum):
    GENERIC = "Generic1Bend"
    YMONOTONE = "YMonotone"
    TWO_SIDED = "TwoSidedL"
    ONE_SIDED = "OneSidedL"
    SQUARE = "SquareL"


@dataclass(frozen=True)
class Representation:
    """An ordered collection of grounded shapes with distinct ids."""

    shapes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))
        seen = set()
        for s in self.shapes:
            if s.id in seen:
                raise GeometryError(f"duplicate shape id {s.id!r}")
            seen.add(s.id)

    def __len__(self) -> int:
        return len(self.shapes)

    def __iter__(self) -> Iterator[Shape]:
        return iter(self.shapes)

    @property
    def ids(self) -> list:
        return [s.id for s in self.shapes]

    def by_id(self, shape_id) -> Shape:
        for s in self.shapes:
            if s.id == shape_id:
                return s
        raise KeyError(shape_id)

    @cached_property
    def class_tag(self) -> ClassTag:
        return classify(self)

    @property
    def all_lshapes(self) -> bool:
        return all(isinstance(s, LShape) for s in self.shapes)


def _bbox(shape: Shape) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    pts = [seg.a for seg in shape.segments] + [shape.segments[1].b]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return min(xs), max(xs), min(ys), max(ys)


def strings_intersect(a: Shape, b: Shape) -> bool:
    """True iff the two shapes share a point (closed semantics)."""
    if isinstance(a, LShape) and isinstance(b, LShape):
        return lshapes_intersect(a, b)
    ax0, ax1, ay0, ay1 = _bbox(a)
    bx0, bx1, by0, by1 = _bbox(b)
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return False
    return any(seg_intersect(s, t) for s in a.segments for t in b.segments)


def lshapes_intersect(a: LShape, b: LShape) -> bool:
    """Closed-set intersection of two L-shapes using only comparisons."""
    if a.ground_x == b.ground_x:
        return True  # stems share the ground point
    alo, ahi = a.arm_span
    blo, bhi = b.arm_span
    if a.height == b.height and alo <= bhi and blo <= ahi:
        return True
    if a.height <= b.height and alo <= b.ground_x <= ahi:
        return True
    if b.height <= a.height and blo <= a.ground_x <= bhi:
        return True
    return False


@dataclass
class GeneralPositionReport:
    violations: list[tuple[object, object, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{a!r}/{b!r}: {why}" for a, b, why in self.violations)


def _pairs_sharing(shapes: Iterable[Shape], key, why: str) -> Iterator[tuple[object, object, str]]:
    groups: dict = {}
    for s in shapes:
        groups.setdefault(key(s), []).append(s.id)
    for ids in groups.values():
        for a, b in combinations(ids, 2):
            yield a, b, why


def validate_general_position(rep: Representation) -> GeneralPositionReport:
    """Check ground x distinctness, and either distinct heights (L-shapes) or no
    collinear segments across distinct strings (generic strings)."""
    report = GeneralPositionReport()
    report.violations.extend(_pairs_sharing(rep, lambda s: s.ground_x, "shared ground x"))
    ls = [s for s in rep if isinstance(s, LShape)]
    report.violations.extend(_pairs_sharing(ls, lambda s: s.height, "shared height"))
    if len(ls) < len(rep):
        for a, b in combinations(rep.shapes, 2):
            if a.ground_x == b.ground_x:
                continue
            if any(collinear_segments(s, t) for s in a.segments for t in b.segments):
                report.violations.append((a.id, b.id, "collinear segments"))
    return report


def classify(rep: Representation) -> ClassTag:
    """Most specific class tag. One-sidedness wins over squareness."""
    shapes = rep.shapes
    if all(isinstance(s, LShape) for s in shapes):
        if len({s.dir for s in shapes}) <= 1:
            return ClassTag.ONE_SIDED
        if all(s.square for s in shapes):
            return ClassTag.SQUARE
        return ClassTag.TWO_SIDED
    if all(isinstance(s, LShape) or s.is_y_monotone for s in shapes):
        return ClassTag.YMONOTONE
    return ClassTag.GENERIC
