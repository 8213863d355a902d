"""Maximum cliques in grounded L-shape intersection graphs.

Three exact algorithms, each specialised to one class of representation:

* :func:`max_clique_two_sided` - dynamic programme over intersecting pairs
  ``(a, b)`` taken as the two highest clique members, with one rectangle-max
  index per shape holding the bends of its neighbours.
* :func:`max_clique_square` - for each candidate lowest member, the shapes
  crossing its arm form a permutation graph.
* :func:`max_clique_one_sided` - for each candidate highest member, the
  shapes crossing its stem form a permutation graph.

Coordinates are compressed to integer ranks once up front; every predicate
after that is an exact integer comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .errors import GeneralPositionError, InstanceTooLarge, ShapeClassError
from .geometry import (ClassTag, Direction, LShape, Representation, classify,
                       lshapes_intersect, strings_intersect, validate_general_position)
from .graph import Clique, build_intersection_graph, max_clique_bruteforce
from .permutation import PermutationInstance, perm_max_clique
from .range_maxima import WeightedPoint, build

BRUTE_FORCE_LIMIT = 80


@dataclass
class LRanks:
    """Rank-space view of a list of L-shapes.

    ``gx``/``tx`` rank ground and tip x-coordinates in one shared order so
    that arm-versus-stem comparisons stay exact; ``xr`` and ``hr`` are the
    1-based ranks of ground x and height among the shapes themselves.
    """

    gx: np.ndarray
    tx: np.ndarray
    xr: np.ndarray
    hr: np.ndarray

    @classmethod
    def of(cls, shapes: list[LShape]) -> "LRanks":
        n = len(shapes)
        xvals = sorted({s.ground_x for s in shapes} | {s.tip_x for s in shapes})
        xpos = {v: i for i, v in enumerate(xvals)}
        gx = np.array([xpos[s.ground_x] for s in shapes], dtype=np.int64)
        tx = np.array([xpos[s.tip_x] for s in shapes], dtype=np.int64)
        hvals = sorted({s.height for s in shapes})
        hpos = {v: i + 1 for i, v in enumerate(hvals)}
        hr = np.array([hpos[s.height] for s in shapes], dtype=np.int64)
        gvals = sorted({s.ground_x for s in shapes})
        gpos = {v: i + 1 for i, v in enumerate(gvals)}
        xr = np.array([gpos[s.ground_x] for s in shapes], dtype=np.int64)
        return cls(gx.reshape(n), tx.reshape(n), xr.reshape(n), hr.reshape(n))

    @property
    def arm_lo(self) -> np.ndarray:
        return np.minimum(self.gx, self.tx)

    @property
    def arm_hi(self) -> np.ndarray:
        return np.maximum(self.gx, self.tx)

    def adjacency(self) -> np.ndarray:
        """Boolean intersection matrix, exact under closed-set semantics."""
        lo, hi, g, h = self.arm_lo, self.arm_hi, self.gx, self.hr
        # row i's arm crosses column j's stem
        cross = (h[:, None] <= h[None, :]) & (lo[:, None] <= g[None, :]) & (g[None, :] <= hi[:, None])
        adj = cross | cross.T
        adj |= g[:, None] == g[None, :]
        adj |= (h[:, None] == h[None, :]) & (lo[:, None] <= hi[None, :]) & (lo[None, :] <= hi[:, None])
        np.fill_diagonal(adj, False)
        return adj


def _require_lshapes(rep: Representation, *, square: bool = False,
                     one_sided: bool = False) -> list[LShape]:
    shapes = list(rep.shapes)
    bad = [s.id for s in shapes if not isinstance(s, LShape)]
    if bad:
        raise ShapeClassError(f"not L-shapes: {bad[:5]}")
    if square:
        bad = [s.id for s in shapes if not s.square]
        if bad:
            raise ShapeClassError(f"arm differs from height for {bad[:5]}")
    if one_sided and len({s.dir for s in shapes}) > 1:
        raise ShapeClassError("mixed arm directions in a one-sided instance")
    report = validate_general_position(rep)
    if not report.ok:
        raise GeneralPositionError(str(report))
    return shapes


def _certified(shapes: list, members: list[int]) -> Clique:
    for i, j in combinations(members, 2):
        if not strings_intersect(shapes[i], shapes[j]):
            raise AssertionError(f"certificate broken: {shapes[i].id!r} misses {shapes[j].id!r}")
    return Clique(frozenset(shapes[i].id for i in members))


def max_clique_two_sided(rep: Representation, variant: str = "wide", eps: float = 0.5) -> Clique:
    """Exact maximum clique for L-shapes of either direction.

    ``D(a, b)`` is the largest clique whose two highest members are ``a`` and
    ``b`` with ``a`` left of ``b``. The third highest member lies left of
    ``a`` or right of ``b`` and below both, so
    ``D(a, b) = 1 + max(D(c, b) over such c left of a, D(a, c) over such c right of b)``
    and 2 when no such ``c`` exists. Pairs are evaluated by increasing height
    of their lower member, so every value a query can see is already final.
    """
    shapes = _require_lshapes(rep)
    n = len(shapes)
    if n == 0:
        return Clique(frozenset())
    ranks = LRanks.of(shapes)
    adj = ranks.adjacency()
    iu, ju = np.nonzero(np.triu(adj, 1))
    if len(iu) == 0:
        return _certified(shapes, [0])
    xr, hr = ranks.xr, ranks.hr
    swap = xr[iu] > xr[ju]
    left = np.where(swap, ju, iu)
    right = np.where(swap, iu, ju)
    low = np.minimum(hr[left], hr[right])
    order = np.argsort(low, kind="stable")
    xs, hs = xr.tolist(), hr.tolist()

    # S_v: bends of v's neighbours, all weights absent until their pair is solved
    index = []
    for v in range(n):
        nbrs = np.flatnonzero(adj[v]).tolist()
        index.append(build([WeightedPoint(w, xs[w], hs[w]) for w in nbrs], variant, eps))

    choice: dict[int, int] = {}
    best_val, best_pair = 0, None
    for a, b, lo in zip(left[order].tolist(), right[order].tolist(), low[order].tolist()):
        val, pick = 2, -1
        got = index[b].query_max(1, xs[a] - 1, 1, lo - 1)  # c left of a: D(c, b)
        if got is not None and got[1] + 1 > val:
            val, pick = got[1] + 1, got[0]
        got = index[a].query_max(xs[b] + 1, n, 1, lo - 1)  # c right of b: D(a, c)
        if got is not None and got[1] + 1 > val:
            val, pick = got[1] + 1, got[0]
        index[a].set_weight(b, val)
        index[b].set_weight(a, val)
        choice[a * n + b] = pick
        if val > best_val:
            best_val, best_pair = val, (a, b)

    a, b = best_pair
    members = [a, b]
    pick = choice[a * n + b]
    while pick != -1:
        members.append(pick)
        if xs[pick] < xs[a]:
            a = pick
        else:
            b = pick
        pick = choice[a * n + b]
    if len(members) != best_val:
        raise AssertionError("backtracking lost track of the clique")
    return _certified(shapes, members)


def square_permutation(shapes: list[LShape], ranks: LRanks, a: int,
                       sx: list[int] | None = None,
                       sh: list[int] | None = None) -> PermutationInstance:
    """Permutation model of the shapes taller than ``a`` whose stems cross ``a``'s arm.

    The first ordering lists crossings left to right along the arm; the
    second walks the boundary of the region above the arm clockwise: shapes
    leaving through the left vertical line by increasing height, then those
    leaving through the right one by decreasing height.
    """
    if sx is None:
        sx = np.argsort(ranks.gx, kind="stable").tolist()
    if sh is None:
        sh = np.argsort(ranks.hr, kind="stable").tolist()
    lo, hi = int(ranks.arm_lo[a]), int(ranks.arm_hi[a])
    ha = int(ranks.hr[a])
    gx, hr = ranks.gx, ranks.hr
    crossing = (hr > ha) & (gx >= lo) & (gx <= hi)
    sigma = [v for v in sx if crossing[v]]
    left_exit = [v for v in sh if crossing[v] and shapes[v].dir is Direction.LEFT]
    right_exit = [v for v in reversed(sh) if crossing[v] and shapes[v].dir is Direction.RIGHT]
    return PermutationInstance.from_sequences(sigma, left_exit + right_exit)


def max_clique_square(rep: Representation, method: str = "patience") -> Clique:
    """Exact maximum clique for square L-shapes (arm length equals height)."""
    shapes = _require_lshapes(rep, square=True)
    n = len(shapes)
    if n == 0:
        return Clique(frozenset())
    ranks = LRanks.of(shapes)
    sx = np.argsort(ranks.gx, kind="stable").tolist()
    sh = np.argsort(ranks.hr, kind="stable").tolist()
    best: list[int] = [0]
    for a in range(n):
        inst = square_permutation(shapes, ranks, a, sx, sh)
        if len(inst) + 1 <= len(best):
            continue
        found = perm_max_clique(inst, method)
        if found.size + 1 > len(best):
            best = [a, *found.members]
    return _certified(shapes, best)


def stem_neighbourhood(ranks: LRanks, q: int, rightward: bool = True) -> np.ndarray:
    """Mask of shapes whose arm crosses the stem of ``q`` from below."""
    gx, tx, hr = ranks.gx, ranks.tx, ranks.hr
    if rightward:
        return (gx < gx[q]) & (tx >= gx[q]) & (hr < hr[q])
    return (gx > gx[q]) & (tx <= gx[q]) & (hr < hr[q])


def one_sided_permutation(ranks: LRanks, q: int, sx: np.ndarray, sh: np.ndarray,
                          rightward: bool = True) -> PermutationInstance:
    """Permutation model of the stem neighbourhood of ``q``.

    Two members intersect exactly when their ground order agrees with their
    height order, so the height list is fed in reverse to turn agreement
    into inversion.
    """
    mask = stem_neighbourhood(ranks, q, rightward)
    by_x = sx[mask[sx]].tolist()
    by_h = sh[mask[sh]].tolist()
    if not rightward:
        by_x.reverse()
    return PermutationInstance.from_sequences(by_x, by_h[::-1])


def max_clique_one_sided(rep: Representation, method: str = "patience") -> Clique:
    """Exact maximum clique when every arm points the same way."""
    shapes = _require_lshapes(rep, one_sided=True)
    n = len(shapes)
    if n == 0:
        return Clique(frozenset())
    rightward = shapes[0].dir is Direction.RIGHT
    ranks = LRanks.of(shapes)
    sx = np.argsort(ranks.gx, kind="stable")
    sh = np.argsort(ranks.hr, kind="stable")
    best: list[int] = [0]
    for q in range(n):
        inst = one_sided_permutation(ranks, q, sx, sh, rightward)
        if len(inst) + 1 <= len(best):
            continue
        found = perm_max_clique(inst, method)
        if found.size + 1 > len(best):
            best = [q, *found.members]
    return _certified(shapes, best)


def max_clique_brute(rep: Representation, limit: int = BRUTE_FORCE_LIMIT) -> Clique:
    if len(rep) > limit:
        raise InstanceTooLarge(f"{len(rep)} shapes exceed the brute-force limit of {limit}")
    return max_clique_bruteforce(build_intersection_graph(rep))


ALGORITHMS: dict[str, Callable[[Representation], Clique]] = {
    "two-sided": max_clique_two_sided,
    "square": max_clique_square,
    "one-sided": max_clique_one_sided,
    "brute": max_clique_brute,
}

_ROUTES = {
    ClassTag.ONE_SIDED: max_clique_one_sided,
    ClassTag.SQUARE: max_clique_square,
    ClassTag.TWO_SIDED: max_clique_two_sided,
}


def route(rep: Representation) -> Callable[[Representation], Clique]:
    """The algorithm :func:`max_clique` would use for ``rep``."""
    return _ROUTES.get(classify(rep), max_clique_brute)


def max_clique(rep: Representation, brute_limit: int = BRUTE_FORCE_LIMIT) -> Clique:
    """Classify ``rep`` and run the matching algorithm.

    Generic and y-monotone strings fall back to the exponential oracle and
    raise :class:`InstanceTooLarge` above ``brute_limit`` shapes.
    """
    algo = route(rep)
    if algo is max_clique_brute:
        return max_clique_brute(rep, brute_limit)
    return algo(rep)
