"""Dynamic weighted 2D point sets answering rectangle-maximum queries.

The point set is fixed at build time; only weights change afterwards. Three
interchangeable variants are provided:

``naive``
    A linear scan. It is the oracle the other two are tested against.
``segtree``
    A binary range tree: a segment tree over x whose nodes each carry a max
    segment tree over the y-sorted points they cover. O(log^2 n) per operation.
``wide``
    The wide-fanout range tree. Both levels use node degree
    ``d = ceil(log2(n) ** eps)``. At a second-level node ``u`` of the tree
    hanging off first-level node ``w``, a ``d x d`` block records, for every
    child of ``u`` and every child of ``w``, the largest weight in that cell.
    A query touches O((log n / log log n)^2) blocks. The constant-time
    table lookup normally used inside a block is replaced by a scan of the
    sub-rectangle of the block, which is at most ``d * d`` entries.

All rectangles are closed. Weight 0 means "absent". Among points of equal
maximum weight the one with the smallest ``point_id`` is reported.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

VARIANTS = ("naive", "segtree", "wide")


@dataclass
class WeightedPoint:
    point_id: Hashable
    x: int
    y: int
    weight: int = 0


def fanout_for(n: int, eps: float = 0.5) -> int:
    """Node degree of the wide-fanout tree on ``n`` points."""
    if not 0 < eps <= 0.5:
        raise ValueError("eps must lie in (0, 1/2]")
    return max(2, math.ceil(math.log2(max(n, 2)) ** eps))


class RangeMaxIndex:
    """Shared rank mapping, weight encoding and public surface.

    Internally a point is known by ``k``, its rank in ``point_id`` order, and
    a weight ``w`` is stored as the integer key ``w * (m + 1) + (m - k)`` so
    that a plain integer max picks the heaviest point and, among equals, the
    smallest id. Key 0 is reserved for "absent".
    """

    variant = "abstract"

    def __init__(self, points: Sequence[WeightedPoint]):
        points = list(points)
        self._ids = sorted(p.point_id for p in points)
        m = self._m = len(points)
        self._k = {pid: k for k, pid in enumerate(self._ids)}
        if len(self._k) != m:
            raise ValueError("duplicate point_id")
        by_k = [None] * m
        for p in points:
            by_k[self._k[p.point_id]] = p
        if len({(p.x, p.y) for p in points}) != m:
            raise ValueError("two points share the same (x, y)")
        xorder = sorted(range(m), key=lambda k: (by_k[k].x, k))
        yorder = sorted(range(m), key=lambda k: (by_k[k].y, k))
        self._xs = [by_k[k].x for k in xorder]
        self._ys = [by_k[k].y for k in yorder]
        self._px = [0] * m
        self._py = [0] * m
        for pos, k in enumerate(xorder):
            self._px[k] = pos
        for pos, k in enumerate(yorder):
            self._py[k] = pos
        self._keys = [0] * m
        self._build()
        for p in points:
            if p.weight:
                self.set_weight(p.point_id, p.weight)

    def __len__(self) -> int:
        return self._m

    def _build(self) -> None:
        raise NotImplementedError

    def _store(self, k: int, key: int, old: int) -> None:
        raise NotImplementedError

    def _query(self, xa: int, xb: int, ya: int, yb: int) -> int:
        """Max key over half-open position ranges ``[xa, xb) x [ya, yb)``."""
        raise NotImplementedError

    def set_weight(self, point_id, weight: int) -> None:
        try:
            k = self._k[point_id]
        except KeyError:
            raise KeyError(f"unknown point_id {point_id!r}") from None
        if weight < 0:
            raise ValueError("weights must be non-negative")
        key = weight * (self._m + 1) + (self._m - k) if weight else 0
        old = self._keys[k]
        self._keys[k] = key
        self._store(k, key, old)

    def weight(self, point_id) -> int:
        return self._keys[self._k[point_id]] // (self._m + 1)

    def query_max(self, x_lo, x_hi, y_lo, y_hi) -> Optional[tuple[Hashable, int]]:
        """Heaviest point in the closed rectangle, as ``(point_id, weight)``, or None."""
        xa = bisect_left(self._xs, x_lo)
        xb = bisect_right(self._xs, x_hi)
        ya = bisect_left(self._ys, y_lo)
        yb = bisect_right(self._ys, y_hi)
        if xa >= xb or ya >= yb:
            return None
        return self._decode(self._query(xa, xb, ya, yb))

    def _decode(self, key: int) -> Optional[tuple[Hashable, int]]:
        if not key:
            return None
        w, r = divmod(key, self._m + 1)
        return self._ids[self._m - r], w


class NaiveIndex(RangeMaxIndex):
    variant = "naive"

    def _build(self) -> None:
        pass

    def _store(self, k: int, key: int, old: int) -> None:
        pass

    def _query(self, xa, xb, ya, yb) -> int:
        best = 0
        for px, py, key in zip(self._px, self._py, self._keys):
            if key > best and xa <= px < xb and ya <= py < yb:
                best = key
        return best


class SegTree2DIndex(RangeMaxIndex):
    variant = "segtree"

    def _build(self) -> None:
        m = self._m
        size = 1
        while size < max(m, 1):
            size *= 2
        self._size = size
        by_xpos = [0] * m
        for k, px in enumerate(self._px):
            by_xpos[px] = k
        # node -> sorted y positions of the points below it
        node_ys: list[list[int]] = [[] for _ in range(2 * size)]
        for pos, k in enumerate(by_xpos):
            node_ys[size + pos] = [self._py[k]]
        for i in range(size - 1, 0, -1):
            node_ys[i] = sorted(node_ys[2 * i] + node_ys[2 * i + 1])
        self._node_ys = node_ys
        self._inner = []
        for ys in node_ys:
            cap = 1
            while cap < len(ys):
                cap *= 2
            self._inner.append((cap, [0] * (2 * cap)))
        # for each point: (outer node, slot in that node's y list) up to the root
        self._slots = [[] for _ in range(m)]
        for k in range(m):
            i = size + self._px[k]
            py = self._py[k]
            while i:
                self._slots[k].append((i, bisect_left(node_ys[i], py)))
                i //= 2

    def _store(self, k: int, key: int, old: int) -> None:
        inner = self._inner
        for node, slot in self._slots[k]:
            cap, t = inner[node]
            j = slot + cap
            t[j] = key
            j //= 2
            while j:
                a, b = t[2 * j], t[2 * j + 1]
                t[j] = a if a > b else b
                j //= 2

    def _inner_query(self, node: int, ya: int, yb: int) -> int:
        ys = self._node_ys[node]
        lo = bisect_left(ys, ya)
        hi = bisect_left(ys, yb)
        cap, t = self._inner[node]
        lo += cap
        hi += cap
        best = 0
        while lo < hi:
            if lo & 1:
                if t[lo] > best:
                    best = t[lo]
                lo += 1
            if hi & 1:
                hi -= 1
                if t[hi] > best:
                    best = t[hi]
            lo //= 2
            hi //= 2
        return best

    def _query(self, xa, xb, ya, yb) -> int:
        best = 0
        lo = xa + self._size
        hi = xb + self._size
        while lo < hi:
            if lo & 1:
                v = self._inner_query(lo, ya, yb)
                if v > best:
                    best = v
                lo += 1
            if hi & 1:
                hi -= 1
                v = self._inner_query(hi, ya, yb)
                if v > best:
                    best = v
            lo //= 2
            hi //= 2
        return best


def _block_max(arr: list[int], d: int, vlo: int, vhi: int, ja: int, jb: int) -> int:
    """Max of ``arr[v * d + j]`` over ``vlo <= v < vhi`` and ``ja <= j <= jb``."""
    if ja == 0 and jb == d - 1:
        return max(arr[vlo * d:vhi * d])
    if vhi - vlo <= jb - ja + 1:
        return max(max(arr[v * d + ja:v * d + jb + 1]) for v in range(vlo, vhi))
    stop = vhi * d
    return max(max(arr[vlo * d + j:stop:d]) for j in range(ja, jb + 1))


class WideFanoutIndex(RangeMaxIndex):
    variant = "wide"

    def __init__(self, points: Sequence[WeightedPoint], eps: float = 0.5):
        points = list(points)
        self.eps = eps
        self.fanout = fanout_for(len(points), eps)
        super().__init__(points)

    def _build(self) -> None:
        m, d = self._m, self.fanout
        top = 1
        while d ** top <= m:
            top += 1
        self._top = top
        self._dpow = [d ** i for i in range(top + 1)]
        by_ypos = [0] * m
        for k, py in enumerate(self._py):
            by_ypos[py] = k
        # level -> first-level node w -> sorted x positions / per-level block arrays
        self._sx: list[list[list[int]]] = [[] for _ in range(top + 1)]
        self._arrs: list[list[list[list[int]]]] = [[] for _ in range(top + 1)]
        # level -> point k -> its position inside its node's x order
        self._ppos: list[list[int]] = [[] for _ in range(top + 1)]
        for lev in range(1, top + 1):
            span = self._dpow[lev]
            ppos = [0] * m
            for start in range(0, m, span):
                block = sorted(by_ypos[start:start + span], key=self._px.__getitem__)
                for p, k in enumerate(block):
                    ppos[k] = p
                size = len(block)
                self._sx[lev].append([self._px[k] for k in block])
                arrs = []
                cnt = size
                while True:
                    arrs.append([0] * (cnt * d))
                    if cnt < d:
                        break
                    cnt = -(-cnt // d)
                # drop levels that no decomposition can reach: need d**k <= size
                while len(arrs) > 1 and d ** (len(arrs) - 1) > size:
                    arrs.pop()
                self._arrs[lev].append(arrs)
            self._ppos[lev] = ppos

    def _store(self, k: int, key: int, old: int) -> None:
        # refresh the (child, label) maxima on the leaf-to-root path of every
        # second-level tree holding the point; an increase stops as soon as an
        # ancestor already dominates it
        d = self.fanout
        dd = d * d
        dpow = self._dpow
        ypos = self._py[k]
        grow = key >= old
        for lev in range(1, self._top + 1):
            j = ypos // dpow[lev - 1] % d
            arrs = self._arrs[lev][ypos // dpow[lev]]
            v = self._ppos[lev][k]
            arrs[0][v * d + j] = key
            if grow:
                for kk in range(1, len(arrs)):
                    v //= d
                    arr = arrs[kk]
                    if arr[v * d + j] >= key:
                        break
                    arr[v * d + j] = key
            else:
                for kk in range(1, len(arrs)):
                    v //= d
                    base = v * dd + j
                    arrs[kk][v * d + j] = max(arrs[kk - 1][base:base + dd:d])

    def _second(self, lev: int, w: int, ja: int, jb: int, xa: int, xb: int) -> int:
        sx = self._sx[lev][w]
        lo = bisect_left(sx, xa)
        hi = bisect_left(sx, xb)
        if lo >= hi:
            return 0
        d = self.fanout
        arrs = self._arrs[lev][w]
        best = 0
        k = 0
        while lo < hi:
            arr = arrs[k]
            nl = -(-lo // d) * d
            if nl >= hi:
                v = _block_max(arr, d, lo, hi, ja, jb)
                return v if v > best else best
            if lo < nl:
                v = _block_max(arr, d, lo, nl, ja, jb)
                if v > best:
                    best = v
            nr = hi // d * d
            if nr < hi:
                v = _block_max(arr, d, nr, hi, ja, jb)
                if v > best:
                    best = v
            lo = nl // d
            hi = nr // d
            k += 1
        return best

    def _query(self, xa, xb, ya, yb) -> int:
        d = self.fanout
        best = 0
        lev = 0
        lo, hi = ya, yb
        while lo < hi:
            nl = -(-lo // d) * d
            if nl >= hi:
                v = self._second(lev + 1, lo // d, lo % d, (hi - 1) % d, xa, xb)
                return v if v > best else best
            if lo < nl:
                v = self._second(lev + 1, lo // d, lo % d, d - 1, xa, xb)
                if v > best:
                    best = v
            nr = hi // d * d
            if nr < hi:
                v = self._second(lev + 1, nr // d, 0, (hi - 1) % d, xa, xb)
                if v > best:
                    best = v
            lo = nl // d
            hi = nr // d
            lev += 1
        return best

    def structure_stats(self) -> dict:
        """Recount node degrees and remapped label ranges from the stored layout."""
        d = self.fanout
        max_y_children = 0
        max_label = 0
        max_x_children = 0
        for lev in range(1, self._top + 1):
            span, sub = self._dpow[lev], self._dpow[lev - 1]
            for w, sx in enumerate(self._sx[lev]):
                labels = {(w * span + i) // sub % d for i in range(len(sx))}
                max_y_children = max(max_y_children, len(labels))
                max_label = max(max_label, max(labels))
                for kk in range(1, len(self._arrs[lev][w])):
                    n_below = len(self._arrs[lev][w][kk - 1]) // d
                    for u in range(len(self._arrs[lev][w][kk]) // d):
                        max_x_children = max(max_x_children, min(d, n_below - u * d))
        return {"fanout": d, "max_y_children": max_y_children,
                "max_label": max_label, "max_x_children": max_x_children}


_CLASSES = {"naive": NaiveIndex, "segtree": SegTree2DIndex, "wide": WideFanoutIndex}


def build(points: Iterable[WeightedPoint], variant: str = "wide", eps: float = 0.5) -> RangeMaxIndex:
    """Build a rectangle-max index of the requested variant."""
    points = list(points)
    if variant == "wide":
        return WideFanoutIndex(points, eps=eps)
    try:
        return _CLASSES[variant](points)
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}") from None
