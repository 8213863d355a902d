"""Maximum clique in permutation graphs.

Two elements are adjacent when their relative order differs between the two
orderings, so a clique is a chain that is increasing in one ordering and
decreasing in the other: a longest decreasing subsequence.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .graph import Clique, Graph


@dataclass(frozen=True)
class PermutationInstance:
    elements: tuple
    order_a: Mapping[Hashable, int]
    order_b: Mapping[Hashable, int]

    def __post_init__(self):
        n = len(self.elements)
        ids = set(self.elements)
        if len(ids) != n:
            raise ValueError("duplicate element ids")
        for name, order in (("order_a", self.order_a), ("order_b", self.order_b)):
            if set(order) != ids:
                raise ValueError(f"{name} is not defined on exactly the element set")
            if sorted(order.values()) != list(range(1, n + 1)):
                raise ValueError(f"{name} is not a bijection onto 1..{n}")

    @classmethod
    def from_sequences(cls, seq_a: Sequence, seq_b: Sequence) -> "PermutationInstance":
        """Both arguments list the same ids, each in its own left-to-right order."""
        return cls(tuple(seq_a),
                   {e: i for i, e in enumerate(seq_a, start=1)},
                   {e: i for i, e in enumerate(seq_b, start=1)})

    def __len__(self) -> int:
        return len(self.elements)

    def sequence(self) -> tuple[list, list[int]]:
        """Elements in ``order_a`` order and their ``order_b`` positions."""
        elems = sorted(self.elements, key=self.order_a.__getitem__)
        return elems, [self.order_b[e] for e in elems]

    def graph(self) -> Graph:
        elems = list(self.elements)
        edges = [(i, j) for i in range(len(elems)) for j in range(i + 1, len(elems))
                 if perm_adjacent(self, elems[i], elems[j])]
        return Graph.from_edges(elems, edges)


def perm_adjacent(inst: PermutationInstance, i, j) -> bool:
    if i == j:
        raise ValueError("adjacency is undefined for an element and itself")
    da = inst.order_a[i] - inst.order_a[j]
    db = inst.order_b[i] - inst.order_b[j]
    return da * db < 0


def longest_decreasing_subsequence(seq: Sequence[int]) -> list[int]:
    """Indices of a longest strictly decreasing subsequence (patience sorting)."""
    # tails[k] holds -value of the smallest-magnitude ending of a run of length k+1,
    # kept increasing so bisect applies directly
    tails: list[int] = []
    tail_idx: list[int] = []
    prev = [-1] * len(seq)
    for i, v in enumerate(seq):
        k = bisect_left(tails, -v)
        if k == len(tails):
            tails.append(-v)
            tail_idx.append(i)
        else:
            tails[k] = -v
            tail_idx[k] = i
        prev[i] = tail_idx[k - 1] if k else -1
    out = []
    i = tail_idx[-1] if tail_idx else -1
    while i >= 0:
        out.append(i)
        i = prev[i]
    return out[::-1]


def longest_increasing_length(seq: Sequence[int]) -> int:
    """Length of a longest strictly increasing subsequence."""
    piles: list[int] = []
    for v in seq:
        k = bisect_left(piles, v)
        if k == len(piles):
            piles.append(v)
        else:
            piles[k] = v
    return len(piles)


class VEBTree:
    """van Emde Boas tree over the integer universe ``[0, u)``.

    Supports insert, delete, member, successor and predecessor in
    O(log log u). Clusters are created lazily in a dict.
    """

    __slots__ = ("u", "min", "max", "_lo_bits", "_summary", "_clusters")

    def __init__(self, u: int):
        bits = max(1, (u - 1).bit_length())
        self.u = 1 << bits
        self.min = None
        self.max = None
        self._lo_bits = bits // 2
        self._summary = None
        self._clusters: dict[int, VEBTree] = {}

    def _split(self, x: int) -> tuple[int, int]:
        return x >> self._lo_bits, x & ((1 << self._lo_bits) - 1)

    def __contains__(self, x: int) -> bool:
        if self.min is None:
            return False
        if x == self.min or x == self.max:
            return True
        if self.u <= 2:
            return False
        h, lo = self._split(x)
        c = self._clusters.get(h)
        return c is not None and lo in c

    def insert(self, x: int) -> None:
        if self.min is None:
            self.min = self.max = x
            return
        if x == self.min or x == self.max:
            return
        if x < self.min:
            x, self.min = self.min, x
        if x > self.max:
            self.max = x
        if self.u <= 2:
            return
        h, lo = self._split(x)
        c = self._clusters.get(h)
        if c is None:
            c = self._clusters[h] = VEBTree(1 << self._lo_bits)
        if c.min is None:
            if self._summary is None:
                self._summary = VEBTree(self.u >> self._lo_bits)
            self._summary.insert(h)
        c.insert(lo)

    def delete(self, x: int) -> None:
        if self.min is None:
            return
        if self.min == self.max:
            if x == self.min:
                self.min = self.max = None
            return
        if self.u <= 2:
            if x == 0:
                self.min = 1
            elif x == 1:
                self.max = 0
            return
        if x == self.min:
            h = self._summary.min
            x = (h << self._lo_bits) | self._clusters[h].min
            self.min = x
        h, lo = self._split(x)
        c = self._clusters.get(h)
        if c is None or lo not in c:
            return
        c.delete(lo)
        if c.min is None:
            del self._clusters[h]
            self._summary.delete(h)
            if x == self.max:
                smax = self._summary.max
                self.max = self.min if smax is None else (smax << self._lo_bits) | self._clusters[smax].max
        elif x == self.max:
            self.max = (h << self._lo_bits) | c.max

    def successor(self, x: int):
        """Smallest member strictly greater than ``x``, or None."""
        if self.min is None:
            return None
        if x < self.min:
            return self.min
        if self.u <= 2:
            return 1 if x == 0 and self.max == 1 else None
        h, lo = self._split(x)
        c = self._clusters.get(h)
        if c is not None and c.max is not None and lo < c.max:
            return (h << self._lo_bits) | c.successor(lo)
        if self._summary is None:
            return None
        nh = self._summary.successor(h)
        if nh is None:
            return None
        return (nh << self._lo_bits) | self._clusters[nh].min

    def predecessor(self, x: int):
        """Largest member strictly smaller than ``x``, or None."""
        if self.min is None or x <= self.min:
            return None
        if x > self.max:
            return self.max
        if self.u <= 2:
            return 0 if x == 1 and self.min == 0 else None
        h, lo = self._split(x)
        c = self._clusters.get(h)
        if c is not None and c.min is not None and lo > c.min:
            return (h << self._lo_bits) | c.predecessor(lo)
        ph = self._summary.predecessor(h) if self._summary is not None else None
        if ph is None:
            return self.min
        return (ph << self._lo_bits) | self._clusters[ph].max


def longest_decreasing_veb(seq: Sequence[int]) -> list[int]:
    """Same contract as :func:`longest_decreasing_subsequence` for a permutation
    of ``1..n``, with pile tops kept in a van Emde Boas tree over rank space."""
    n = len(seq)
    if n == 0:
        return []
    # decreasing in seq == increasing in n + 1 - seq; values stay in [1, n]
    tree = VEBTree(n + 2)
    owner: dict[int, int] = {}
    prev = [-1] * n
    for i, v in enumerate(seq):
        key = n + 1 - v
        below = tree.predecessor(key)
        prev[i] = owner[below] if below is not None else -1
        above = tree.successor(key)
        if above is not None:
            tree.delete(above)
            del owner[above]
        tree.insert(key)
        owner[key] = i
    out = []
    i = owner[tree.max]
    while i >= 0:
        out.append(i)
        i = prev[i]
    return out[::-1]


def perm_max_clique(inst: PermutationInstance, method: str = "patience") -> Clique:
    """Largest set of elements pairwise inverted between the two orderings.

    ``method`` is ``"patience"`` (bisect over pile tops) or ``"veb"``.
    """
    elems, seq = inst.sequence()
    if method == "patience":
        picks = longest_decreasing_subsequence(seq)
    elif method == "veb":
        picks = longest_decreasing_veb(seq)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Clique(frozenset(elems[i] for i in picks))
