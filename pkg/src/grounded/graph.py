"""Abstract graphs over bitset adjacency rows, plus exact clique/independence oracles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .geometry import Representation, strings_intersect


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph. Vertex ``i`` carries ``labels[i]``; ``adj[i]`` is an int bitset."""

    __slots__ = ("labels", "adj", "_index")

    def __init__(self, labels: Sequence[Hashable], adj: Sequence[int]):
        if len(labels) != len(adj):
            raise ValueError("labels and adjacency rows differ in length")
        self.labels = list(labels)
        self.adj = list(adj)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("vertex labels must be distinct")
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {self.labels[i]!r}")
            for j in _bits(row):
                if j >= len(self.adj) or not self.adj[j] >> i & 1:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n_or_labels, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 0-based index pairs. First argument is a count or a label list."""
        labels = list(range(n_or_labels)) if isinstance(n_or_labels, int) else list(n_or_labels)
        adj = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {labels[u]!r}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(labels, adj)

    @classmethod
    def from_labeled_edges(cls, labels: Sequence[Hashable], edges: Iterable[tuple]) -> "Graph":
        index = {lab: i for i, lab in enumerate(labels)}
        return cls.from_edges(list(labels), ((index[a], index[b]) for a, b in edges))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self._index[label]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return bin(self.adj[u]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        """Edges as index pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def labeled_edges(self) -> set[frozenset]:
        return {frozenset((self.labels[u], self.labels[v])) for u, v in self.edges()}

    @property
    def num_edges(self) -> int:
        return sum(bin(row).count("1") for row in self.adj) // 2

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[v]) for u, v in combinations(vs, 2) if self.has_edge(u, v)]
        return Graph.from_edges([self.labels[v] for v in vs], edges)

    def relabel(self, mapping) -> "Graph":
        return Graph([mapping[lab] for lab in self.labels], self.adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class Clique:
    """A set of pairwise adjacent vertex labels (or shape ids)."""

    members: frozenset

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def is_clique_in(self, g: Graph) -> bool:
        idx = [g.index(m) for m in self.members]
        return all(g.has_edge(u, v) for u, v in combinations(idx, 2))


def build_intersection_graph(rep: Representation) -> Graph:
    """Vertices are shape ids in representation order; edges join intersecting shapes."""
    shapes = rep.shapes
    edges = [(i, j) for i, j in combinations(range(len(shapes)), 2)
             if strings_intersect(shapes[i], shapes[j])]
    return Graph.from_edges([s.id for s in shapes], edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.labels, [full & ~row & ~(1 << i) for i, row in enumerate(g.adj)])


def subdivide(g: Graph, t: int) -> Graph:
    """Replace every edge by a path through ``t`` new division vertices.

    Edge ``j`` (1-based, in :meth:`Graph.edges` order) between ``u < v`` gets
    division vertices labelled ``("s", j, 1) .. ("s", j, t)`` numbered from
    ``u``'s end. Original labels are kept.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return Graph(g.labels, g.adj)
    labels = list(g.labels)
    edges = []
    for j, (u, v) in enumerate(g.edges(), start=1):
        path = [u]
        for k in range(1, t + 1):
            labels.append(("s", j, k))
            path.append(len(labels) - 1)
        path.append(v)
        edges.extend(zip(path, path[1:]))
    return Graph.from_edges(labels, edges)


def _greedy_color_bound(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Sequential greedy colouring of ``cand``. Returns vertices and their colour
    numbers in non-decreasing colour order (Tomita-style bound)."""
    order, colors = [], []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique_bruteforce(g: Graph) -> Clique:
    """Exact maximum clique by branch and bound over Bron-Kerbosch with pivoting.

    Intended for ``n`` up to a few dozen vertices; exponential in the worst case.
    """
    n = g.n
    if n == 0:
        return Clique(frozenset())
    adj = g.adj
    best = [1 << 0]

    def expand(r: int, rsize: int, p: int, x: int) -> None:
        if not p:
            if rsize > bin(best[0]).count("1"):
                best[0] = r
            return
        best_size = bin(best[0]).count("1")
        if rsize + bin(p).count("1") <= best_size:
            return
        # a proper colouring of P bounds any clique inside it
        order, colors = _greedy_color_bound(p, adj)
        if rsize + colors[-1] <= best_size:
            return
        # pivot: vertex of P|X with most neighbours inside P
        pu = max(_bits(p | x), key=lambda u: bin(p & adj[u]).count("1"))
        skip = adj[pu]
        for v in reversed(order):
            if skip >> v & 1:
                continue
            bit = 1 << v
            expand(r | bit, rsize + 1, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, 0, (1 << n) - 1, 0)
    return Clique(frozenset(g.labels[v] for v in _bits(best[0])))


def clique_number(g: Graph) -> int:
    return max_clique_bruteforce(g).size


def max_independent_set(g: Graph) -> frozenset:
    """Exact maximum independent set by include/exclude branching.

    Deliberately shares no code with the clique search so that the two can
    cross-check each other through :func:`complement`.
    """
    adj = g.adj
    best: list[int] = [0]

    def popcount(m: int) -> int:
        return bin(m).count("1")

    def go(chosen: int, rest: int) -> None:
        # vertices of degree <= 1 in the remaining graph are always safe to take
        changed = True
        while changed:
            changed = False
            for v in _bits(rest):
                if popcount(adj[v] & rest) <= 1:
                    chosen |= 1 << v
                    rest &= ~(adj[v] | (1 << v))
                    changed = True
                    break
        if popcount(chosen) + popcount(rest) <= popcount(best[0]):
            return
        if not rest:
            best[0] = chosen
            return
        v = max(_bits(rest), key=lambda u: popcount(adj[u] & rest))
        go(chosen | (1 << v), rest & ~(adj[v] | (1 << v)))
        go(chosen, rest & ~(1 << v))

    go(0, (1 << g.n) - 1)
    return frozenset(g.labels[v] for v in _bits(best[0]))


def independence_number(g: Graph) -> int:
    return len(max_independent_set(g))
