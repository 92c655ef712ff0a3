"""Immutable simple graphs, composition operations, and named graph families.

Vertices are dense 0-based integers. Composition operations relabel
deterministically (first operand first, then the second; parts in list
order) so callers can assert exact edge sets rather than isomorphism.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

VertexSet = tuple[int, ...]


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are kept as a sorted tuple of (u, v) pairs with u < v, plus a
    per-vertex sorted adjacency tuple built once at construction.
    Instances are immutable: no operation mutates its inputs, so graphs
    are safe to share across threads.
    """

    __slots__ = ("n", "edges", "adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        self.n: int = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        self.adj: tuple[VertexSet, ...] = tuple(tuple(sorted(a)) for a in lists)
        self._masks: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex open neighborhoods as bitmasks (computed once)."""
        if self._masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._masks = tuple(masks)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with positive integer vertex weights."""

    base: Graph
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.base.n:
            raise InputError(
                f"expected {self.base.n} weights, got {len(self.weights)}"
            )
        for w in self.weights:
            if w < 1:
                raise InputError(f"vertex weights must be >= 1, got {w}")


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by a vertex subset, plus the old->new index map.

    New labels follow the sorted order of the requested vertices.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range for n={g.n}")
    index = {old: new for new, old in enumerate(chosen)}
    members = set(chosen)
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in members and v in members
    ]
    return Graph(len(chosen), edges), index


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g2's vertices are shifted by g1.n."""
    off = g1.n
    edges = list(g1.edges) + [(u + off, v + off) for u, v in g2.edges]
    return Graph(g1.n + g2.n, edges)


def complete_sum(g1: Graph, g2: Graph) -> Graph:
    """Complete sum (join): disjoint union plus all cross edges."""
    off = g1.n
    edges = list(g1.edges) + [(u + off, v + off) for u, v in g2.edges]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges)


def substitute(h: Graph, parts: Sequence[Graph]) -> tuple[Graph, list[VertexSet]]:
    """Substitute one graph per vertex of h; returns the result and the
    module boundaries (each part's vertex set is a module of the result)."""
    if len(parts) != h.n:
        raise InputError(f"expected {h.n} parts, got {len(parts)}")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    edges: list[tuple[int, int]] = []
    for i, p in enumerate(parts):
        off = offsets[i]
        edges += [(u + off, v + off) for u, v in p.edges]
    for i, j in h.edges:
        edges += [
            (u + offsets[i], v + offsets[j])
            for u in range(parts[i].n)
            for v in range(parts[j].n)
        ]
    boundaries = [
        tuple(range(offsets[i], offsets[i] + parts[i].n)) for i in range(h.n)
    ]
    return Graph(total, edges), boundaries


def complete_multipartite(sizes: Sequence[int]) -> tuple[Graph, list[VertexSet]]:
    """Complete multipartite graph with the given part sizes, plus the
    part boundaries (parts laid out contiguously in list order)."""
    for s in sizes:
        if s < 1:
            raise InputError(f"part sizes must be positive, got {s}")
    return substitute(complete_graph(len(sizes)), [empty_graph(s) for s in sizes])


def gen_multipartite_extremal(k: int) -> Graph:
    """Complete multipartite graph with part sizes 2^0, ..., 2^k
    (2^(k+1) - 1 vertices)."""
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    return complete_multipartite([1 << i for i in range(k + 1)])[0]


def gen_interval_extremal(k: int) -> Graph:
    """Recursive interval cograph family: G_1 = K1 and
    G_{k+1} = K1 + (G_k U G_k); G_k has 2^k - 1 vertices.

    The apex K1 comes first, so vertex 0 of the result is universal.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    g = complete_graph(1)
    for _ in range(k - 1):
        g = complete_sum(complete_graph(1), disjoint_union(g, g))
    return g


def gen_hardness_gadget(g: Graph, k: int) -> Graph:
    """Complete sum of g with a fresh independent set of k*n(g)+1 vertices,
    so the result has (k+1)*n(g)+1 vertices."""
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    return complete_sum(g, empty_graph(k * g.n + 1))
