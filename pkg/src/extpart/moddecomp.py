"""Modular decomposition: strong-module tree, modular width, cograph
detection, and weighted representative graphs.

The algorithm is the classical recursive one: split on connected
components (union node), then on co-connected components (join node);
when the graph is connected and co-connected the maximal strong modules
are recovered by closing vertex pairs under splitters, and the quotient
on them is prime. Polynomial but not linear; fine at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import InputError
from .graphs import Graph, VertexSet, WeightedGraph, complete_graph
from .independent_sets import _bits, weighted_alpha

LEAF = "leaf"
UNION = "union"
JOIN = "join"
PRIME = "prime"


@dataclass(frozen=True, eq=False)
class MDNode:
    """One node of a modular decomposition tree.

    kind is "leaf", "union", "join" or "prime"; module lists the graph
    vertices below the node; prime nodes carry the representative graph,
    whose vertex i corresponds to children[i].
    """

    kind: str
    module: VertexSet
    children: tuple["MDNode", ...] = ()
    vertex: int | None = None
    rep: Graph | None = None

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF


@dataclass(frozen=True, eq=False)
class MDTree:
    """Modular decomposition tree of a graph."""

    graph: Graph
    root: MDNode

    def nodes(self) -> Iterator[MDNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


def _grow_component(start: int, mask: int, adj_of: Callable[[int], int]) -> int:
    comp = 0
    frontier = 1 << start
    while frontier:
        comp |= frontier
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj_of(v)
        frontier = nxt & mask & ~comp
    return comp


def _split_components(mask: int, adj_of: Callable[[int], int]) -> list[int]:
    comps = []
    rem = mask
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = _grow_component(v, mask, adj_of)
        comps.append(comp)
        rem &= ~comp
    return comps  # already ordered by minimum vertex


def _smallest_module(nbr: tuple[int, ...], mask: int, seed: int) -> int:
    """Close a seed set under splitters: repeatedly absorb any outside
    vertex adjacent to some but not all of the current set."""
    mod = seed
    grew = True
    while grew and mod != mask:
        grew = False
        for w in _bits(mask & ~mod):
            x = nbr[w] & mod
            if x and x != mod:
                mod |= 1 << w
                grew = True
    return mod


def _maximal_strong_modules(nbr: tuple[int, ...], mask: int) -> list[int]:
    """Partition of a connected, co-connected graph into its maximal
    strong modules: two vertices share a module iff the smallest module
    containing both is proper."""
    vs = list(_bits(mask))
    parent = {v: v for v in vs}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            mod = _smallest_module(nbr, mask, (1 << u) | (1 << v))
            if mod != mask:
                roots = {find(w) for w in _bits(mod)}
                keep = min(roots)
                for r in roots:
                    parent[r] = keep
    groups: dict[int, int] = {}
    for v in vs:
        r = find(v)
        groups[r] = groups.get(r, 0) | (1 << v)
    return [groups[r] for r in sorted(groups)]


def _decompose_mask(g: Graph, nbr: tuple[int, ...], mask: int) -> MDNode:
    vs = tuple(_bits(mask))
    if len(vs) == 1:
        return MDNode(LEAF, vs, vertex=vs[0])

    comps = _split_components(mask, lambda v: nbr[v])
    if len(comps) > 1:
        children = tuple(_decompose_mask(g, nbr, c) for c in comps)
        return MDNode(UNION, vs, children)

    full_bit = mask
    cocomps = _split_components(mask, lambda v: full_bit & ~nbr[v] & ~(1 << v))
    if len(cocomps) > 1:
        children = tuple(_decompose_mask(g, nbr, c) for c in cocomps)
        return MDNode(JOIN, vs, children)

    classes = _maximal_strong_modules(nbr, mask)
    reps = [(c & -c).bit_length() - 1 for c in classes]
    hedges = [
        (i, j)
        for i in range(len(reps))
        for j in range(i + 1, len(reps))
        if g.has_edge(reps[i], reps[j])
    ]
    rep_graph = Graph(len(reps), hedges)
    children = tuple(_decompose_mask(g, nbr, c) for c in classes)
    return MDNode(PRIME, vs, children, rep=rep_graph)


def decompose(g: Graph) -> MDTree:
    """Modular decomposition of a non-empty graph, children ordered by
    minimum contained vertex."""
    if g.n == 0:
        raise InputError("cannot decompose the empty graph")
    root = _decompose_mask(g, g.neighbor_masks(), (1 << g.n) - 1)
    return MDTree(graph=g, root=root)


def modular_width(t: MDTree) -> int:
    """Maximum order of a prime representative; 2 for non-trivial trees
    without prime nodes (cographs), 1 for a single vertex."""
    width = 1 if t.root.is_leaf else 2
    for node in t.nodes():
        if node.kind == PRIME:
            width = max(width, len(node.children))
    return width


def is_cograph(t: MDTree) -> bool:
    """True iff the decomposition has no prime node."""
    return all(node.kind != PRIME for node in t.nodes())


def verify_module(g: Graph, vertices: VertexSet) -> bool:
    """Check the module definition directly: every outside vertex sees all
    of the set or none of it."""
    mask = 0
    for v in vertices:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    nbr = g.neighbor_masks()
    for w in range(g.n):
        if mask & (1 << w):
            continue
        x = nbr[w] & mask
        if x and x != mask:
            return False
    return True


def module_alpha(g: Graph, node: MDNode) -> int:
    """Independence number of the subgraph induced by the node's module,
    by recursion over the tree (weighted representative at prime nodes)."""
    if node.kind == LEAF:
        return 1
    if node.kind == UNION:
        return sum(module_alpha(g, c) for c in node.children)
    if node.kind == JOIN:
        return max(module_alpha(g, c) for c in node.children)
    return weighted_alpha(weighted_representative(g, node))


def weighted_representative(g: Graph, node: MDNode) -> WeightedGraph:
    """Representative graph of an internal node with each child weighted
    by the independence number of its module."""
    if node.is_leaf:
        raise InputError("a leaf has no representative graph")
    m = len(node.children)
    if node.kind == UNION:
        base = Graph(m)
    elif node.kind == JOIN:
        base = complete_graph(m)
    else:
        assert node.rep is not None
        base = node.rep
    weights = tuple(module_alpha(g, c) for c in node.children)
    return WeightedGraph(base, weights)


def reconstruct(t: MDTree) -> Graph:
    """Rebuild the graph by recursive substitution over the tree; equals
    the decomposed graph exactly (used as a validation oracle)."""
    edges: list[tuple[int, int]] = []

    def walk(node: MDNode) -> None:
        if node.is_leaf:
            return
        for child in node.children:
            walk(child)
        if node.kind == UNION:
            return
        m = len(node.children)
        for i in range(m):
            for j in range(i + 1, m):
                if node.kind == JOIN or (
                    node.rep is not None and node.rep.has_edge(i, j)
                ):
                    edges.extend(
                        (u, v)
                        for u in node.children[i].module
                        for v in node.children[j].module
                    )

    walk(t.root)
    return Graph(t.graph.n, edges)
