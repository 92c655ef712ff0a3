"""Exact independent-set engine: the ground truth other modules are
validated against.

The independence number is computed by branch and bound on bitmasks
(branch on a maximum-degree vertex, prune with a greedy clique-cover
upper bound), so it stays usable for sparse instances around n = 60.
Exact MIS counting and enumeration run behind an explicit cap and use
a memoized recursion over vertex-subset masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ResourceLimitError
from .graphs import Graph, VertexSet, WeightedGraph

DEFAULT_COUNT_CAP = 40
DEFAULT_WEIGHTED_CAP = 25


@dataclass(frozen=True)
class MisStats:
    """Exact MIS statistics: alpha, #MIS, and per-vertex #MIS counts."""

    alpha: int
    total_mis_count: int
    per_vertex_mis_count: tuple[int, ...]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _closed_masks(g: Graph) -> tuple[int, ...]:
    return tuple(m | (1 << v) for v, m in enumerate(g.neighbor_masks()))


def _clique_cover_bound(mask: int, nbr: tuple[int, ...]) -> int:
    """Greedily partition the masked vertices into cliques; the number of
    cliques bounds the independence number from above."""
    count = 0
    while mask:
        v = (mask & -mask).bit_length() - 1
        clique = 1 << v
        cand = mask & nbr[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= nbr[u]
        mask &= ~clique
        count += 1
    return count


def _alpha_mask(mask: int, nbr: tuple[int, ...]) -> int:
    """Branch-and-bound maximum independent set size within a vertex mask."""
    best = 0

    def rec(m: int, size: int) -> None:
        nonlocal best
        if m == 0:
            if size > best:
                best = size
            return
        if size + m.bit_count() <= best:
            return
        if size + _clique_cover_bound(m, nbr) <= best:
            return
        # branch on a vertex of maximum degree inside the mask
        v = -1
        vdeg = -1
        for u in _bits(m):
            d = (nbr[u] & m).bit_count()
            if d > vdeg:
                v, vdeg = u, d
        rec(m & ~nbr[v] & ~(1 << v), size + 1)
        rec(m & ~(1 << v), size)

    rec(mask, 0)
    return best


def alpha(g: Graph) -> int:
    """Independence number alpha(G); 0 for the empty graph."""
    if g.n == 0:
        return 0
    return _alpha_mask((1 << g.n) - 1, g.neighbor_masks())


class _MisCounter:
    """Memoized exact (alpha, #MIS) over vertex-subset masks.

    One instance per graph; the memo is shared across queries, which is
    what makes the per-vertex counts cheap.
    """

    def __init__(self, g: Graph):
        self.nbr = g.neighbor_masks()
        self.closed = _closed_masks(g)
        self.memo: dict[int, tuple[int, int]] = {0: (0, 1)}

    def query(self, mask: int) -> tuple[int, int]:
        memo = self.memo
        got = memo.get(mask)
        if got is not None:
            return got
        nbr = self.nbr
        v = -1
        vdeg = -1
        for u in _bits(mask):
            d = (nbr[u] & mask).bit_count()
            if d > vdeg:
                v, vdeg = u, d
        a0, c0 = self.query(mask & ~(1 << v))
        a1, c1 = self.query(mask & ~self.closed[v])
        a1 += 1
        if a1 > a0:
            res = (a1, c1)
        elif a1 < a0:
            res = (a0, c0)
        else:
            res = (a0, c0 + c1)
        memo[mask] = res
        return res


def mis_stats(g: Graph, cap: int = DEFAULT_COUNT_CAP) -> MisStats:
    """Exact alpha, total MIS count, and per-vertex MIS counts.

    Counts are arbitrary-precision integers. Raises ResourceLimitError
    when n exceeds the brute-force cap.
    """
    if g.n > cap:
        raise ResourceLimitError(
            f"mis_stats brute-force cap exceeded: n={g.n} > cap={cap}"
        )
    counter = _MisCounter(g)
    full = (1 << g.n) - 1
    a, total = counter.query(full)
    per = []
    for v in range(g.n):
        av, cv = counter.query(full & ~counter.closed[v])
        per.append(cv if av == a - 1 else 0)
    return MisStats(alpha=a, total_mis_count=total, per_vertex_mis_count=tuple(per))


def enumerate_max_independent_sets(
    g: Graph, cap: int = DEFAULT_COUNT_CAP
) -> Iterator[VertexSet]:
    """Yield every maximum independent set exactly once, lexicographically
    by sorted vertex list."""
    if g.n > cap:
        raise ResourceLimitError(
            f"enumeration brute-force cap exceeded: n={g.n} > cap={cap}"
        )
    return _enumerate_mis(g)


def _enumerate_mis(g: Graph) -> Iterator[VertexSet]:
    counter = _MisCounter(g)
    full = (1 << g.n) - 1
    target, _ = counter.query(full)

    def walk(chosen: list[int], cand: int) -> Iterator[VertexSet]:
        if len(chosen) == target:
            yield tuple(chosen)
            return
        need = target - len(chosen)
        for v in _bits(cand):
            rest = cand & ~counter.closed[v] & ~((1 << (v + 1)) - 1)
            if 1 + counter.query(rest)[0] >= need:
                chosen.append(v)
                yield from walk(chosen, rest)
                chosen.pop()

    return walk([], full)


def is_1ext_oracle(g: Graph) -> bool:
    """True iff every vertex lies in some MIS, i.e. for every v,
    alpha(G - N[v]) = alpha(G) - 1. Uncapped branch and bound."""
    if g.n == 0:
        return True
    nbr = g.neighbor_masks()
    closed = _closed_masks(g)
    full = (1 << g.n) - 1
    a = _alpha_mask(full, nbr)
    return all(_alpha_mask(full & ~closed[v], nbr) == a - 1 for v in range(g.n))


def mis_covered_vertices(g: Graph) -> VertexSet:
    """Vertices belonging to at least one MIS (uncapped branch and bound)."""
    if g.n == 0:
        return ()
    nbr = g.neighbor_masks()
    closed = _closed_masks(g)
    full = (1 << g.n) - 1
    a = _alpha_mask(full, nbr)
    return tuple(
        v for v in range(g.n) if _alpha_mask(full & ~closed[v], nbr) == a - 1
    )


def maximum_independent_set(g: Graph) -> VertexSet:
    """The lexicographically smallest maximum independent set."""
    if g.n == 0:
        return ()
    nbr = g.neighbor_masks()
    closed = _closed_masks(g)
    cand = (1 << g.n) - 1
    remaining = _alpha_mask(cand, nbr)
    chosen = []
    while remaining > 0:
        for v in _bits(cand):
            rest = cand & ~closed[v]
            if _alpha_mask(rest, nbr) == remaining - 1:
                chosen.append(v)
                cand = rest
                remaining -= 1
                break
    return tuple(chosen)


def weighted_profile(
    h: WeightedGraph, cap: int = DEFAULT_WEIGHTED_CAP
) -> tuple[int, VertexSet]:
    """Maximum weight over independent sets of h, together with the set of
    vertices appearing in at least one maximum-weight independent set.

    Plain recursive enumeration of independent subsets; intended for the
    small representative graphs of a modular decomposition.
    """
    n = h.base.n
    if n > cap:
        raise ResourceLimitError(
            f"weighted independent-set cap exceeded: n={n} > cap={cap}"
        )
    if n == 0:
        return 0, ()
    nbr = h.base.neighbor_masks()
    closed = _closed_masks(h.base)
    weights = h.weights
    best = 0
    cover = 0

    def wsum(mask: int) -> int:
        return sum(weights[v] for v in _bits(mask))

    def rec(cand: int, chosen: int, weight: int) -> None:
        nonlocal best, cover
        if weight + wsum(cand) < best:
            return
        if cand == 0:
            if weight > best:
                best, cover = weight, chosen
            elif weight == best:
                cover |= chosen
            return
        v = (cand & -cand).bit_length() - 1
        rec(cand & ~closed[v], chosen | (1 << v), weight + weights[v])
        rec(cand & ~(1 << v), chosen, weight)

    rec((1 << n) - 1, 0, 0)
    return best, tuple(_bits(cover))


def weighted_alpha(h: WeightedGraph, cap: int = DEFAULT_WEIGHTED_CAP) -> int:
    """Maximum total weight over independent sets of h."""
    return weighted_profile(h, cap)[0]


def weighted_is_1ext(h: WeightedGraph, cap: int = DEFAULT_WEIGHTED_CAP) -> bool:
    """True iff every vertex of h is in some maximum-weight independent set."""
    _, covered = weighted_profile(h, cap)
    return len(covered) == h.base.n
