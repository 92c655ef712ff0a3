"""Partitions into 1-extendable induced subgraphs.

The exact solver runs a dynamic program over the modular decomposition
that maintains, per node and target class count k, the set of feasible
k-tuples: (a_1, ..., a_k) is feasible when the node's module admits a
1-extendable k-partition whose classes have exactly these independence
numbers (an empty class is encoded as 0). Leaves contribute the unit
tuples; union nodes combine children by componentwise sums; join nodes
combine by the zero-tolerant intersection (coordinates must agree unless
one side is 0); prime nodes enumerate child tuple combinations and keep
those whose per-color weighted representative graphs are 1-extendable.
The minimum k with a non-empty root set is the number of channels needed
so that no vertex starves, and witnesses rebuild a concrete partition.

Alongside the exact search, three constructive procedures realize the
general upper bounds: stratified peeling (at most alpha classes), greedy
MIS stripping (at most 2*sqrt(n) classes), and the halving recursion on
cographs (at most log2(alpha) + 1 classes).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import InputError, ResourceLimitError
from .graphs import Graph, VertexSet, WeightedGraph, induced_subgraph
from .independent_sets import (
    alpha,
    is_1ext_oracle,
    maximum_independent_set,
    mis_covered_vertices,
    weighted_profile,
)
from .moddecomp import (
    LEAF,
    MDNode,
    MDTree,
    PRIME,
    UNION,
    decompose,
    is_cograph,
)

DEFAULT_PRODUCT_BUDGET = 5_000_000

Tuple = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """Total coloring vertex -> {1..k}; classes may be empty."""

    k: int
    color: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise InputError(f"class count must be non-negative, got {self.k}")
        for c in self.color:
            if not (1 <= c <= self.k):
                raise InputError(f"color {c} outside 1..{self.k}")

    def classes(self) -> list[VertexSet]:
        """Vertex sets per color 1..k (possibly empty)."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.color):
            out[c - 1].append(v)
        return [tuple(cls) for cls in out]

    def nonempty_count(self) -> int:
        return sum(1 for cls in self.classes() if cls)


class FeasibleTupleSet:
    """Deduplicated set of feasible k-tuples with one witness per tuple."""

    def __init__(self, k: int, witness: dict[Tuple, object]):
        if k < 1:
            raise InputError(f"class count k must be at least 1, got {k}")
        self.k = k
        self.witness = witness
        self.tuples: tuple[Tuple, ...] = tuple(sorted(witness))
        self._dp: "_TupleDP | None" = None

    def __len__(self) -> int:
        return len(self.tuples)

    def __bool__(self) -> bool:
        return bool(self.tuples)

    def __contains__(self, tup: Tuple) -> bool:
        return tup in self.witness

    def __iter__(self):
        return iter(self.tuples)

    def __repr__(self) -> str:
        return f"FeasibleTupleSet(k={self.k}, size={len(self.tuples)})"


def tuple_sum(s1: FeasibleTupleSet, s2: FeasibleTupleSet) -> FeasibleTupleSet:
    """Pairwise componentwise sums (the disjoint-union combination)."""
    if s1.k != s2.k:
        raise InputError(f"tuple arity mismatch: {s1.k} vs {s2.k}")
    out: dict[Tuple, object] = {}
    for t1 in s1.tuples:
        for t2 in s2.tuples:
            t = tuple(a + b for a, b in zip(t1, t2))
            if t not in out:
                out[t] = ("pair", t1, t2)
    return FeasibleTupleSet(s1.k, out)


def _join_tuples(t1: Tuple, t2: Tuple) -> Tuple | None:
    out = []
    for a, b in zip(t1, t2):
        if a == 0 or b == 0 or a == b:
            out.append(a if a >= b else b)
        else:
            return None
    return tuple(out)


def tuple_join(s1: FeasibleTupleSet, s2: FeasibleTupleSet) -> FeasibleTupleSet:
    """Zero-tolerant intersection (the complete-sum combination): each
    coordinate must agree, except that a 0 on either side defers to the
    other side's value."""
    if s1.k != s2.k:
        raise InputError(f"tuple arity mismatch: {s1.k} vs {s2.k}")
    out: dict[Tuple, object] = {}
    for t1 in s1.tuples:
        for t2 in s2.tuples:
            t = _join_tuples(t1, t2)
            if t is not None and t not in out:
                out[t] = ("pair", t1, t2)
    return FeasibleTupleSet(s1.k, out)


class _TupleDP:
    """Feasible-tuple dynamic program over a modular decomposition tree,
    retaining per-node sets and fold intermediates so a witness tuple can
    be expanded back into a concrete partition."""

    def __init__(self, tree: MDTree, k: int, product_budget: int):
        self.tree = tree
        self.k = k
        self.budget = product_budget
        self.final: dict[MDNode, FeasibleTupleSet] = {}
        self.chain: dict[MDNode, list[FeasibleTupleSet]] = {}

    def run(self) -> FeasibleTupleSet:
        fts = self._set_for(self.tree.root)
        fts._dp = self
        return fts

    def _set_for(self, node: MDNode) -> FeasibleTupleSet:
        got = self.final.get(node)
        if got is not None:
            return got
        if node.kind == LEAF:
            fts = self._leaf_set()
        elif node.kind == PRIME:
            fts = self._prime_set(node)
        else:
            fts = self._fold_set(node)
        self.final[node] = fts
        return fts

    def _leaf_set(self) -> FeasibleTupleSet:
        k = self.k
        out: dict[Tuple, object] = {}
        for i in range(1, k + 1):
            e = tuple(1 if j == i - 1 else 0 for j in range(k))
            out[e] = ("leaf", i)
        return FeasibleTupleSet(k, out)

    def _fold_set(self, node: MDNode) -> FeasibleTupleSet:
        op = tuple_sum if node.kind == UNION else tuple_join
        sets = [self._set_for(c) for c in node.children]
        cur = sets[0]
        combos: list[FeasibleTupleSet] = []
        for s in sets[1:]:
            cur = op(cur, s)
            combos.append(cur)
        self.chain[node] = combos
        return cur

    def _prime_set(self, node: MDNode) -> FeasibleTupleSet:
        assert node.rep is not None
        k = self.k
        rep = node.rep
        child_sets = [self._set_for(c) for c in node.children]
        total = math.prod(len(s) for s in child_sets)
        if total > self.budget:
            raise ResourceLimitError(
                f"prime-node tuple product {total} exceeds budget {self.budget}"
            )
        m = len(child_sets)
        # per-color feasibility depends only on which children contribute
        # which weight, so memoize on that key across combinations
        color_memo: dict[tuple[tuple[int, int], ...], tuple[int, bool]] = {}
        out: dict[Tuple, object] = {}
        for combo in itertools.product(*(s.tuples for s in child_sets)):
            result = []
            ok = True
            for i in range(k):
                key = tuple((j, combo[j][i]) for j in range(m) if combo[j][i] > 0)
                cached = color_memo.get(key)
                if cached is None:
                    if not key:
                        cached = (0, True)
                    else:
                        idxs = [j for j, _ in key]
                        sub, _ = induced_subgraph(rep, idxs)
                        hw = WeightedGraph(sub, tuple(w for _, w in key))
                        weight, covered = weighted_profile(hw)
                        cached = (weight, len(covered) == sub.n)
                    color_memo[key] = cached
                a_i, good = cached
                if not good:
                    ok = False
                    break
                result.append(a_i)
            if ok:
                t = tuple(result)
                if t not in out:
                    out[t] = ("prime", combo)
        return FeasibleTupleSet(k, out)

    def rebuild(self, tup: Tuple) -> Partition:
        colors = [0] * self.tree.graph.n
        self._assign(self.tree.root, tup, colors)
        return Partition(self.k, tuple(colors))

    def _assign(self, node: MDNode, tup: Tuple, colors: list[int]) -> None:
        witness = self.final[node].witness[tup]
        if node.kind == LEAF:
            assert node.vertex is not None
            colors[node.vertex] = witness[1]
            return
        if node.kind == PRIME:
            for child, child_tup in zip(node.children, witness[1]):
                self._assign(child, child_tup, colors)
            return
        combos = self.chain[node]
        cur = tup
        for i in range(len(node.children) - 1, 0, -1):
            _, left, right = combos[i - 1].witness[cur]
            self._assign(node.children[i], right, colors)
            cur = left
        self._assign(node.children[0], cur, colors)


def feasible_tuples_mw(
    g: Graph,
    t: MDTree,
    k: int,
    *,
    product_budget: int = DEFAULT_PRODUCT_BUDGET,
) -> FeasibleTupleSet:
    """Feasible k-tuples of g via its modular decomposition; non-empty iff
    g splits into k induced 1-extendable subgraphs."""
    if k < 1:
        raise InputError(f"class count k must be at least 1, got {k}")
    if t.graph is not g and t.graph != g:
        raise InputError("decomposition tree does not belong to this graph")
    return _TupleDP(t, k, product_budget).run()


def feasible_tuples_cograph(
    t: MDTree, k: int, *, symmetry_reduced: bool = False
) -> FeasibleTupleSet:
    """Cograph specialization of the feasible-tuple program.

    With symmetry_reduced=True, tuples are canonicalized to nondecreasing
    order at every combination step (expanding one operand's permutations
    to stay exact), which bounds blowup for the decision question; the
    reduced sets carry no witnesses, so they cannot rebuild partitions.
    """
    if k < 1:
        raise InputError(f"class count k must be at least 1, got {k}")
    if not is_cograph(t):
        raise InputError(
            "tree contains a prime node; use feasible_tuples_mw instead"
        )
    if not symmetry_reduced:
        return _TupleDP(t, k, DEFAULT_PRODUCT_BUDGET).run()
    canon = _canon_set(t.root, k)
    return FeasibleTupleSet(k, {tup: None for tup in canon})


def _canon_set(node: MDNode, k: int) -> set[Tuple]:
    if node.kind == LEAF:
        return {tuple([0] * (k - 1) + [1])}
    sets = [_canon_set(c, k) for c in node.children]
    cur = sets[0]
    for nxt in sets[1:]:
        out: set[Tuple] = set()
        for t1 in cur:
            for base in nxt:
                for t2 in set(itertools.permutations(base)):
                    if node.kind == UNION:
                        t = tuple(a + b for a, b in zip(t1, t2))
                    else:
                        t = _join_tuples(t1, t2)
                        if t is None:
                            continue
                    out.add(tuple(sorted(t)))
        cur = out
    return cur


def _ceil_2sqrt(n: int) -> int:
    root = math.isqrt(4 * n)
    return root if root * root == 4 * n else root + 1


def chi_1ext(
    g: Graph,
    *,
    max_k: int | None = None,
    product_budget: int = DEFAULT_PRODUCT_BUDGET,
) -> tuple[int, Partition] | None:
    """Minimum k admitting a 1-extendable k-partition, with a certificate.

    Searches k = 1, 2, ... up to min(alpha, ceil(2*sqrt(n)), and the log
    bound on cographs), all proven upper bounds, so the search always
    succeeds; returns None only when a user-supplied max_k cuts it off.
    """
    if g.n == 0:
        return 0, Partition(0, ())
    tree = decompose(g)
    a = alpha(g)
    bound = min(a, _ceil_2sqrt(g.n))
    if is_cograph(tree):
        bound = min(bound, a.bit_length())
    capped = max_k is not None and max_k < bound
    if capped:
        bound = max_k
    for k in range(1, bound + 1):
        fts = feasible_tuples_mw(g, tree, k, product_budget=product_budget)
        if fts:
            assert fts._dp is not None
            return k, fts._dp.rebuild(fts.tuples[0])
    if capped:
        return None
    raise AssertionError("no feasible partition within proven upper bounds")


def verify_partition(g: Graph, p: Partition) -> bool:
    """Certificate check: every non-empty class must induce a 1-extendable
    subgraph (brute-force oracle)."""
    if len(p.color) != g.n:
        raise InputError(
            f"partition covers {len(p.color)} vertices, graph has {g.n}"
        )
    for cls in p.classes():
        if not cls:
            continue
        sub, _ = induced_subgraph(g, cls)
        if not is_1ext_oracle(sub):
            return False
    return True


def peel_partition(g: Graph) -> Partition:
    """Repeatedly strip the set of vertices lying in some MIS of the
    residual graph; each stratum is 1-extendable by construction and the
    independence number drops every round, so at most alpha(g) classes."""
    colors = [0] * g.n
    remaining = list(range(g.n))
    c = 0
    while remaining:
        sub, _ = induced_subgraph(g, remaining)
        covered = mis_covered_vertices(sub)
        c += 1
        for v in covered:
            colors[remaining[v]] = c
        remaining = [v for v in remaining if colors[v] == 0]
    return Partition(c, tuple(colors))


def greedy_sqrt_partition(g: Graph) -> Partition:
    """Greedy MIS stripping: strata of size at least sqrt(n) become
    individual classes (at most sqrt(n) of them); the residual then has
    independence number below sqrt(n) and is peeled, for at most
    ceil(2*sqrt(n)) classes in total. A graph that is already
    1-extendable short-circuits to a single class."""
    n = g.n
    if n == 0:
        return Partition(0, ())
    if is_1ext_oracle(g):
        return Partition(1, (1,) * n)
    colors = [0] * n
    remaining = list(range(n))
    c = 0
    while remaining:
        sub, _ = induced_subgraph(g, remaining)
        a = alpha(sub)
        if a * a < n:
            break
        c += 1
        for v in maximum_independent_set(sub):
            colors[remaining[v]] = c
        remaining = [v for v in remaining if colors[v] == 0]
    if remaining:
        sub, _ = induced_subgraph(g, remaining)
        tail = peel_partition(sub)
        for new, old in enumerate(remaining):
            colors[old] = c + tail.color[new]
        c += tail.k
    return Partition(c, tuple(colors))


def split_integers(alpha1: int, alpha2: int, k: int) -> tuple[int, int]:
    """Split k into k1 + k2 with k1 <= alpha1, k2 <= alpha2 and
    max(k1-1, alpha1-k1) + max(k2-1, alpha2-k2) <= max(k-1, alpha1+alpha2-k).

    Three cases: k at or above the upper pivot (both k_i in the top half),
    k at or below the lower pivot (both in the bottom half), and the
    critical middle case, which occurs only when both alphas are even.
    Within the designated interval the smallest valid k1 is chosen.
    """
    if alpha1 < 0 or alpha2 < 0:
        raise InputError("independence numbers must be non-negative")
    if not (0 <= k <= alpha1 + alpha2):
        raise InputError(f"k={k} outside 0..{alpha1 + alpha2}")
    if alpha1 == 0:
        return 0, k
    if alpha2 == 0:
        return k, 0
    hi1, hi2 = (alpha1 + 2) // 2, (alpha2 + 2) // 2
    lo1, lo2 = (alpha1 + 1) // 2, (alpha2 + 1) // 2
    if k >= hi1 + hi2:
        k1 = max(hi1, k - alpha2)
        return k1, k - k1
    if k <= lo1 + lo2:
        k1 = max(0, k - lo2)
        return k1, k - k1
    # both alphas even and k = alpha1/2 + alpha2/2 + 1
    return alpha1 // 2 + 1, alpha2 // 2


def _cograph_alphas(node: MDNode, out: dict[MDNode, int]) -> int:
    if node.kind == LEAF:
        a = 1
    elif node.kind == UNION:
        a = sum(_cograph_alphas(c, out) for c in node.children)
    else:
        a = max(_cograph_alphas(c, out) for c in node.children)
    out[node] = a
    return a


def _extract(
    node: MDNode, k: int, alphas: dict[MDNode, int]
) -> tuple[list[int], list[int]]:
    """Partition the node's module into (V1, V2) with V1 inducing a
    1-extendable subgraph of independence number exactly k and
    alpha(V2) <= max(k-1, alpha - k)."""
    if node.kind == LEAF:
        assert node.vertex is not None
        return ([node.vertex], []) if k == 1 else ([], [node.vertex])
    if node.kind == UNION:
        return _extract_union(list(node.children), k, alphas)
    return _extract_join(list(node.children), k, alphas)


def _extract_union(
    children: list[MDNode], k: int, alphas: dict[MDNode, int]
) -> tuple[list[int], list[int]]:
    if len(children) == 1:
        return _extract(children[0], k, alphas)
    first, rest = children[0], children[1:]
    a1 = alphas[first]
    a2 = sum(alphas[c] for c in rest)
    k1, k2 = split_integers(a1, a2, k)
    v1a, v2a = _extract(first, k1, alphas)
    v1b, v2b = _extract_union(rest, k2, alphas)
    return v1a + v1b, v2a + v2b


def _extract_join(
    children: list[MDNode], k: int, alphas: dict[MDNode, int]
) -> tuple[list[int], list[int]]:
    if len(children) == 1:
        return _extract(children[0], k, alphas)
    first, rest = children[0], children[1:]
    a_first = alphas[first]
    a_rest = max(alphas[c] for c in rest)
    # the larger-alpha side leads; ties keep the first child in tree order
    if a_first >= a_rest:
        a_small = a_rest

        def big(kk: int) -> tuple[list[int], list[int]]:
            return _extract(first, kk, alphas)

        def small(kk: int) -> tuple[list[int], list[int]]:
            return _extract_join(rest, kk, alphas)

        small_vertices = [v for c in rest for v in c.module]
    else:
        a_small = a_first

        def big(kk: int) -> tuple[list[int], list[int]]:
            return _extract_join(rest, kk, alphas)

        def small(kk: int) -> tuple[list[int], list[int]]:
            return _extract(first, kk, alphas)

        small_vertices = list(first.module)
    if k <= a_small:
        v1a, v2a = big(k)
        v1b, v2b = small(k)
        return v1a + v1b, v2a + v2b
    v1a, v2a = big(k)
    return v1a, v2a + small_vertices


def log_partition_cograph(t: MDTree) -> Partition:
    """Halving recursion on a cograph: extract a 1-extendable subgraph of
    independence number ceil(alpha/2), recurse on the rest; uses at most
    floor(log2(alpha)) + 1 classes."""
    if not is_cograph(t):
        raise InputError("log partition requires a cograph decomposition")
    g = t.graph
    colors = [0] * g.n
    to_orig = list(range(g.n))
    cur_g, cur_tree = g, t
    c = 0
    while cur_g.n > 0:
        alphas: dict[MDNode, int] = {}
        a = _cograph_alphas(cur_tree.root, alphas)
        c += 1
        if a <= 1:
            for v in range(cur_g.n):
                colors[to_orig[v]] = c
            break
        k = (a + 1) // 2
        v1, v2 = _extract(cur_tree.root, k, alphas)
        for v in v1:
            colors[to_orig[v]] = c
        if not v2:
            break
        v2_sorted = sorted(v2)
        cur_g, _ = induced_subgraph(cur_g, v2_sorted)
        to_orig = [to_orig[v] for v in v2_sorted]
        cur_tree = decompose(cur_g)
    return Partition(c, tuple(colors))
