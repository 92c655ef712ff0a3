"""Structured 1-extendability tests.

A graph is 1-extendable when every vertex belongs to some maximum
independent set. Over a modular decomposition this reduces to: a union
is 1-extendable iff all children are; a join additionally needs all
child independence numbers equal; at a prime node the children must be
1-extendable and the weighted representative graph must be 1-extendable
in the weighted sense.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph, WeightedGraph
from .independent_sets import alpha, mis_covered_vertices, weighted_profile
from .moddecomp import JOIN, LEAF, MDNode, MDTree, PRIME, UNION


@dataclass(frozen=True)
class ExtReport:
    """Outcome of a 1-extendability test.

    witness_failure is best effort: oracle-backed paths report a vertex
    in no MIS when the answer is negative; the structured recursions
    leave it unset.
    """

    is_1ext: bool
    alpha: int
    witness_failure: int | None = None


def _rec_cograph(node: MDNode) -> tuple[bool, int]:
    if node.kind == LEAF:
        return True, 1
    if node.kind == PRIME:
        raise InputError(
            "tree contains a prime node; use is_1ext_mw for general graphs"
        )
    results = [_rec_cograph(c) for c in node.children]
    oks = all(ok for ok, _ in results)
    alphas = [a for _, a in results]
    if node.kind == UNION:
        return oks, sum(alphas)
    return oks and len(set(alphas)) == 1, max(alphas)


def is_1ext_cograph(t: MDTree) -> ExtReport:
    """Cograph recursion, linear in the tree size; raises InputError on a
    tree with prime nodes."""
    ok, a = _rec_cograph(t.root)
    return ExtReport(is_1ext=ok, alpha=a)


def _rec_mw(node: MDNode) -> tuple[bool, int]:
    if node.kind == LEAF:
        return True, 1
    results = [_rec_mw(c) for c in node.children]
    oks = all(ok for ok, _ in results)
    alphas = [a for _, a in results]
    if node.kind == UNION:
        return oks, sum(alphas)
    if node.kind == JOIN:
        return oks and len(set(alphas)) == 1, max(alphas)
    assert node.rep is not None
    hw = WeightedGraph(node.rep, tuple(alphas))
    weight, covered = weighted_profile(hw)
    return oks and len(covered) == node.rep.n, weight


def is_1ext_mw(g: Graph, t: MDTree) -> ExtReport:
    """Modular-decomposition test; brute force only on the (small) prime
    representative graphs."""
    ok, a = _rec_mw(t.root)
    return ExtReport(is_1ext=ok, alpha=a)


def is_1ext_oracle_report(g: Graph) -> ExtReport:
    """Brute-force test with a starvation witness when negative."""
    a = alpha(g)
    covered = set(mis_covered_vertices(g))
    missing = [v for v in range(g.n) if v not in covered]
    if missing:
        return ExtReport(is_1ext=False, alpha=a, witness_failure=missing[0])
    return ExtReport(is_1ext=True, alpha=a)
