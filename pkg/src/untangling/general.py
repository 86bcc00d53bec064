"""Untangling arbitrary drawings with the n - floor(sqrt(n-2)) - 2 guarantee.

Number the vertices along any planar circular order; the drawing's vertex
sequence becomes a cyclic permutation of those numbers, and whichever of its
longest increasing / decreasing cyclic subsequences is longer can stay fixed
while everything else moves into the planar order (or its reversal).  The
cyclic Erdos-Szekeres bound makes that fixed set at least
floor(sqrt(n-2)) + 2 vertices large.
"""

from __future__ import annotations

from math import isqrt

from .blocks import planar_circular_order
from .errors import ConstructionFailed, InvalidN
from .generators import cycle_graph
from .model import (
    CircularDrawing,
    Untangling,
    empty_untangling,
    is_planar_drawing,
    moves_to_reach,
)
from .seqs import DECREASING, INCREASING, es_tight_cyclic, lics


def general_bound(n: int) -> int:
    """Worst-case moves needed for any drawing of an n-vertex outerplanar graph."""
    if n < 2:
        return 0
    return max(0, n - isqrt(n - 2) - 2)


def untangle_general(d: CircularDrawing) -> Untangling:
    """Planar result moving at most n - floor(sqrt(n-2)) - 2 vertices (n >= 3).

    Raises NotOuterplanar when the graph admits no planar circular order.
    """
    if is_planar_drawing(d):
        return empty_untangling()
    base = planar_circular_order(d.graph).order
    rank = {v: i for i, v in enumerate(base)}
    seq = tuple(rank[x] for x in d.order)
    inc = lics(seq, INCREASING)
    dec = lics(seq, DECREASING)
    if len(inc) >= len(dec):
        target, kept_ranks = base, inc
    else:
        target, kept_ranks = (base[0],) + tuple(reversed(base[1:])), dec
    kept = {base[r] for r in kept_ranks}
    moves = moves_to_reach(d.order, target, set(d.order) - kept)
    n = len(d.order)
    if len(moves) > general_bound(n):
        raise ConstructionFailed(
            f"monotone witness shorter than the guaranteed floor(sqrt({n}-2))+2"
        )
    return Untangling(tuple(moves))


def _sub_permutation(items: tuple[int, ...], n: int) -> tuple[int, ...]:
    head = items[:n]
    by_rank = {x: r for r, x in enumerate(sorted(head))}
    return tuple(by_rank[x] for x in head)


def tight_rank_permutation(n: int) -> tuple[int, ...]:
    """A cyclic permutation of 0..n-1 whose longest monotone cyclic
    subsequence has exactly floor(sqrt(n-2)) + 2 terms."""
    if n < 4:
        raise InvalidN("tight instances start at n = 4")
    s = isqrt(n - 2)
    if n == s * s + 2:
        base = es_tight_cyclic(s, s).items
        perm = base + (len(base),)  # one extra element only lifts each bound by one
    elif n <= s * (s + 1) + 1:
        perm = _sub_permutation(es_tight_cyclic(s + 1, s).items, n)
    else:
        perm = _sub_permutation(es_tight_cyclic(s + 1, s + 1).items, n)
    best = max(len(lics(perm, INCREASING)), len(lics(perm, DECREASING)))
    if best != s + 2:
        raise ConstructionFailed(f"tight permutation for n={n} has monotone length {best}")
    return perm


def gen_tight_general(n: int) -> CircularDrawing:
    """A drawing of the n-cycle needing exactly n - floor(sqrt(n-2)) - 2 moves.

    The cycle's planar order is unique up to reflection, so its minimum move
    count is n minus the longest monotone cyclic subsequence of the rank
    permutation realized by the drawing; a tight permutation pins that to the
    general bound.  Raises Unsupported outside the verified search range.
    """
    perm = tight_rank_permutation(n)
    g = cycle_graph(n)
    order = tuple(g.vertices[r] for r in perm)
    return CircularDrawing(g, order)
