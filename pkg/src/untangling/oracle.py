"""Brute-force ground truth at desk scale.

Everything here is written to be obviously correct rather than fast: the
planar-order enumerator backtracks over circle positions with an incremental
crossing check, and the naive variant filters all rotation-normalized
permutations outright so the two can cross-validate each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Sequence

from .errors import NotOuterplanar, TooLarge
from .model import CircularDrawing, Edge, Graph, Vertex, is_crossing_free, rotate_to
from .seqs import lccs, lis, lis_indices

ORACLE_MAX_N = 9
DISTICOR_MAX_CHUNKS = 8
DISTICOR_MAX_TOTAL = 10_000
THREE_PARTITION_MAX_M = 4


def enumerate_planar_orders(g: Graph, nmax: int = ORACLE_MAX_N) -> list[tuple[Vertex, ...]]:
    """All crossing-free cyclic orders of g, one per rotation class.

    The first vertex is pinned to normalize rotation; reflections are kept
    because clockwise orientation is significant downstream.
    """
    n = len(g.vertices)
    if n > nmax:
        raise TooLarge(f"enumerate_planar_orders capped at n={nmax}, got {n}")
    if n == 0:
        return [()]
    first = g.vertices[0]
    adj = {v: g.neighbors(v) for v in g.vertices}
    out: list[tuple[Vertex, ...]] = []
    pos: dict[Vertex, int] = {first: 0}
    prefix: list[Vertex] = [first]
    placed_edges: list[tuple[int, int]] = []

    def alternates(a: int, b: int, c: int, d: int) -> bool:
        if a > b:
            a, b = b, a
        return (a < c < b) != (a < d < b)

    def extend() -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        p = len(prefix)
        for x in g.vertices:
            if x in pos:
                continue
            new_edges = [(pos[y], p) for y in adj[x] if y in pos]
            ok = True
            for i, j in new_edges:
                for a, b in placed_edges:
                    if a in (i, j) or b in (i, j):
                        continue
                    if alternates(i, j, a, b):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            pos[x] = p
            prefix.append(x)
            placed_edges.extend(new_edges)
            extend()
            del pos[x]
            prefix.pop()
            del placed_edges[len(placed_edges) - len(new_edges) :]

    extend()
    return out


def naive_planar_orders(g: Graph, nmax: int = 7) -> list[tuple[Vertex, ...]]:
    """Independent cross-check: filter every rotation-normalized permutation."""
    n = len(g.vertices)
    if n > nmax:
        raise TooLarge(f"naive_planar_orders capped at n={nmax}, got {n}")
    if n == 0:
        return [()]
    first, rest = g.vertices[0], g.vertices[1:]
    return [
        (first,) + tail
        for tail in permutations(rest)
        if is_crossing_free((first,) + tail, g.edges)
    ]


@dataclass(frozen=True)
class ExactUntangleResult:
    moved_count: int
    target_order: tuple[Vertex, ...]
    fixed: tuple[Vertex, ...]


def exact_min_untangle(d: CircularDrawing, nmax: int = ORACLE_MAX_N) -> ExactUntangleResult:
    """Ground-truth minimum untangling cost: n minus the best common cyclic
    subsequence between the drawing and any planar order of its graph."""
    orders = enumerate_planar_orders(d.graph, nmax)
    if not orders:
        raise NotOuterplanar("graph admits no planar circular order")
    n = len(d.order)
    best_w: list[Vertex] = []
    best_t: tuple[Vertex, ...] = orders[0]
    for t in orders:
        w = lccs(d.order, t)
        if len(w) > len(best_w):
            best_w, best_t = w, t
            if len(w) == n:
                break
    return ExactUntangleResult(n - len(best_w), best_t, tuple(best_w))


def _lcs_distinct(a: Sequence, b: Sequence) -> int:
    pos = {x: i for i, x in enumerate(b)}
    mapped = [pos[x] for x in a if x in pos]
    return len(lis_indices(mapped))


def _common_through_edge(order: tuple, t: tuple, u: Vertex, v: Vertex) -> int:
    """Largest common cyclic subsequence of `order` and `t` containing u and v."""
    a = rotate_to(order, u)[1:]
    b = rotate_to(t, u)[1:]
    ia, ib = a.index(v), b.index(v)
    return 2 + _lcs_distinct(a[:ia], b[:ib]) + _lcs_distinct(a[ia + 1 :], b[ib + 1 :])


def exact_min_untangle_edge_fixed(d: CircularDrawing, e: Edge, nmax: int = ORACLE_MAX_N) -> int:
    """Minimum moves over planar orders in which both endpoints of `e` stay
    fixed (and keep their cyclic position relative to all fixed vertices)."""
    u, v = d.graph.edge(*e)
    orders = enumerate_planar_orders(d.graph, nmax)
    if not orders:
        raise NotOuterplanar("graph admits no planar circular order")
    n = len(d.order)
    best = 0
    for t in orders:
        best = max(best, _common_through_edge(d.order, t, u, v))
        if best == n:
            break
    return n - best


@dataclass(frozen=True)
class DistIcorAnswer:
    solvable: bool
    witness: Optional[tuple[int, ...]]
    arrangement: Optional[tuple[tuple[int, int], ...]]  # (chunk index, +1/-1) per slot


def _check_disticor_budget(chunks: Sequence[Sequence[int]], max_chunks: int, max_total: int) -> None:
    total = sum(len(c) for c in chunks)
    if len(chunks) > max_chunks or total > max_total:
        raise TooLarge(
            f"exact Dist-ICOR capped at {max_chunks} chunks / {max_total} items, "
            f"got {len(chunks)} / {total}"
        )


def best_chunk_arrangement(
    chunks: Sequence[Sequence[int]],
    max_chunks: int = DISTICOR_MAX_CHUNKS,
    max_total: int = DISTICOR_MAX_TOTAL,
) -> tuple[int, tuple[int, ...], tuple[tuple[int, int], ...]]:
    """Exhaustive best: (longest strictly increasing subsequence over all chunk
    permutations and reversals, one witness, the arrangement achieving it)."""
    _check_disticor_budget(chunks, max_chunks, max_total)
    best_len, best_wit, best_arr = 0, (), ()
    for perm in permutations(range(len(chunks))):
        for signs in product((1, -1), repeat=len(chunks)):
            concat: list[int] = []
            for ci, s in zip(perm, signs):
                seq = list(chunks[ci])
                concat.extend(seq if s == 1 else reversed(seq))
            w = lis(concat)
            if len(w) > best_len:
                best_len = len(w)
                best_wit = tuple(w)
                best_arr = tuple(zip(perm, signs))
    return best_len, best_wit, best_arr


def exact_disticor(
    chunks: Sequence[Sequence[int]],
    M: int,
    max_chunks: int = DISTICOR_MAX_CHUNKS,
    max_total: int = DISTICOR_MAX_TOTAL,
) -> DistIcorAnswer:
    """Exhaustive yes/no with witness for the chunk-ordering problem."""
    _check_disticor_budget(chunks, max_chunks, max_total)
    for perm in permutations(range(len(chunks))):
        for signs in product((1, -1), repeat=len(chunks)):
            concat: list[int] = []
            for ci, s in zip(perm, signs):
                seq = list(chunks[ci])
                concat.extend(seq if s == 1 else reversed(seq))
            w = lis(concat)
            if len(w) >= M:
                return DistIcorAnswer(True, tuple(w[:M]), tuple(zip(perm, signs)))
    return DistIcorAnswer(False, None, None)


def exact_3partition(
    a: Sequence[int], k: int, max_m: int = THREE_PARTITION_MAX_M
) -> tuple[bool, Optional[tuple[tuple[int, int, int], ...]]]:
    """Exhaustive 3-partition over index triplets; witness is index triplets."""
    n = len(a)
    if n % 3 != 0:
        return False, None
    m = n // 3
    if m > max_m:
        raise TooLarge(f"exact_3partition capped at m={max_m}, got {m}")
    if sum(a) != m * k:
        return False, None

    used = [False] * n
    chosen: list[tuple[int, int, int]] = []

    def rec() -> bool:
        try:
            i = used.index(False)
        except ValueError:
            return True
        used[i] = True
        for j in range(i + 1, n):
            if used[j]:
                continue
            used[j] = True
            for l in range(j + 1, n):
                if used[l] or a[i] + a[j] + a[l] != k:
                    continue
                used[l] = True
                chosen.append((i, j, l))
                if rec():
                    return True
                chosen.pop()
                used[l] = False
            used[j] = False
        used[i] = False
        return False

    if rec():
        return True, tuple(chosen)
    return False, None
