"""Instance constructions linking 3-partition, chunk ordering, and untangling.

The chunk construction turns each 3-partition element a_i into a long chunk
whose strictly increasing subsequences are capped at a_i + X forwards and X
backwards; a valid triplet partition lines up per-chunk runs into one
increasing subsequence of length exactly m * (K + 3X).  The second
construction turns a distinct-chunk instance into a flower of cycles sharing
one hub vertex, drawn with ranks in clockwise order, so untangling budget
L - M is equivalent to finding an increasing subsequence of length M.

One knob deviates from the narrowest reading of the source casework: the run
starting offsets go up to K - a_i + 1 (not K - a_i).  With the shorter range
the top value m*(K+3X) never occurs in any chunk, so no witness of the stated
length exists; the extended range keeps all five chunk properties intact.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConstructionFailed, InvalidInstance, NotAWitness, NotDistinct, PropertyViolation
from .model import CircularDrawing, Graph
from .seqs import lis_indices


@dataclass(frozen=True)
class ThreePartitionInstance:
    """Multiset of 3m positive integers, each strictly between K/4 and K/2."""

    a: tuple[int, ...]
    k: int

    def __post_init__(self):
        if len(self.a) == 0 or len(self.a) % 3 != 0:
            raise InvalidInstance("need 3m elements")
        if any(x <= 0 for x in self.a) or self.k <= 0:
            raise InvalidInstance("elements and target must be positive")
        if any(not (self.k < 4 * x and 2 * x < self.k) for x in self.a):
            raise InvalidInstance("every element must satisfy K/4 < a < K/2")

    @property
    def m(self) -> int:
        return len(self.a) // 3

    def balanced(self) -> bool:
        return sum(self.a) == self.m * self.k


@dataclass(frozen=True)
class DistIcorInstance:
    """Chunks plus the target increasing-subsequence length M."""

    chunks: tuple[tuple[int, ...], ...]
    m_target: int
    distinct: bool = True

    def __post_init__(self):
        if self.m_target <= 0:
            raise InvalidInstance("M must be positive")
        if any(len(c) == 0 for c in self.chunks):
            raise InvalidInstance("chunks must be nonempty")
        all_items = [x for c in self.chunks for x in c]
        if any(x <= 0 for x in all_items):
            raise InvalidInstance("chunk entries must be positive integers")
        if self.distinct and len(set(all_items)) != len(all_items):
            raise NotDistinct("chunk entries repeat in a distinct instance")

    @property
    def total(self) -> int:
        return sum(len(c) for c in self.chunks)


@dataclass(frozen=True)
class ReducedChunk:
    source_element: int
    run_length: int                 # a_i + X
    start_numbers: tuple[int, ...]  # decreasing
    projection: tuple[int, ...]     # concatenated runs (values may repeat across chunks)
    ranks: tuple[int, ...]          # globally distinct word ranks


@dataclass(frozen=True)
class ReducedDistIcor:
    source: ThreePartitionInstance  # after normalization
    scale: int                      # 1, or 3m when normalization multiplied through
    x: int                          # 3mK
    block: int                      # K + 3X
    chunks: tuple[ReducedChunk, ...]
    instance: DistIcorInstance


def reduce_3p_to_disticor(inst: ThreePartitionInstance) -> ReducedDistIcor:
    """Build the chunk instance; M = m * (K + 3X) with X = 3mK."""
    m = inst.m
    scale = 1
    if any(x % (3 * m) != 0 for x in inst.a):
        scale = 3 * m
        inst = ThreePartitionInstance(tuple(x * scale for x in inst.a), inst.k * scale)
    k = inst.k
    x = 3 * m * k
    block = k + 3 * x

    runs_per_chunk: list[tuple[int, list[int]]] = []
    for ai in inst.a:
        starts = sorted(
            (
                alpha * block + beta * x + gamma
                for alpha in range(m)
                for beta in (0, 1, 2)
                for gamma in range(1, k - ai + 2)
            ),
            reverse=True,
        )
        runs_per_chunk.append((ai + x, starts))

    projections = []
    for run_len, starts in runs_per_chunk:
        proj: list[int] = []
        for st in starts:
            proj.extend(range(st, st + run_len))
        projections.append(proj)

    # words (value, |C| - position) ordered lexicographically become the ranks
    total = sum(len(p) for p in projections)
    words: list[tuple[int, int]] = []
    pos = 0
    for proj in projections:
        for val in proj:
            pos += 1
            words.append((val, total - pos))
    rank_of = {w: r + 1 for r, w in enumerate(sorted(words))}

    chunks: list[ReducedChunk] = []
    cursor = 0
    for (run_len, starts), proj in zip(runs_per_chunk, projections):
        ranks = tuple(rank_of[words[cursor + j]] for j in range(len(proj)))
        cursor += len(proj)
        chunks.append(
            ReducedChunk(
                source_element=run_len - x,
                run_length=run_len,
                start_numbers=tuple(starts),
                projection=tuple(proj),
                ranks=ranks,
            )
        )

    m_target = m * block
    di = DistIcorInstance(tuple(c.ranks for c in chunks), m_target, distinct=True)
    return ReducedDistIcor(inst, scale, x, block, tuple(chunks), di)


def expected_chunk_length(reduced: ReducedDistIcor, i: int) -> int:
    """Closed form: (a_i + X) runs times 3m(K - a_i + 1) starting offsets."""
    ai = reduced.source.a[i]
    m = reduced.source.m
    return (ai + reduced.x) * 3 * m * (reduced.source.k - ai + 1)


@dataclass(frozen=True)
class PartitionWitness:
    chunk_order: tuple[int, ...]
    ranks: tuple[int, ...]
    projection: tuple[int, ...]


def _run_slice(chunk: ReducedChunk, start: int) -> tuple[int, int]:
    starts = chunk.start_numbers  # decreasing
    idx = bisect_left([-s for s in starts], -start)
    if idx >= len(starts) or starts[idx] != start:
        raise NotAWitness(f"no run starting at {start} in chunk of element {chunk.source_element}")
    lo = idx * chunk.run_length
    return lo, lo + chunk.run_length


def witness_3p_to_disticor(
    reduced: ReducedDistIcor, partition: Sequence[Sequence[int]]
) -> PartitionWitness:
    """Turn a valid triplet partition (index triplets) into an increasing
    subsequence of length exactly m * (K + 3X) across the ordered chunks."""
    inst = reduced.source
    m, k, x, block = inst.m, inst.k, reduced.x, reduced.block
    flat = [i for t in partition for i in t]
    if sorted(flat) != list(range(3 * m)):
        raise NotAWitness("partition is not a disjoint cover of the element indices")
    for t in partition:
        if len(t) != 3 or sum(inst.a[i] for i in t) != k:
            raise NotAWitness(f"triplet {tuple(t)} does not sum to K")

    chunk_order: list[int] = []
    ranks: list[int] = []
    projection: list[int] = []
    for ti, t in enumerate(partition):
        ix, iy, iz = sorted(t)
        ax, ay = inst.a[ix], inst.a[iy]
        base = ti * block
        picks = (
            (ix, base + 1),
            (iy, base + x + ax + 1),
            (iz, base + 2 * x + ax + ay + 1),
        )
        for ci, start in picks:
            lo, hi = _run_slice(reduced.chunks[ci], start)
            chunk_order.append(ci)
            ranks.extend(reduced.chunks[ci].ranks[lo:hi])
            projection.extend(reduced.chunks[ci].projection[lo:hi])

    if len(ranks) != m * block or any(ranks[i] >= ranks[i + 1] for i in range(len(ranks) - 1)):
        raise ConstructionFailed("assembled witness is not strictly increasing of length M")
    return PartitionWitness(tuple(chunk_order), tuple(ranks), tuple(projection))


@dataclass(frozen=True)
class ChunkPropertyReport:
    checked: tuple[str, ...]


def _existence_samples(n_starts: int) -> list[int]:
    if n_starts <= 64:
        return list(range(n_starts))
    step = n_starts // 48
    return sorted(set(list(range(0, n_starts, step)) + [n_starts - 1]))


def chunk_property_check(reduced: ReducedDistIcor) -> ChunkPropertyReport:
    """Verify the five structural chunk properties; raise PropertyViolation
    with a witness on the first failure.

    (i)   rank order refines projection order (equal projections rank backwards),
    (ii)  no run crosses a multiple of K + 3X,
    (iii) the advertised incremental runs exist with increasing ranks,
    (iv)  the longest increasing subsequence is exactly a_i + X,
    (v)   reversed, it is at most X.
    """
    block = reduced.block
    for ci, ch in enumerate(reduced.chunks):
        by_rank = sorted(range(len(ch.ranks)), key=lambda j: ch.ranks[j])
        for j1, j2 in zip(by_rank, by_rank[1:]):
            p1, p2 = ch.projection[j1], ch.projection[j2]
            if p1 > p2:
                raise PropertyViolation("i", (ci, j1, j2))
            if p1 == p2 and j1 < j2:
                raise PropertyViolation("i", (ci, j1, j2))

        for st in ch.start_numbers:
            hi = st + ch.run_length - 1
            first_multiple = ((st + block - 1) // block) * block
            if st <= first_multiple <= hi - 1:
                raise PropertyViolation("ii", (ci, st))

        for ri in _existence_samples(len(ch.start_numbers)):
            st = ch.start_numbers[ri]
            lo = ri * ch.run_length
            seg = ch.projection[lo : lo + ch.run_length]
            if list(seg) != list(range(st, st + ch.run_length)):
                raise PropertyViolation("iii", (ci, st))
            seg_ranks = ch.ranks[lo : lo + ch.run_length]
            if any(seg_ranks[i] >= seg_ranks[i + 1] for i in range(len(seg_ranks) - 1)):
                raise PropertyViolation("iii", (ci, st))

        best = len(lis_indices(ch.ranks))
        if best != ch.run_length:
            raise PropertyViolation("iv", (ci, best, ch.run_length))

        best_rev = len(lis_indices(tuple(reversed(ch.ranks))))
        if best_rev > reduced.x:
            raise PropertyViolation("v", (ci, best_rev, reduced.x))
    return ChunkPropertyReport(("i", "ii", "iii", "iv", "v"))


def reduce_disticor_to_cu(inst: DistIcorInstance) -> tuple[CircularDrawing, int]:
    """Distinct chunks to a circular drawing plus a move budget K = L - M.

    Entries are renumbered by rank to 1..L; the graph is one cycle per chunk,
    all sharing the hub v0, drawn in the clockwise order v0, v1, ..., vL.
    """
    if not inst.distinct:
        raise NotDistinct("the drawing construction needs globally distinct entries")
    values = sorted(x for c in inst.chunks for x in c)
    rank = {v: i + 1 for i, v in enumerate(values)}
    total = len(values)
    vertices = tuple(f"v{i}" for i in range(total + 1))
    edges = []
    for c in inst.chunks:
        path = ["v0"] + [f"v{rank[x]}" for x in c] + ["v0"]
        for a, b in zip(path, path[1:]):
            if a != b:
                edges.append((a, b))
    g = Graph(vertices, set(edges))
    return CircularDrawing(g, vertices), total - inst.m_target
