"""Monotone-subsequence kernels on linear and cyclic rank sequences.

Everything downstream that counts vertex moves bottoms out here: the number
of vertices an untangling may keep fixed equals the length of a suitable
monotone or common cyclic subsequence.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import permutations
from typing import Hashable, Sequence

from .errors import ConstructionFailed, InvalidInstance, Unsupported

INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass(frozen=True)
class RankedSequence:
    """A linear sequence of distinct comparable ranks."""

    items: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.items)) != len(self.items):
            raise InvalidInstance("ranked sequence items must be distinct")

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True, eq=False)
class CyclicSequence:
    """A cyclic sequence of distinct ranks; equal up to rotation."""

    items: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.items)) != len(self.items):
            raise InvalidInstance("cyclic sequence items must be distinct")

    def __len__(self) -> int:
        return len(self.items)

    def canonical(self) -> tuple[int, ...]:
        if not self.items:
            return ()
        k = self.items.index(min(self.items))
        return self.items[k:] + self.items[:k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicSequence):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())


def _as_items(s) -> tuple:
    if isinstance(s, (RankedSequence, CyclicSequence)):
        return tuple(s.items)
    return tuple(s)


def lis_indices(items: Sequence) -> list[int]:
    """Indices of one longest strictly increasing subsequence (patience piles)."""
    tails: list = []          # smallest tail value per pile length
    tail_idx: list[int] = []  # index of that tail in `items`
    parent = [-1] * len(items)
    for i, x in enumerate(items):
        j = bisect_left(tails, x)
        if j == len(tails):
            tails.append(x)
            tail_idx.append(i)
        else:
            tails[j] = x
            tail_idx[j] = i
        parent[i] = tail_idx[j - 1] if j > 0 else -1
    if not tails:
        return []
    out = []
    i = tail_idx[-1]
    while i != -1:
        out.append(i)
        i = parent[i]
    out.reverse()
    return out


def lis(s) -> list:
    """One longest strictly increasing subsequence of a linear sequence."""
    items = _as_items(s)
    return [items[i] for i in lis_indices(items)]


def lds(s) -> list:
    """One longest strictly decreasing subsequence of a linear sequence."""
    items = _as_items(s)
    neg = [-x for x in items]
    return [items[i] for i in lis_indices(neg)]


def lics(s, direction: str = INCREASING) -> list:
    """Longest strictly monotone cyclic subsequence.

    Computed as the best linear result over all rotations; on ties the
    smallest rotation index wins, which keeps output deterministic.
    """
    items = _as_items(s)
    if direction not in (INCREASING, DECREASING):
        raise InvalidInstance(f"unknown direction {direction!r}")
    if not items:
        return []
    kernel = lis if direction == INCREASING else lds
    best: list = []
    for r in range(len(items)):
        rotated = items[r:] + items[:r]
        w = kernel(rotated)
        if len(w) > len(best):
            best = w
    return best


def lccs(a, b) -> list:
    """Longest common cyclic subsequence of two cyclic orders of one item set.

    Returns a largest set of items, listed in the shared cyclic order.
    Positions of `b` are used as ranks, so the answer is the longest
    increasing cyclic subsequence of `a` mapped through those ranks.
    """
    aa, bb = _as_items(a), _as_items(b)
    if set(aa) != set(bb) or len(set(aa)) != len(aa):
        raise InvalidInstance("lccs needs two cyclic orders of the same distinct items")
    pos = {v: i for i, v in enumerate(bb)}
    mapped = tuple(pos[v] for v in aa)
    return [bb[i] for i in lics(mapped, INCREASING)]


def moves_between(a, b) -> int:
    """Minimum vertex moves transforming cyclic order `a` into cyclic order `b`."""
    return len(_as_items(a)) - len(lccs(a, b))


def _is_tight(items: tuple[int, ...], s: int, r: int) -> bool:
    return len(lics(items, INCREASING)) <= s + 1 and len(lics(items, DECREASING)) <= r + 1


ES_TIGHT_MAX_LEN = 12


def es_tight_cyclic(s: int, r: int) -> CyclicSequence:
    """A cyclic sequence of s*r + 1 distinct ranks with no increasing cyclic
    subsequence of s+2 terms and no decreasing one of r+2 terms.

    Starts from the sheared grid pattern k -> r*k mod (s*r+1), which lays the
    classical grid construction around the circle without a monotone wrap,
    and falls back to exhaustive repair for tiny sizes.  Output is verified
    before return.
    """
    if s < 1 or r < 1:
        raise InvalidInstance("es_tight_cyclic needs s, r >= 1")
    n = s * r + 1
    if n > ES_TIGHT_MAX_LEN:
        raise Unsupported(f"es_tight_cyclic supports lengths up to {ES_TIGHT_MAX_LEN}, got {n}")
    for cand in (
        tuple((r * k) % n for k in range(n)),
        tuple((s * k) % n for k in range(n)),
        tuple((-r * k) % n for k in range(n)),
        tuple((-s * k) % n for k in range(n)),
    ):
        if _is_tight(cand, s, r):
            return CyclicSequence(cand)
    if n <= 8:
        for tail in permutations(range(1, n)):
            cand = (0,) + tail
            if _is_tight(cand, s, r):
                return CyclicSequence(cand)
    raise ConstructionFailed(f"no tight cyclic sequence found for s={s}, r={r}")
