"""Graph factories, seeded random drawing generators, and exhaustive instance
enumeration for small sizes."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator, Optional

from .blocks import planar_circular_order
from .errors import GenerationFailed, InvalidN, NotOuterplanar
from .model import (
    ALMOST_PLANAR,
    CircularDrawing,
    Graph,
    Vertex,
    classify,
    is_crossing_free,
)

PROFILES = ("outerplanar-order-perturbed", "almost-planar", "case-2-2", "disconnected")


def vertex_names(n: int, prefix: str = "v") -> tuple[Vertex, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    if n < 3:
        raise InvalidN("cycles need at least 3 vertices")
    vs = vertex_names(n, prefix)
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, prefix: str = "v") -> Graph:
    vs = vertex_names(n, prefix)
    return Graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def gen_fig5(n: int) -> CircularDrawing:
    """The tight almost-planar family: the n-cycle drawn with even-index
    vertices clockwise ascending, then odd-index vertices descending.
    Its minimum untangling moves exactly n/2 - 1 vertices."""
    if n < 4 or n % 2 != 0:
        raise InvalidN("the tight family needs an even n >= 4")
    g = cycle_graph(n)
    vs = g.vertices
    order = tuple(vs[i] for i in range(1, n, 2)) + tuple(vs[i] for i in range(n - 2, -1, -2))
    return CircularDrawing(g, order)


def _rng(seed: int, profile: str, n: int) -> random.Random:
    return random.Random(f"{profile}:{n}:{seed}")


def _random_noncrossing_edges(rng: random.Random, n: int, hull_p: float, diag_p: float, connect: bool) -> list[tuple[int, int]]:
    """Positions 0..n-1 on a circle: a random subset of hull edges plus a
    random subset of one random triangulation's diagonals (never crossing)."""
    edges: list[tuple[int, int]] = []
    for i in range(n):
        if rng.random() < hull_p:
            edges.append((i, (i + 1) % n))

    def split(lo: int, hi: int) -> None:
        if hi - lo < 2:
            return
        mid = rng.randint(lo + 1, hi - 1)
        if mid - lo > 1 and rng.random() < diag_p:
            edges.append((lo, mid))
        if hi - mid > 1 and rng.random() < diag_p:
            edges.append((mid, hi))
        split(lo, mid)
        split(mid, hi)

    if n >= 3:
        split(0, n - 1)

    if connect:
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in edges:
            parent[find(a)] = find(b)
        for i in range(n - 1):
            if find(i) != find(i + 1):
                edges.append((i, i + 1))
                parent[find(i)] = find(i + 1)
    return sorted(set(edges))


def _perturbed(rng: random.Random, n: int, k: Optional[int], connect: bool) -> CircularDrawing:
    vs = vertex_names(n)
    layout = list(vs)
    rng.shuffle(layout)
    pos_edges = _random_noncrossing_edges(rng, n, hull_p=0.85, diag_p=0.45, connect=connect)
    g = Graph(vs, [(layout[i], layout[j]) for i, j in pos_edges])
    order = list(layout)
    moves = rng.randrange(0, max(1, n // 2)) if k is None else k
    for _ in range(moves):
        v = order.pop(rng.randrange(len(order)))
        order.insert(rng.randrange(len(order) + 1), v)
    return CircularDrawing(g, order)


def _chain_graph(rng: random.Random, n: int) -> tuple[Graph, Vertex, Vertex]:
    """A connected graph where u and v are joined only through cut vertices,
    with small decorations hanging off the chain (case-2.2 shape)."""
    if n < 4:
        raise InvalidN("chain instances need n >= 4")
    vs = list(vertex_names(n))
    u, v = vs[0], vs[1]
    ncuts = rng.randint(1, min(3, n - 3))
    cuts = vs[2 : 2 + ncuts]
    chain = [u] + cuts + [v]
    edges = list(zip(chain, chain[1:]))
    spare = vs[2 + ncuts :]
    hosts = chain[:]
    for w in spare:
        host = rng.choice(hosts)
        edges.append((host, w))
        if rng.random() < 0.35:
            hosts.append(w)  # allow small trees, not just pendants
    return Graph(vs, edges), u, v


def _almost_planar_from(g: Graph, u: Vertex, v: Vertex, rng: random.Random, tries: int) -> Optional[CircularDrawing]:
    base = g if (u, v) in g.edges or (v, u) in g.edges else Graph(g.vertices, set(g.edges) | {(u, v)})
    e = base.edge(u, v)
    rest = base.without_edge(e)
    for _ in range(tries):
        layout = planar_circular_order(rest, rng)
        d = CircularDrawing(base, layout.order)
        if classify(d).kind == ALMOST_PLANAR:
            return d
    return None


def gen_random(n: int, seed: int, profile: str, k: Optional[int] = None, retries: int = 64) -> CircularDrawing:
    """Seed-deterministic random drawings.

    outerplanar-order-perturbed: random planar order plus non-crossing chords,
    then k random vertex relocations (k=0 gives a planar drawing).
    almost-planar: connected graph and an edge carrying all crossings,
    verified via classification before returning.
    case-2-2: almost-planar with the crossing edge's endpoints joined only
    through cut vertices.
    disconnected: a few perturbed components interleaved by relocations.
    """
    if profile not in PROFILES:
        raise InvalidN(f"unknown profile {profile!r}")
    rng = _rng(seed, profile, n)
    if profile == "outerplanar-order-perturbed":
        return _perturbed(rng, n, k, connect=False)

    if profile == "disconnected":
        if n < 4:
            raise InvalidN("disconnected instances need n >= 4")
        parts = rng.randint(2, min(3, n // 2))
        sizes = []
        left = n
        for i in range(parts - 1):
            take = rng.randint(1, left - (parts - 1 - i))
            sizes.append(take)
            left -= take
        sizes.append(left)
        vs = vertex_names(n)
        offset = 0
        vertices: list[Vertex] = []
        edges = []
        order: list[Vertex] = []
        for sz in sizes:
            sub = _perturbed(rng, sz, k=0, connect=True)
            mapping = {w: vs[offset + i] for i, w in enumerate(sub.graph.vertices)}
            vertices.extend(mapping[w] for w in sub.graph.vertices)
            edges.extend((mapping[a], mapping[b]) for a, b in sub.graph.edges)
            order.extend(mapping[w] for w in sub.order)
            offset += sz
        moves = rng.randrange(0, max(1, n // 2)) if k is None else k
        for _ in range(moves):
            w = order.pop(rng.randrange(len(order)))
            order.insert(rng.randrange(len(order) + 1), w)
        return CircularDrawing(Graph(vs, edges), order)

    for _ in range(retries):
        if profile == "almost-planar":
            base = _perturbed(rng, n, k=0, connect=True)
            g = base.graph
            edges = g.sorted_edges()
            if not edges:
                continue
            e = edges[rng.randrange(len(edges))]
            d = _almost_planar_from(g, e[0], e[1], rng, tries=8)
        else:  # case-2-2
            g, u, v = _chain_graph(rng, n)
            d = _almost_planar_from(g, u, v, rng, tries=8)
        if d is not None:
            return d
    raise GenerationFailed(f"no {profile} instance with n={n} after {retries} retries")


def _noncrossing_subsets(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    chords = list(combinations(range(n), 2))

    def crosses(e1: tuple[int, int], e2: tuple[int, int]) -> bool:
        (a, b), (c, d) = sorted(e1), sorted(e2)
        if len({a, b, c, d}) < 4:
            return False
        return (a < c < b) != (a < d < b)

    chosen: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[frozenset[tuple[int, int]]]:
        if i == len(chords):
            yield frozenset(chosen)
            return
        yield from rec(i + 1)
        e = chords[i]
        if all(not crosses(e, f) for f in chosen):
            chosen.append(e)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


def _rotation_canonical(n: int, edges: frozenset[tuple[int, int]]) -> tuple:
    best = None
    for r in range(n):
        rot = tuple(sorted(tuple(sorted(((a + r) % n, (b + r) % n))) for a, b in edges))
        if best is None or rot < best:
            best = rot
    return best


def _connected(n: int, edges: frozenset[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(i) for i in range(n)}) == 1


def enumerate_almost_planar_instances(n: int) -> Iterator[CircularDrawing]:
    """Every almost-planar drawing of every connected outerplanar graph on n
    vertices, one per rotation class of the drawn edge pattern (reflections
    are distinct drawings and are kept).

    A drawing is almost-planar iff its edge set is one non-crossing chord set
    plus one extra chord crossing at least one of them, so enumeration walks
    exactly those shapes over the fixed clockwise order v1..vn.
    """
    vs = vertex_names(n)
    all_chords = list(combinations(range(n), 2))

    def crosses(e1, e2) -> bool:
        (a, b), (c, d) = sorted(e1), sorted(e2)
        if len({a, b, c, d}) < 4:
            return False
        return (a < c < b) != (a < d < b)

    seen: set[tuple] = set()
    for base in _noncrossing_subsets(n):
        for e in all_chords:
            if e in base or not any(crosses(e, f) for f in base):
                continue
            edges = base | {e}
            if not _connected(n, edges):
                continue
            key = _rotation_canonical(n, edges)
            if key in seen:
                continue
            seen.add(key)
            g = Graph(vs, [(vs[a], vs[b]) for a, b in edges])
            try:
                planar_circular_order(g)
            except NotOuterplanar:
                continue
            d = CircularDrawing(g, vs)
            assert not is_crossing_free(d.order, g.edges)
            yield d
