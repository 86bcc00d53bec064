"""Block structure, Hamiltonian cycles of blocks, and planar circular orders.

The outerplanarity recognizer works by peeling: a 2-connected outerplanar
block always has a vertex of degree 2, and removing it (recording its two
neighbors as cycle-adjacent) leaves a smaller outerplanar block.  Unwinding
the peel reconstructs the unique Hamiltonian cycle; any stall or inconsistent
reinsertion certifies a forbidden substructure.  The reconstructed orders are
re-checked with the crossing test, so the recognizer is self-verifying.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

import networkx as nx

from .errors import NotOuterplanar
from .model import CircularDrawing, Edge, Graph, Vertex, is_crossing_free, rotate_to


@dataclass(frozen=True)
class Block:
    """A 2-connected component: vertex set, edge set, and (for 3 or more
    vertices) its unique Hamiltonian cyclic order."""

    vertices: frozenset[Vertex]
    edges: frozenset[Edge]
    hamiltonian: Optional[tuple[Vertex, ...]]


@dataclass
class BlockDecomposition:
    graph: Graph
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[Vertex]
    # (block index, block vertex) -> connected component of G - E(B) containing it
    attachments: dict = field(repr=False)

    def attachment(self, block_index: int, v: Vertex) -> frozenset[Vertex]:
        return self.attachments[(block_index, v)]

    def blocks_at(self, v: Vertex) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    def block_with_edge(self, e: Edge) -> int:
        for i, b in enumerate(self.blocks):
            if e in b.edges:
                return i
        raise KeyError(e)


def _to_nx(g: Graph) -> nx.Graph:
    ng = nx.Graph()
    ng.add_nodes_from(g.vertices)
    ng.add_edges_from(g.edges)
    return ng


def hamiltonian_cycle_of_block(g: Graph, block_vertices: Iterable[Vertex]) -> tuple[Vertex, ...]:
    """Unique Hamiltonian cyclic order of a 2-connected outerplanar block.

    Raises NotOuterplanar when the peel stalls, a reinsertion target is not
    cycle-adjacent, or the reconstructed order leaves crossing chords.
    """
    verts = sorted(block_vertices, key=g.index)
    vset = set(verts)
    block_edges = [e for e in g.edges if e[0] in vset and e[1] in vset]
    adj: dict[Vertex, set[Vertex]] = {v: set() for v in verts}
    for a, b in block_edges:
        adj[a].add(b)
        adj[b].add(a)
    if len(verts) < 3:
        raise NotOuterplanar("blocks with fewer than 3 vertices have no Hamiltonian cycle")

    peel: list[tuple[Vertex, Vertex, Vertex]] = []
    alive = list(verts)
    while len(alive) > 2:
        w = next((x for x in alive if len(adj[x]) == 2), None)
        if w is None:
            raise NotOuterplanar("degree-2 peel stalled (K4-like substructure)")
        a, b = sorted(adj[w], key=g.index)
        peel.append((w, a, b))
        alive.remove(w)
        adj[a].discard(w)
        adj[b].discard(w)
        adj[a].add(b)
        adj[b].add(a)
        del adj[w]

    cycle: list[Vertex] = list(alive)
    for w, a, b in reversed(peel):
        ia, ib, n = cycle.index(a), cycle.index(b), len(cycle)
        if (ia + 1) % n == ib:
            cycle.insert(ib, w)
        elif (ib + 1) % n == ia:
            cycle.insert(ia, w)
        else:
            raise NotOuterplanar("peeled vertex has no cycle-adjacent reinsertion slot (K2,3-like)")

    if not is_crossing_free(cycle, block_edges):
        raise NotOuterplanar("block chords cross in the reconstructed Hamiltonian order")

    ham = rotate_to(tuple(cycle), min(cycle, key=g.index))
    if len(ham) > 2 and g.index(ham[-1]) < g.index(ham[1]):
        ham = (ham[0],) + tuple(reversed(ham[1:]))
    return ham


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks, cut vertices, per-block Hamiltonian cycles, and attachments."""
    ng = _to_nx(g)
    raw_blocks = [frozenset(bs) for bs in nx.biconnected_components(ng)]
    raw_blocks.sort(key=lambda bs: sorted(g.index(v) for v in bs))
    blocks = []
    for bs in raw_blocks:
        edges = frozenset(e for e in g.edges if e[0] in bs and e[1] in bs)
        ham = hamiltonian_cycle_of_block(g, bs) if len(bs) >= 3 else None
        blocks.append(Block(bs, edges, ham))
    cut = frozenset(nx.articulation_points(ng))

    attachments = {}
    for i, b in enumerate(blocks):
        rest = ng.copy()
        rest.remove_edges_from(b.edges)
        comp_of = {}
        for comp in nx.connected_components(rest):
            cs = frozenset(comp)
            for v in cs:
                comp_of[v] = cs
        for v in b.vertices:
            attachments[(i, v)] = comp_of[v]
    return BlockDecomposition(g, tuple(blocks), cut, attachments)


def _layout_component(g: Graph, decomp: BlockDecomposition, root: Vertex, rng: Optional[random.Random]) -> list[Vertex]:
    at: dict[Vertex, list[int]] = {v: [] for v in g.vertices}
    for i, b in enumerate(decomp.blocks):
        for v in b.vertices:
            at[v].append(i)

    def expand_block(bi: int, entry: Vertex) -> list[Vertex]:
        b = decomp.blocks[bi]
        if b.hamiltonian is None:
            (other,) = b.vertices - {entry}
            return visit(other, bi)
        walk = list(rotate_to(b.hamiltonian, entry))
        forward = g.index(walk[1]) <= g.index(walk[-1]) if rng is None else rng.random() < 0.5
        if not forward:
            walk = [walk[0]] + list(reversed(walk[1:]))
        out: list[Vertex] = []
        for w in walk[1:]:
            out.extend(visit(w, bi))
        return out

    def visit(v: Vertex, from_block: Optional[int]) -> list[Vertex]:
        children = [bi for bi in at[v] if bi != from_block]
        children.sort(key=lambda bi: sorted(g.index(x) for x in decomp.blocks[bi].vertices))
        if rng is not None:
            rng.shuffle(children)
        pre: list[Vertex] = []
        post: list[Vertex] = []
        for bi in children:
            span = expand_block(bi, v)
            if rng is not None and rng.random() < 0.5:
                pre.extend(span)
            else:
                post.extend(span)
        return pre + [v] + post

    return visit(root, None)


def planar_circular_order(g: Graph, rng: Optional[random.Random] = None) -> CircularDrawing:
    """A crossing-free circular drawing of an outerplanar graph.

    Deterministic without `rng`; with `rng`, a uniform-ish random member of
    the family of orders reachable by the block layout (random root, block
    directions, child order, and child side).  Disconnected graphs get their
    components laid out consecutively.  Raises NotOuterplanar otherwise.
    """
    ng = _to_nx(g)
    comps = [sorted(c, key=g.index) for c in nx.connected_components(ng)]
    comps.sort(key=lambda c: g.index(c[0]))
    if rng is not None:
        rng.shuffle(comps)
    order: list[Vertex] = []
    for comp in comps:
        root = comp[0] if rng is None else rng.choice(comp)
        sub = g.subgraph(comp)
        order.extend(_layout_component(sub, block_decomposition(sub), root, rng))
    if not is_crossing_free(order, g.edges):
        raise NotOuterplanar("no crossing-free circular order exists")
    return CircularDrawing(g, order)
