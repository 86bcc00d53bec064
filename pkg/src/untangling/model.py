"""Core combinatorial model: graphs, circular drawings, crossings, moves.

A circular drawing is a graph plus a clockwise cyclic order of its vertices;
an edge is the chord between its endpoints, and two chords cross exactly when
their endpoints alternate around the circle.  Everything here is immutable
and pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidInstance, UnknownEdge, UnknownVertex

Vertex = str
Edge = tuple[Vertex, Vertex]

PLANAR = "planar"
ALMOST_PLANAR = "almost-planar"
NOT_ALMOST_PLANAR = "not-almost-planar"


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph over string-labeled vertices.

    `vertices` is an ordered set; its order defines the tie-breaking rank
    used by all deterministic choices downstream.
    """

    vertices: tuple[Vertex, ...]
    edges: frozenset[Edge]
    _index: dict = field(init=False, repr=False)
    _adj: dict = field(init=False, repr=False)

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Sequence[Vertex]] = ()):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise InvalidInstance("duplicate vertices")
        index = {v: i for i, v in enumerate(vs)}
        norm = set()
        for a, b in edges:
            if a == b:
                raise InvalidInstance(f"self-loop at {a!r}")
            if a not in index or b not in index:
                raise UnknownVertex(f"edge ({a!r}, {b!r}) references undeclared vertex")
            norm.add((a, b) if index[a] < index[b] else (b, a))
        adj: dict[Vertex, set[Vertex]] = {v: set() for v in vs}
        for a, b in norm:
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(repr(v)) from None

    def edge(self, a: Vertex, b: Vertex) -> Edge:
        """Normalized endpoint pair; raises if the edge is absent."""
        e = (a, b) if self.index(a) < self.index(b) else (b, a)
        if e not in self.edges:
            raise UnknownEdge(f"({a!r}, {b!r})")
        return e

    def neighbors(self, v: Vertex) -> set[Vertex]:
        self.index(v)
        return set(self._adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (self.index(e[0]), self.index(e[1])))

    def without_edge(self, e: Edge) -> "Graph":
        e = self.edge(*e)
        return Graph(self.vertices, self.edges - {e})

    def subgraph(self, keep: Iterable[Vertex]) -> "Graph":
        ks = set(keep)
        vs = tuple(v for v in self.vertices if v in ks)
        es = [e for e in self.edges if e[0] in ks and e[1] in ks]
        return Graph(vs, es)


@dataclass(frozen=True, eq=False)
class CircularDrawing:
    """A graph with a clockwise cyclic order of all its vertices.

    Two drawings are equal iff their cyclic orders agree up to rotation;
    reflection is a different drawing (clockwise orientation is significant).
    """

    graph: Graph
    order: tuple[Vertex, ...]
    _pos: dict = field(init=False, repr=False)

    def __init__(self, graph: Graph, order: Iterable[Vertex]):
        ot = tuple(order)
        if sorted(ot) != sorted(graph.vertices):
            raise InvalidInstance("order must be a permutation of the graph vertices")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "order", ot)
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(ot)})

    def position(self, v: Vertex) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise UnknownVertex(repr(v)) from None

    def canonical_order(self) -> tuple[Vertex, ...]:
        return rotate_to(self.order, min(self.order, key=self.graph.index)) if self.order else ()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CircularDrawing):
            return NotImplemented
        return self.graph == other.graph and self.canonical_order() == other.canonical_order()

    def __hash__(self) -> int:
        return hash((self.graph, self.canonical_order()))


@dataclass(frozen=True)
class CrossingSet:
    """Unordered pairs of edges whose endpoints alternate in the order."""

    pairs: frozenset[frozenset[Edge]]

    def __len__(self) -> int:
        return len(self.pairs)

    def edges(self) -> set[Edge]:
        return {e for pair in self.pairs for e in pair}

    def involving(self, e: Edge) -> set[frozenset[Edge]]:
        return {pair for pair in self.pairs if e in pair}


@dataclass(frozen=True)
class VertexMove:
    """Remove `vertex` and reinsert it immediately clockwise of `anchor`."""

    vertex: Vertex
    anchor: Vertex

    def __post_init__(self):
        if self.vertex == self.anchor:
            raise InvalidInstance("a vertex cannot anchor its own move")


@dataclass(frozen=True)
class Untangling:
    """An ordered list of vertex moves; cost is the number of distinct moved vertices."""

    moves: tuple[VertexMove, ...]

    def moved_set(self) -> set[Vertex]:
        return {m.vertex for m in self.moves}

    def __len__(self) -> int:
        return len(self.moves)


@dataclass(frozen=True)
class EdgeCandidate:
    """An edge involved in all crossings, with the two vertex sets beside it.

    `left` is the clockwise arc strictly from v to u for the edge (u, v);
    `right` the clockwise arc strictly from u to v.  Both keep arc order.
    """

    edge: Edge
    left: tuple[Vertex, ...]
    right: tuple[Vertex, ...]


@dataclass(frozen=True)
class AlmostPlanarClassification:
    kind: str
    candidates: tuple[EdgeCandidate, ...]


@dataclass(frozen=True)
class VerificationReport:
    moved_count: int
    fixed_set_ok: bool
    planar_ok: bool
    result: CircularDrawing


def rotate_to(seq: tuple, v) -> tuple:
    k = seq.index(v)
    return seq[k:] + seq[:k]


def cyclic_equal(a: Sequence, b: Sequence) -> bool:
    """True iff two sequences of distinct items are equal up to rotation."""
    ta, tb = tuple(a), tuple(b)
    if len(ta) != len(tb):
        return False
    if not ta:
        return True
    if ta[0] not in tb:
        return False
    return rotate_to(tb, ta[0]) == ta


def restriction(order: Sequence[Vertex], subset: Iterable[Vertex]) -> tuple[Vertex, ...]:
    ss = set(subset)
    return tuple(v for v in order if v in ss)


def _alternates(pos: dict, e1: Edge, e2: Edge) -> bool:
    a, b = sorted((pos[e1[0]], pos[e1[1]]))
    c, d = pos[e2[0]], pos[e2[1]]
    return (a < c < b) != (a < d < b)


def crossings(d: CircularDrawing) -> CrossingSet:
    """All crossing edge pairs of the drawing (endpoints alternate)."""
    pos = d._pos
    es = d.graph.sorted_edges()
    pairs = set()
    for i, e1 in enumerate(es):
        for e2 in es[i + 1 :]:
            if e1[0] in e2 or e1[1] in e2:
                continue
            if _alternates(pos, e1, e2):
                pairs.add(frozenset((e1, e2)))
    return CrossingSet(frozenset(pairs))


def is_crossing_free(order: Sequence[Vertex], edges: Iterable[Edge]) -> bool:
    """Linear-time planarity test for chords on a circle (stack nesting)."""
    pos = {v: i for i, v in enumerate(order)}
    n = len(pos)
    opens: list[list[int]] = [[] for _ in range(n)]
    ncloses = [0] * n
    for a, b in edges:
        i, j = sorted((pos[a], pos[b]))
        opens[i].append(j)
        ncloses[j] += 1
    stack: list[int] = []
    for p in range(n):
        for _ in range(ncloses[p]):
            if not stack or stack.pop() != p:
                return False
        for j in sorted(opens[p], reverse=True):
            stack.append(j)
    return not stack


def edges_crossing(d: CircularDrawing, e: Edge) -> list[Edge]:
    """Edges of the drawing whose endpoints alternate with the endpoints of `e`."""
    e = d.graph.edge(*e)
    pos = d._pos
    out = []
    for f in d.graph.sorted_edges():
        if f == e or e[0] in f or e[1] in f:
            continue
        if _alternates(pos, e, f):
            out.append(f)
    return out


def is_planar_drawing(d: CircularDrawing) -> bool:
    return is_crossing_free(d.order, d.graph.edges)


def all_crossings_on(d: CircularDrawing, e: Edge) -> bool:
    """True iff removing `e` leaves a crossing-free drawing."""
    e = d.graph.edge(*e)
    return is_crossing_free(d.order, d.graph.edges - {e})


def sides_of_edge(d: CircularDrawing, e: Edge) -> tuple[tuple[Vertex, ...], tuple[Vertex, ...]]:
    """(left, right) for e=(u, v): left is the clockwise arc strictly from v
    to u, right the clockwise arc strictly from u to v; arc order is kept."""
    u, v = d.graph.edge(*e)
    seq = rotate_to(d.order, u)
    iv = seq.index(v)
    right = seq[1:iv]
    left = seq[iv + 1 :]
    return left, right


def classify(d: CircularDrawing) -> AlmostPlanarClassification:
    """Planar / almost-planar / neither, with every qualifying edge listed.

    An edge qualifies when it is involved in all crossings, i.e. the drawing
    minus that edge is crossing-free while the drawing itself is not.
    """
    if is_planar_drawing(d):
        return AlmostPlanarClassification(PLANAR, ())
    cands = []
    for e in d.graph.sorted_edges():
        if all_crossings_on(d, e) and edges_crossing(d, e):
            left, right = sides_of_edge(d, e)
            cands.append(EdgeCandidate(e, left, right))
    if not cands:
        return AlmostPlanarClassification(NOT_ALMOST_PLANAR, ())
    return AlmostPlanarClassification(ALMOST_PLANAR, tuple(cands))


def apply_untangling(d: CircularDrawing, u: Untangling) -> CircularDrawing:
    """Apply moves left to right; each deletes the vertex and reinserts it
    immediately clockwise of its anchor's current position."""
    order = list(d.order)
    for mv in u.moves:
        if mv.vertex not in d._pos or mv.anchor not in d._pos:
            raise UnknownVertex(f"move {mv} references unknown vertex")
        order.remove(mv.vertex)
        order.insert(order.index(mv.anchor) + 1, mv.vertex)
    return CircularDrawing(d.graph, order)


def verify_untangling(d: CircularDrawing, u: Untangling) -> VerificationReport:
    """Moved-vertex count, fixed-set order preservation, and planarity of the result."""
    result = apply_untangling(d, u)
    moved = u.moved_set()
    fixed = [v for v in d.order if v not in moved]
    fixed_ok = cyclic_equal(restriction(d.order, fixed), restriction(result.order, fixed))
    return VerificationReport(
        moved_count=len(moved),
        fixed_set_ok=fixed_ok,
        planar_ok=is_planar_drawing(result),
        result=result,
    )


def moves_to_reach(
    order: Sequence[Vertex],
    target: Sequence[Vertex],
    moved: Iterable[Vertex],
) -> list[VertexMove]:
    """Moves that make the restriction of `order` to the target's vertex set
    equal `target` (cyclically), moving exactly the vertices in `moved`.

    The vertices of `target` not in `moved` must already appear in `order`
    in the target's relative cyclic order.  Each moved vertex is anchored to
    its target predecessor, so every vertex is moved at most once and fixed
    vertices (inside or outside the target set) never change relative order.
    """
    moved = set(moved)
    tt = tuple(target)
    fixed = [v for v in tt if v not in moved]
    if not fixed:
        raise InvalidInstance("moves_to_reach needs at least one fixed vertex as anchor")
    if not cyclic_equal(restriction(order, fixed), restriction(tt, fixed)):
        raise InvalidInstance("fixed vertices are not in target order already")
    walk = rotate_to(tt, fixed[0])
    return [VertexMove(walk[i], walk[i - 1]) for i in range(1, len(walk)) if walk[i] in moved]


def empty_untangling() -> Untangling:
    return Untangling(())
