"""Signed ribbon graphs stored as twisted rotation systems.

A ribbon graph is a set of darts (ends of edges).  Each vertex carries the
cyclic order of its darts with respect to a chosen local orientation of the
vertex disk, and each edge pairs two darts and records a sign and a twist
bit.  An edge is untwisted when the ribbon is glued compatibly with the
local orientations of its end vertices.  Reversing the local orientation of
a vertex (a *flip*) reverses its rotation and toggles the twist of every
non-loop edge end at it; flips are the only re-orientation move.

Boundary components are counted with signed darts ``(d, s)``.  ``(d, +1)``
means the boundary walk has just arrived at the attaching arc of ``d``
travelling in the positive direction of its vertex.  The walk crosses an
edge ribbon (``alpha``), flipping direction when the edge is twisted, then
moves to the neighbouring dart along the vertex boundary (``sigma``).  Each
boundary circle is traced once in each direction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import InputError, StructuralError

PLUS = 1
MINUS = -1


@dataclass(frozen=True)
class Edge:
    id: int
    darts: tuple[int, int]
    sign: int = PLUS
    twist: int = 0

    def __post_init__(self):
        d1, d2 = self.darts
        if d1 == d2:
            raise StructuralError(f"edge {self.id} joins dart {d1} to itself")
        if self.sign not in (PLUS, MINUS):
            raise StructuralError(f"edge {self.id}: sign must be +1 or -1, got {self.sign!r}")
        if self.twist not in (0, 1):
            raise StructuralError(f"edge {self.id}: twist must be 0 or 1, got {self.twist!r}")

    def other(self, dart: int) -> int:
        d1, d2 = self.darts
        return d2 if dart == d1 else d1


class GraphStats(NamedTuple):
    vertices: int
    edges: int
    components: int
    boundary: int
    orientable: bool
    positive: int
    negative: int

    @property
    def rank(self) -> int:
        return self.vertices - self.components

    @property
    def nullity(self) -> int:
        return self.edges - self.rank

    @property
    def euler_genus(self) -> int:
        return self.components - self.boundary + self.nullity


@dataclass(frozen=True)
class RibbonGraph:
    """Signed ribbon graph.

    ``vertices`` holds one rotation (tuple of dart ids) per vertex; empty
    rotations are isolated vertices.  ``edges`` holds :class:`Edge` records.
    """

    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, vertices: Iterable[Iterable[int]], edges: Iterable[Edge]):
        object.__setattr__(self, "vertices", tuple(tuple(int(d) for d in rot) for rot in vertices))
        object.__setattr__(self, "edges", tuple(edges))
        self._validate()

    def _validate(self) -> None:
        vertex_of = {}
        for v, rot in enumerate(self.vertices):
            for pos, d in enumerate(rot):
                if d <= 0:
                    raise StructuralError(f"dart ids must be positive, got {d}")
                if d in vertex_of:
                    raise StructuralError(f"dart {d} appears twice in vertex rotations")
                vertex_of[d] = (v, pos)
        edge_of = {}
        ids = set()
        for e in self.edges:
            if e.id in ids:
                raise StructuralError(f"edge id {e.id} used twice")
            ids.add(e.id)
            for d in e.darts:
                if d in edge_of:
                    raise StructuralError(f"dart {d} appears in two edges")
                edge_of[d] = e
        if vertex_of.keys() != edge_of.keys():
            missing = sorted(vertex_of.keys() ^ edge_of.keys())
            raise StructuralError(f"darts {missing} are not both in a rotation and an edge")
        object.__setattr__(self, "_index", {"vertex": vertex_of, "edge": edge_of})

    # -- lookups -------------------------------------------------------

    @cached_property
    def darts(self) -> tuple[int, ...]:
        return tuple(sorted(self._index["vertex"]))

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    @cached_property
    def _edges_by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._edges_by_id[edge_id]
        except KeyError:
            raise InputError(f"unknown edge id {edge_id}") from None

    def edge_of(self, dart: int) -> Edge:
        return self._index["edge"][dart]

    def vertex_of(self, dart: int) -> int:
        return self._index["vertex"][dart][0]

    def partner(self, dart: int) -> int:
        return self._index["edge"][dart].other(dart)

    def next(self, dart: int) -> int:
        v, pos = self._index["vertex"][dart]
        rot = self.vertices[v]
        return rot[(pos + 1) % len(rot)]

    def prev(self, dart: int) -> int:
        v, pos = self._index["vertex"][dart]
        rot = self.vertices[v]
        return rot[pos - 1]

    def endpoints(self, edge: Edge) -> tuple[int, int]:
        return self.vertex_of(edge.darts[0]), self.vertex_of(edge.darts[1])

    def is_loop(self, edge: Edge) -> bool:
        u, w = self.endpoints(edge)
        return u == w

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def check_subset(self, subset: Iterable[int]) -> frozenset[int]:
        subset = frozenset(subset)
        unknown = subset - set(self.edge_ids)
        if unknown:
            raise InputError(f"unknown edge ids {sorted(unknown)}")
        return subset

    # -- transformations -----------------------------------------------

    def with_signs(self, signs: dict[int, int]) -> RibbonGraph:
        edges = [Edge(e.id, e.darts, signs.get(e.id, e.sign), e.twist) for e in self.edges]
        return RibbonGraph(self.vertices, edges)

    def flip_signs(self, subset: Iterable[int] | None = None) -> RibbonGraph:
        """Reverse the sign of every edge in ``subset`` (all edges by default)."""
        subset = set(self.edge_ids) if subset is None else self.check_subset(subset)
        return self.with_signs({i: -self.edge(i).sign for i in subset})

    def flip_vertex(self, v: int) -> RibbonGraph:
        """Reverse the local orientation of vertex ``v``; the result is isomorphic."""
        rot = self.vertices[v]
        vertices = list(self.vertices)
        vertices[v] = tuple(reversed(rot))
        edges = []
        for e in self.edges:
            ends = self.endpoints(e)
            toggles = (ends[0] == v) + (ends[1] == v)
            edges.append(Edge(e.id, e.darts, e.sign, e.twist ^ (toggles % 2)))
        return RibbonGraph(vertices, edges)

    def relabel(self, dart_map: dict[int, int], edge_map: dict[int, int] | None = None) -> RibbonGraph:
        edge_map = edge_map or {}
        vertices = [[dart_map[d] for d in rot] for rot in self.vertices]
        edges = [
            Edge(edge_map.get(e.id, e.id), (dart_map[e.darts[0]], dart_map[e.darts[1]]), e.sign, e.twist)
            for e in self.edges
        ]
        return RibbonGraph(vertices, edges)

    def canonical(self) -> RibbonGraph:
        """Same graph with deterministic presentation.

        Rotations start at their smallest dart, non-empty vertices are
        ordered by smallest dart with isolated vertices last, edges are
        sorted by id with the smaller dart first.
        """
        rots = []
        empty = 0
        for rot in self.vertices:
            if not rot:
                empty += 1
                continue
            i = rot.index(min(rot))
            rots.append(rot[i:] + rot[:i])
        rots.sort(key=lambda r: r[0])
        rots.extend(() for _ in range(empty))
        edges = sorted(
            (Edge(e.id, tuple(sorted(e.darts)), e.sign, e.twist) for e in self.edges),
            key=lambda e: e.id,
        )
        return RibbonGraph(rots, edges)

    def __repr__(self) -> str:
        return f"RibbonGraph(v={self.num_vertices}, e={self.num_edges})"


# -- invariants -----------------------------------------------------------


def _signed_steps(G: RibbonGraph, subset: frozenset[int] | None = None):
    """Return the boundary-walk permutation on signed darts of (V(G), subset).

    Darts of edges outside ``subset`` are passed through along the vertex
    boundary, which is the same walk as in the spanning sub-graph.
    """

    def step(d: int, s: int) -> tuple[int, int]:
        e = G.edge_of(d)
        if subset is None or e.id in subset:
            d = e.other(d)
            if e.twist:
                s = -s
        return (G.next(d), s) if s > 0 else (G.prev(d), s)

    return step


def boundary_orbits(G: RibbonGraph, subset: Iterable[int] | None = None) -> list[list[tuple[int, int]]]:
    """Orbits of the signed-dart boundary walk of the spanning sub-graph on ``subset``.

    With ``subset=None`` all edges are kept.  Isolated vertices contribute no
    orbit.  Every boundary circle appears as two orbits, one per direction.
    """
    if subset is not None:
        subset = G.check_subset(subset)
    step = _signed_steps(G, subset)
    seen = set()
    orbits = []
    for d in G.darts:
        for s in (PLUS, MINUS):
            if (d, s) in seen:
                continue
            orbit = []
            cur = (d, s)
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                cur = step(*cur)
            orbits.append(orbit)
    return orbits


def boundary_count(G: RibbonGraph) -> int:
    orbits = boundary_orbits(G)
    if len(orbits) % 2:
        raise StructuralError("odd number of signed boundary orbits")
    isolated = sum(1 for rot in G.vertices if not rot)
    return len(orbits) // 2 + isolated


def components(G: RibbonGraph) -> list[int]:
    """Component label (smallest vertex index in the component) of every vertex."""
    parent = list(range(G.num_vertices))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e in G.edges:
        a, b = (find(x) for x in G.endpoints(e))
        if a != b:
            parent[max(a, b)] = min(a, b)
    return [find(i) for i in range(G.num_vertices)]


def num_components(G: RibbonGraph) -> int:
    labels = components(G)
    return sum(1 for i, c in enumerate(labels) if i == c)


def orientation_flips(G: RibbonGraph) -> list[int] | None:
    """Vertex flips making every twist zero, or ``None`` if ``G`` is non-orientable."""
    adjacency: list[list[tuple[int, int]]] = [[] for _ in G.vertices]
    for e in G.edges:
        u, w = G.endpoints(e)
        if u == w:
            if e.twist:
                return None
            continue
        adjacency[u].append((w, e.twist))
        adjacency[w].append((u, e.twist))
    flip: list[int | None] = [None] * G.num_vertices
    for root in range(G.num_vertices):
        if flip[root] is not None:
            continue
        flip[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w, t in adjacency[u]:
                want = flip[u] ^ t
                if flip[w] is None:
                    flip[w] = want
                    stack.append(w)
                elif flip[w] != want:
                    return None
    return flip


def is_orientable(G: RibbonGraph) -> bool:
    return orientation_flips(G) is not None


def untwisted(G: RibbonGraph) -> RibbonGraph:
    """Isomorphic copy of an orientable graph with every twist zero."""
    flips = orientation_flips(G)
    if flips is None:
        raise InputError("graph is not orientable")
    for v, f in enumerate(flips):
        if f:
            G = G.flip_vertex(v)
    return G


def stats(G: RibbonGraph) -> GraphStats:
    positive = sum(1 for e in G.edges if e.sign == PLUS)
    return GraphStats(
        vertices=G.num_vertices,
        edges=G.num_edges,
        components=num_components(G),
        boundary=boundary_count(G),
        orientable=is_orientable(G),
        positive=positive,
        negative=G.num_edges - positive,
    )


def spanning_subgraph(G: RibbonGraph, subset: Iterable[int]) -> RibbonGraph:
    """Keep every vertex and only the edges in ``subset``."""
    subset = G.check_subset(subset)
    keep = {d for e in G.edges if e.id in subset for d in e.darts}
    vertices = [[d for d in rot if d in keep] for rot in G.vertices]
    return RibbonGraph(vertices, [e for e in G.edges if e.id in subset])


def iter_states(G: RibbonGraph) -> Iterator[frozenset[int]]:
    """All ``2**e`` edge subsets, bit ``i`` of the counter selecting ``G.edges[i]``."""
    ids = G.edge_ids
    for mask in range(1 << len(ids)):
        yield frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1)
