"""Deterministic generation of ribbon graphs.

Randomness comes from SplitMix64 (Steele, Lea and Flood's 64-bit mixer),
implemented here so that a ``(seed, params)`` pair reproduces the same
graph on every platform and Python version.

``random_graph`` algorithm (generator version 1), all draws in this order:

1. shuffle darts ``1..2e`` (Fisher-Yates); edge ``j`` joins positions
   ``2j`` and ``2j+1``, smaller dart first;
2. for darts ``1..2e`` in order, pick a vertex uniformly;
3. for each vertex in order, shuffle its darts (sorted ascending first)
   into a uniformly random cyclic order;
4. for each edge in order, draw the sign (negative with probability
   ``neg_prob``) and then the twist (twisted with probability
   ``twist_prob``); with ``orientable=True`` the twist is drawn and
   discarded, so every twist is 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .brpoly import XYZ, br_polynomial
from .errors import InputError
from .graph import MINUS, PLUS, Edge, RibbonGraph, boundary_count, boundary_orbits, spanning_subgraph, stats
from .iso import is_isomorphic
from .laurent import LaurentPoly

MASK64 = (1 << 64) - 1
GENERATOR_VERSION = 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next64() >> 11) * (1.0 / (1 << 53))

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow needs n > 0")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            r = self.next64()
            if r < limit:
                return r % n

    def randint(self, a: int, b: int) -> int:
        return a + self.randbelow(b - a + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def choice(self, items: Sequence):
        return items[self.randbelow(len(items))]


@dataclass(frozen=True)
class GenParams:
    vertices: int
    edges: int
    neg_prob: float = 0.5
    twist_prob: float = 0.5
    orientable: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.edges < 0 or self.vertices < 0:
            raise InputError("vertex and edge counts must be nonnegative")
        if self.edges and not self.vertices:
            raise InputError("edges need at least one vertex")
        for p in (self.neg_prob, self.twist_prob):
            if not 0.0 <= p <= 1.0:
                raise InputError(f"probability {p} outside [0, 1]")


def random_graph(params: GenParams) -> RibbonGraph:
    rng = SplitMix64(params.seed)
    darts = list(range(1, 2 * params.edges + 1))
    rng.shuffle(darts)
    pairs = [tuple(sorted(darts[2 * j:2 * j + 2])) for j in range(params.edges)]
    owner = [rng.randbelow(params.vertices) for _ in range(2 * params.edges)]
    rotations = [[d for d in range(1, 2 * params.edges + 1) if owner[d - 1] == v] for v in range(params.vertices)]
    for rot in rotations:
        rng.shuffle(rot)
    edges = []
    for j, pair in enumerate(pairs):
        sign = MINUS if rng.random() < params.neg_prob else PLUS
        twist = 1 if rng.random() < params.twist_prob else 0
        edges.append(Edge(j, pair, sign, 0 if params.orientable else twist))
    return RibbonGraph(rotations, edges)


def random_plane_graph(vertices: int, edges: int, seed: int = 0) -> RibbonGraph:
    """Connected, plane, all-positive ribbon graph.

    Grows a random plane tree, then adds each remaining edge between two
    corners of one face chosen uniformly (the same corner twice gives a
    loop bounding an empty face).
    """
    if vertices < 1 or edges < vertices - 1:
        raise InputError("need vertices >= 1 and edges >= vertices - 1")
    rng = SplitMix64(seed)
    rotations: list[list[int]] = [[] for _ in range(vertices)]
    pairs: list[tuple[int, int]] = []
    dart = 0
    for child in range(1, vertices):
        parent = rng.randbelow(child)
        a, b = dart + 1, dart + 2
        dart += 2
        rotations[parent].insert(rng.randbelow(len(rotations[parent]) + 1), a)
        rotations[child].append(b)
        pairs.append((a, b))
    while len(pairs) < edges:
        a, b = dart + 1, dart + 2
        dart += 2
        if not pairs:
            rotations[0] = [a, b]
        else:
            G = RibbonGraph(rotations, [Edge(j, p) for j, p in enumerate(pairs)])
            faces = [orbit for orbit in boundary_orbits(G) if orbit[0][1] > 0]
            face = rng.choice(faces)
            corners = [G.partner(d) for d, _ in face]
            c1, c2 = rng.choice(corners), rng.choice(corners)
            _insert_after(rotations, c1, a)
            _insert_after(rotations, a if c1 == c2 else c2, b)
        pairs.append((a, b))
    return RibbonGraph(rotations, [Edge(j, p) for j, p in enumerate(pairs)])


def _insert_after(rotations: list[list[int]], anchor: int, dart: int) -> None:
    for rot in rotations:
        if anchor in rot:
            rot.insert(rot.index(anchor) + 1, dart)
            return
    raise AssertionError(f"dart {anchor} not found")


# -- named families -----------------------------------------------------------


def _sign(s) -> int:
    if s in ("+", 1, "+1"):
        return PLUS
    if s in ("-", -1, "-1"):
        return MINUS
    raise InputError(f"bad sign {s!r}")


def cycle_graph(n: int, sign=PLUS) -> RibbonGraph:
    if n < 1:
        raise InputError("cycle needs n >= 1")
    if n == 1:
        return RibbonGraph([[1, 2]], [Edge(0, (1, 2), _sign(sign))])
    # edge i leaves vertex i at dart 2i+1 and enters vertex i+1 at dart 2i+2
    rotations = [[2 * i + 1, 2 * ((i - 1) % n) + 2] for i in range(n)]
    return RibbonGraph(rotations, [Edge(i, (2 * i + 1, 2 * i + 2), _sign(sign)) for i in range(n)])


def path_graph(n: int, sign=PLUS) -> RibbonGraph:
    """``n`` edges on ``n + 1`` vertices."""
    if n < 0:
        raise InputError("path needs n >= 0")
    rotations: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(n):
        rotations[i].append(2 * i + 1)
        rotations[i + 1].append(2 * i + 2)
    return RibbonGraph(rotations, [Edge(i, (2 * i + 1, 2 * i + 2), _sign(sign)) for i in range(n)])


def bouquet(word: Sequence, twists=None, signs=None) -> RibbonGraph:
    """One vertex whose rotation reads ``word``; each label occurs twice.

    ``twists`` and ``signs`` map labels (or list values in order of first
    appearance) to twist bits and signs.  Integer labels become edge ids;
    other labels are numbered by first appearance.
    """
    labels = list(dict.fromkeys(word))
    if any(list(word).count(l) != 2 for l in labels):
        raise InputError("every bouquet label must occur exactly twice")

    def lookup(table, label, i, default):
        if table is None:
            return default
        if isinstance(table, dict):
            return table.get(label, default)
        return table[i]

    ids = {l: (l if isinstance(l, int) else i) for i, l in enumerate(labels)}
    darts: dict = {}
    rotation = []
    for pos, l in enumerate(word, start=1):
        darts.setdefault(l, []).append(pos)
        rotation.append(pos)
    edges = [
        Edge(ids[l], tuple(darts[l]), _sign(lookup(signs, l, i, PLUS)), int(lookup(twists, l, i, 0)))
        for i, l in enumerate(labels)
    ]
    return RibbonGraph([rotation], edges)


def named(family: str, **params) -> RibbonGraph:
    """Fixture graphs: ``vertices(k)``, ``loop(twist, sign)``, ``path(n)``,
    ``cycle(n)``, ``theta``, ``two_cycle`` and ``bouquet(word, twists, signs)``."""
    if family == "vertices":
        return RibbonGraph([[] for _ in range(params.get("k", 1))], [])
    if family == "loop":
        return RibbonGraph([[1, 2]], [Edge(0, (1, 2), _sign(params.get("sign", PLUS)), int(params.get("twist", 0)))])
    if family == "path":
        return path_graph(params.get("n", 1), params.get("sign", PLUS))
    if family == "cycle":
        return cycle_graph(params.get("n", 3), params.get("sign", PLUS))
    if family == "two_cycle":
        return cycle_graph(2, params.get("sign", PLUS))
    if family == "theta":
        s = _sign(params.get("sign", PLUS))
        return RibbonGraph([[1, 3, 5], [2, 6, 4]], [Edge(0, (1, 2), s), Edge(1, (3, 4), s), Edge(2, (5, 6), s)])
    if family == "bouquet":
        return bouquet(params["word"], params.get("twists"), params.get("signs"))
    raise InputError(f"unknown family {family!r}")


# -- exhaustive enumeration ---------------------------------------------------

MAX_ENUM_EDGES = 3
MAX_ENUM_VERTICES = 4


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _cyclic_orders(block: list[int]) -> Iterator[tuple[int, ...]]:
    head, *tail = sorted(block)
    for perm in itertools.permutations(tail):
        yield (head,) + perm


def _untwist_forest(G: RibbonGraph) -> RibbonGraph:
    """Flip vertices so that a BFS spanning forest is untwisted."""
    seen = [False] * G.num_vertices
    for root in range(G.num_vertices):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            for d in G.vertices[u]:
                e = G.edge_of(d)
                w = G.vertex_of(e.other(d))
                if not seen[w]:
                    seen[w] = True
                    if e.twist:
                        G = G.flip_vertex(w)
                    queue.append(w)
    return G


def _bucket_key(G: RibbonGraph) -> tuple:
    st = stats(G)
    per_edge = sorted(
        (
            e.sign,
            boundary_count(spanning_subgraph(G, [e.id])),
            boundary_count(spanning_subgraph(G, set(G.edge_ids) - {e.id})),
        )
        for e in G.edges
    )
    return st, tuple(sorted(len(r) for r in G.vertices)), tuple(per_edge)


def enumerate_graphs(v_max: int, e: int) -> list[RibbonGraph]:
    """All signed ribbon graphs with ``e`` edges and ``1..v_max`` vertices, one per isomorphism class."""
    if not (0 <= e <= MAX_ENUM_EDGES and 1 <= v_max <= MAX_ENUM_VERTICES):
        raise InputError(f"enumeration limited to e <= {MAX_ENUM_EDGES}, 1 <= v_max <= {MAX_ENUM_VERTICES}")
    darts = list(range(1, 2 * e + 1))
    seen_exact: set = set()
    buckets: dict[tuple, list[RibbonGraph]] = {}
    result: list[RibbonGraph] = []
    for blocks in _set_partitions(darts):
        if len(blocks) > v_max:
            continue
        for rots in itertools.product(*(_cyclic_orders(b) for b in blocks)):
            for nv in range(max(1, len(blocks)), v_max + 1):
                rotations = list(rots) + [()] * (nv - len(blocks))
                for labels in itertools.product((PLUS, MINUS), (0, 1), repeat=e):
                    edges = [Edge(j, (2 * j + 1, 2 * j + 2), labels[2 * j], labels[2 * j + 1]) for j in range(e)]
                    G = _untwist_forest(RibbonGraph(rotations, edges)).canonical()
                    exact = (G.vertices, G.edges)
                    if exact in seen_exact:
                        continue
                    seen_exact.add(exact)
                    reps = buckets.setdefault(_bucket_key(G), [])
                    if any(is_isomorphic(G, H) for H in reps):
                        continue
                    reps.append(G)
                    result.append(G)
    return result


def realize_polynomial(target: LaurentPoly, v_max: int, e: int) -> list[RibbonGraph]:
    """Enumerated graphs whose signed Bollobas-Riordan polynomial equals ``target``."""
    if target.variables != XYZ:
        raise InputError(f"target must be a polynomial in {XYZ}")
    return [G for G in enumerate_graphs(v_max, e) if br_polynomial(G) == target]
