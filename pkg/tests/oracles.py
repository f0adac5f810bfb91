"""Independent reference computations used by the tests.

These avoid the vectorised state engine and the doubled-exponent
bookkeeping of the library: every state is built explicitly and measured
with the scalar routines, and exponents are handled as Fractions.
"""

from fractions import Fraction

from ribbonpoly import LaurentPoly, RibbonGraph, spanning_subgraph, stats
from ribbonpoly.gen import SplitMix64, GenParams, random_graph
from ribbonpoly.graph import iter_states, untwisted


def br_bruteforce(G: RibbonGraph) -> LaurentPoly:
    gst = stats(G)
    total = LaurentPoly.zero(("x", "y", "z"))
    for F in iter_states(G):
        fst = stats(spanning_subgraph(G, F))
        neg_in = sum(1 for e in G.edges if e.id in F and e.sign < 0)
        neg_out = gst.negative - neg_in
        s = Fraction(neg_in - neg_out, 2)
        total = total + LaurentPoly.monomial(
            ("x", "y", "z"),
            {
                "x": gst.rank - fst.rank + s,
                "y": fst.nullity - s,
                "z": fst.components - fst.boundary + fst.nullity,
            },
        )
    return total


def face_dual(G: RibbonGraph) -> RibbonGraph:
    """Classical dual of an orientable graph: rotations are the face cycles of next(partner(d))."""
    G = untwisted(G)
    seen, rotations = set(), []
    for d in G.darts:
        if d in seen:
            continue
        orbit, cur = [], d
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = G.next(G.partner(cur))
        rotations.append(orbit)
    rotations += [[] for rot in G.vertices if not rot]
    return RibbonGraph(rotations, G.edges)


def sample_graph(seed: int, max_vertices: int = 5, max_edges: int = 7, orientable: bool = False) -> RibbonGraph:
    rng = SplitMix64(seed ^ 0x5EED)
    v = 1 + rng.randbelow(max_vertices)
    e = rng.randbelow(max_edges + 1)
    return random_graph(GenParams(v, e, neg_prob=0.5, twist_prob=0.5, orientable=orientable, seed=seed))


def sample_subset(G: RibbonGraph, seed: int) -> frozenset:
    rng = SplitMix64(seed ^ 0xA5A5)
    return frozenset(i for i in G.edge_ids if rng.random() < 0.5)
