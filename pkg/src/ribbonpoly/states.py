"""Vectorised enumeration of the ``2**e`` states of a ribbon graph.

For every edge subset ``F`` the engine produces ``k(F)``, ``boundary(F)``,
``e(F)`` and ``e_-(F)``, which is everything the state sums need.  States
are processed in blocks of bitmasks (bit ``i`` selects ``G.edges[i]``).
Boundary components are counted as orbits of the signed-dart walk using
pointer jumping; components by label propagation over the vertices.
Results are accumulated into a histogram keyed by those four numbers, and
histograms from disjoint mask ranges simply add, so the work can be split
across processes without changing the result.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .graph import RibbonGraph

BLOCK = 1 << 13

StateKey = tuple[int, int, int, int]  # (k, boundary, edges, negative edges)


class _Tables:
    def __init__(self, G: RibbonGraph):
        darts = G.darts
        index = {d: i for i, d in enumerate(darts)}
        n = 2 * len(darts)
        # signed dart (d, +1) -> 2*i, (d, -1) -> 2*i + 1
        sigma = np.empty(n, dtype=np.int64)
        for d in darts:
            i = index[d]
            sigma[2 * i] = 2 * index[G.next(d)]
            sigma[2 * i + 1] = 2 * index[G.prev(d)] + 1
        self.sigma = sigma
        self.size = n
        m = G.num_edges
        # crossing edge j maps these signed darts to those
        self.cross_src = np.empty((m, 4), dtype=np.int64)
        self.cross_dst = np.empty((m, 4), dtype=np.int64)
        for j, e in enumerate(G.edges):
            a, b = index[e.darts[0]], index[e.darts[1]]
            t = e.twist
            self.cross_src[j] = (2 * a, 2 * a + 1, 2 * b, 2 * b + 1)
            self.cross_dst[j] = (2 * b + t, 2 * b + 1 - t, 2 * a + t, 2 * a + 1 - t)
        self.ends = np.array([G.endpoints(e) for e in G.edges], dtype=np.int64).reshape(m, 2)
        self.negative = np.array([e.sign < 0 for e in G.edges], dtype=bool)
        self.num_vertices = G.num_vertices
        self.isolated = sum(1 for rot in G.vertices if not rot)
        self.num_edges = m
        self.rounds = max(1, int(np.ceil(np.log2(max(n, 2)))))


def _block(t: _Tables, lo: int, hi: int) -> Counter:
    masks = np.arange(lo, hi, dtype=np.int64)
    B = len(masks)
    bits = ((masks[:, None] >> np.arange(t.num_edges, dtype=np.int64)) & 1).astype(bool)

    # boundary walk: alpha_F then sigma
    alpha = np.broadcast_to(np.arange(t.size, dtype=np.int64), (B, t.size)).copy()
    for j in range(t.num_edges):
        rows = np.nonzero(bits[:, j])[0]
        if len(rows):
            alpha[np.ix_(rows, t.cross_src[j])] = t.cross_dst[j]
    perm = t.sigma[alpha]
    label = np.broadcast_to(np.arange(t.size, dtype=np.int64), (B, t.size)).copy()
    for _ in range(t.rounds):
        label = np.minimum(label, np.take_along_axis(label, perm, axis=1))
        perm = np.take_along_axis(perm, perm, axis=1)
    orbits = (label == np.arange(t.size)).sum(axis=1)
    boundary = orbits // 2 + t.isolated

    # components
    comp = np.broadcast_to(np.arange(t.num_vertices, dtype=np.int64), (B, t.num_vertices)).copy()
    for _ in range(t.num_vertices):
        changed = False
        for j in range(t.num_edges):
            u, w = t.ends[j]
            if u == w:
                continue
            sel = bits[:, j]
            m = np.minimum(comp[:, u], comp[:, w])
            upd = sel & ((comp[:, u] != m) | (comp[:, w] != m))
            if upd.any():
                changed = True
                comp[upd, u] = m[upd]
                comp[upd, w] = m[upd]
        if not changed:
            break
    k = (comp == np.arange(t.num_vertices)).sum(axis=1)

    nedges = bits.sum(axis=1)
    nneg = bits[:, t.negative].sum(axis=1) if t.negative.any() else np.zeros(B, dtype=np.int64)
    keys = np.stack([k, boundary, nedges, nneg], axis=1)
    uniq, counts = np.unique(keys, axis=0, return_counts=True)
    return Counter({tuple(int(x) for x in row): int(c) for row, c in zip(uniq, counts)})


def _range(G: RibbonGraph, lo: int, hi: int) -> Counter:
    t = _Tables(G)
    hist: Counter = Counter()
    for start in range(lo, hi, BLOCK):
        hist.update(_block(t, start, min(hi, start + BLOCK)))
    return hist


def state_histogram(G: RibbonGraph, workers: int = 1) -> Counter:
    """Map ``(k(F), boundary(F), e(F), e_-(F))`` to the number of states ``F``."""
    total = 1 << G.num_edges
    if G.num_edges == 0:
        k = G.num_vertices
        return Counter({(k, G.num_vertices, 0, 0): 1})
    if workers <= 1 or total < 2 * BLOCK:
        return _range(G, 0, total)
    step = -(-total // workers)
    bounds = [(lo, min(total, lo + step)) for lo in range(0, total, step)]
    hist: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_range, [G] * len(bounds), *zip(*bounds)):
            hist.update(part)
    return hist
