"""Isomorphism testing by rooted propagation.

An isomorphism is a dart bijection together with a flip bit per vertex of
the source graph: rotations of flipped vertices are read backwards and the
twist of an edge between ``u`` and ``w`` changes by ``flip(u) ^ flip(w)``.
Once the image and flip of a single dart are fixed, the rest of its
connected component is forced, so each component needs at most
``2 * (number of darts)`` propagation attempts.
"""

from __future__ import annotations

from collections import Counter

from .graph import RibbonGraph, components


def _component_vertices(G: RibbonGraph) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(components(G)):
        groups.setdefault(c, []).append(v)
    return list(groups.values())


def _extend(G: RibbonGraph, H: RibbonGraph, root: int, image: int, flip: int) -> bool:
    dart_map: dict[int, int] = {}
    flips: dict[int, int] = {}
    used_h: set[int] = set()
    queue = [(root, image, flip)]
    while queue:
        d, t, f = queue.pop()
        u = G.vertex_of(d)
        if u in flips:
            if flips[u] != f or dart_map.get(d) != t:
                return False
            continue
        hv = H.vertex_of(t)
        if hv in used_h or len(G.vertices[u]) != len(H.vertices[hv]):
            return False
        used_h.add(hv)
        flips[u] = f
        x, y = d, t
        for _ in G.vertices[u]:
            dart_map[x] = y
            x = G.next(x)
            y = H.prev(y) if f else H.next(y)
        for x in G.vertices[u]:
            y = dart_map[x]
            eg, eh = G.edge_of(x), H.edge_of(y)
            if eg.sign != eh.sign:
                return False
            xp, yp = eg.other(x), eh.other(y)
            fp = f ^ eg.twist ^ eh.twist
            w = G.vertex_of(xp)
            if w in flips:
                if flips[w] != fp or dart_map.get(xp) != yp:
                    return False
            else:
                queue.append((xp, yp, fp))
    return True


def _component_isomorphic(G: RibbonGraph, gv: list[int], H: RibbonGraph, hv: list[int]) -> bool:
    root = G.vertices[gv[0]][0]
    for v in hv:
        for t in H.vertices[v]:
            for flip in (0, 1):
                if _extend(G, H, root, t, flip):
                    return True
    return False


def _shape(G: RibbonGraph, vertices: list[int]) -> tuple:
    degrees = sorted(len(G.vertices[v]) for v in vertices)
    signs = sorted(G.edge_of(d).sign for v in vertices for d in G.vertices[v])
    return len(vertices), tuple(degrees), tuple(signs)


def is_isomorphic(G: RibbonGraph, H: RibbonGraph) -> bool:
    if (G.num_vertices, G.num_edges) != (H.num_vertices, H.num_edges):
        return False
    if Counter(e.sign for e in G.edges) != Counter(e.sign for e in H.edges):
        return False
    gcomps = _component_vertices(G)
    hcomps = _component_vertices(H)
    if Counter(_shape(G, c) for c in gcomps) != Counter(_shape(H, c) for c in hcomps):
        return False
    unmatched = list(hcomps)
    for gc in gcomps:
        if not G.vertices[gc[0]]:
            # isolated vertex; the shape counters already matched these up
            continue
        shape = _shape(G, gc)
        for i, hc in enumerate(unmatched):
            if _shape(H, hc) == shape and _component_isomorphic(G, gc, H, hc):
                del unmatched[i]
                break
        else:
            return False
    return True
