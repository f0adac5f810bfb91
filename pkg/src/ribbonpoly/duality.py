"""Partial duals of signed ribbon graphs.

The boundary of the spanning sub-graph ``(V(G), A)`` is traced inside ``G``
with the signed-dart walk.  Each step of the walk runs over one arc that
meets an edge ``e``: the attaching arc of the dart when ``e`` is not in
``A``, or one long side of the ribbon when it is.  Every edge boundary is
oriented by the reference convention of :mod:`ribbonpoly.arrows` (forward
at its lower dart), which fixes the direction of the arrow placed on each
of those arcs.  The traced circles become the cycles of a signed arrow
presentation, labels in ``A`` change sign, and the result is glued back
into a ribbon graph.  Edge ids are kept, so ``e`` and ``e^A`` share an id.
"""

from __future__ import annotations

from typing import Iterable

from .arrows import ArrowPresentation, from_arrow_presentation
from .errors import StructuralError
from .graph import PLUS, MINUS, RibbonGraph, boundary_orbits


def _reference_direction(G: RibbonGraph, dart: int) -> int:
    """Direction, relative to the dart's vertex, of the edge boundary along the dart's arc."""
    e = G.edge_of(dart)
    lower = min(e.darts)
    return PLUS if dart == lower or not e.twist else MINUS


def partial_dual_presentation(G: RibbonGraph, subset: Iterable[int]) -> ArrowPresentation:
    subset = G.check_subset(subset)
    orbits = boundary_orbits(G, subset)
    position = {sd: (i, j) for i, orbit in enumerate(orbits) for j, sd in enumerate(orbit)}

    def mirror(sd):
        # the same arc walked the other way round
        d, s = sd
        e = G.edge_of(d)
        if e.id in subset:
            d = e.other(d)
            if e.twist:
                s = -s
        return d, -s

    cycles = []
    taken = set()
    for i, orbit in enumerate(orbits):
        if i in taken:
            continue
        partner = position[mirror(orbit[0])][0]
        if partner == i:
            raise StructuralError("boundary walk meets itself in reverse")
        taken.update((i, partner))
        cycle = []
        for d, s in orbit:
            e = G.edge_of(d)
            ref = _reference_direction(G, d)
            if e.id in subset:
                direction = 1 if s != ref else -1
            else:
                direction = 1 if s == ref else -1
            cycle.append((e.id, direction))
        cycles.append(cycle)
    cycles.extend([] for rot in G.vertices if not rot)
    signs = {e.id: -e.sign if e.id in subset else e.sign for e in G.edges}
    return ArrowPresentation(cycles, signs)


def partial_dual(G: RibbonGraph, subset: Iterable[int]) -> RibbonGraph:
    return from_arrow_presentation(partial_dual_presentation(G, subset))


def geometric_dual(G: RibbonGraph) -> RibbonGraph:
    """Classical dual: faces become vertices, signs unchanged."""
    return partial_dual(G, G.edge_ids).flip_signs()
