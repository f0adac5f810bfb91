"""Signed arrow presentations and the conversions to and from ribbon graphs.

A cycle is the boundary circle of a vertex disk, listed in the direction of
the vertex's local orientation.  Each arrow is ``(label, direction)`` where
``direction`` is ``+1`` when the arrow points along the listed order and
``-1`` otherwise.  Edges are oriented so that the arrow on the first dart
points forward; the second arrow then points forward exactly when the edge
is untwisted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import StructuralError
from .graph import PLUS, Edge, RibbonGraph

Arrow = tuple[int, int]


@dataclass(frozen=True)
class ArrowPresentation:
    cycles: tuple[tuple[Arrow, ...], ...]
    signs: Mapping[int, int]

    def __init__(self, cycles: Iterable[Iterable[Arrow]], signs: Mapping[int, int]):
        cycles = tuple(tuple((int(l), int(d)) for l, d in cyc) for cyc in cycles)
        object.__setattr__(self, "cycles", cycles)
        object.__setattr__(self, "signs", dict(signs))
        counts = Counter(l for cyc in cycles for l, _ in cyc)
        for label, n in counts.items():
            if n != 2:
                raise StructuralError(f"label {label} occurs {n} times, expected 2")
            if label not in self.signs:
                raise StructuralError(f"label {label} has no sign")
        for cyc in cycles:
            for label, d in cyc:
                if d not in (1, -1):
                    raise StructuralError(f"arrow {label}: direction must be +1 or -1")
        for label, s in self.signs.items():
            if s not in (1, -1):
                raise StructuralError(f"label {label}: sign must be +1 or -1")

    @property
    def labels(self) -> list[int]:
        return sorted({l for cyc in self.cycles for l, _ in cyc})

    def reverse_labels(self, labels: Iterable[int]) -> ArrowPresentation:
        """Equivalent presentation with the arrows of ``labels`` reversed."""
        labels = set(labels)
        cycles = [[(l, -d if l in labels else d) for l, d in cyc] for cyc in self.cycles]
        return ArrowPresentation(cycles, self.signs)


def to_arrow_presentation(G: RibbonGraph) -> ArrowPresentation:
    cycles = []
    for rot in G.vertices:
        cyc = []
        for d in rot:
            e = G.edge_of(d)
            forward = d == min(e.darts) or not e.twist
            cyc.append((e.id, 1 if forward else -1))
        cycles.append(cyc)
    return ArrowPresentation(cycles, {e.id: e.sign for e in G.edges})


def from_arrow_presentation(P: ArrowPresentation) -> RibbonGraph:
    """Glue one ribbon per label; darts are numbered 1, 2, ... in cycle order."""
    vertices = []
    seen: dict[int, tuple[int, int]] = {}
    edges = []
    dart = 0
    for cyc in P.cycles:
        rot = []
        for label, direction in cyc:
            dart += 1
            rot.append(dart)
            if label in seen:
                first, first_dir = seen.pop(label)
                edges.append(Edge(label, (first, dart), P.signs.get(label, PLUS), int(first_dir != direction)))
            else:
                seen[label] = (dart, direction)
        vertices.append(rot)
    edges.sort(key=lambda e: e.id)
    return RibbonGraph(vertices, edges)
