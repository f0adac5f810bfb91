"""Text formats for ribbon graphs (``.rg``) and arrow presentations (``.ap``).

``.rg``::

    rg 1
    v <id> : <dart> <dart> ...          # rotation, may be empty
    e <id> : <dart> <dart> <+|-> <0|1>  # darts, sign, twist

``.ap``::

    ap 1
    cycle : <label><+|-> ...
    sign <label> <+|->

``#`` starts a comment.  Serialisation is canonical (see
:meth:`RibbonGraph.canonical`), so ``serialize(parse(serialize(G)))`` is
``serialize(G)``.
"""

from __future__ import annotations

import re
from typing import Iterator

from .arrows import ArrowPresentation
from .errors import ParseError, StructuralError
from .graph import MINUS, PLUS, Edge, RibbonGraph

_SIGNS = {"+": PLUS, "-": MINUS}


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for n, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield n, tokens


def _int(token: str, line: int, what: str, positive: bool = False) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line=line) from None
    if value < 0 or (positive and value == 0):
        raise ParseError(f"{what} must be {'positive' if positive else 'nonnegative'}, got {value}", line=line)
    return value


def _header(lines, kind: str) -> None:
    try:
        n, tokens = next(lines)
    except StopIteration:
        raise ParseError(f"empty input, expected '{kind} 1'", line=1) from None
    if tokens != [kind, "1"]:
        raise ParseError(f"expected header '{kind} 1'", line=n)


def parse_rg(text: str) -> RibbonGraph:
    lines = _lines(text)
    _header(lines, "rg")
    rotations: list[list[int]] = []
    vertex_ids: set[int] = set()
    edges: list[Edge] = []
    edge_ids: set[int] = set()
    dart_line: dict[int, int] = {}
    edge_dart_line: dict[int, int] = {}
    for n, tokens in lines:
        if len(tokens) < 3 or tokens[2] != ":":
            raise ParseError("expected '<v|e> <id> : ...'", line=n)
        kind, ident = tokens[0], _int(tokens[1], n, "id")
        body = tokens[3:]
        if kind == "v":
            if ident in vertex_ids:
                raise ParseError(f"vertex {ident} defined twice", line=n)
            vertex_ids.add(ident)
            rot = [_int(t, n, "dart", positive=True) for t in body]
            for d in rot:
                if d in dart_line:
                    raise ParseError(f"dart {d} already used in a vertex on line {dart_line[d]}", line=n)
                dart_line[d] = n
            rotations.append(rot)
        elif kind == "e":
            if len(body) != 4:
                raise ParseError("edge line needs: <dart> <dart> <sign> <twist>", line=n)
            if ident in edge_ids:
                raise ParseError(f"edge {ident} defined twice", line=n)
            edge_ids.add(ident)
            d1, d2 = (_int(t, n, "dart", positive=True) for t in body[:2])
            if body[2] not in _SIGNS:
                raise ParseError(f"bad sign token {body[2]!r}", line=n)
            if body[3] not in ("0", "1"):
                raise ParseError(f"bad twist token {body[3]!r}", line=n)
            if d1 == d2:
                raise ParseError(f"edge {ident} uses dart {d1} twice", line=n)
            for d in (d1, d2):
                if d in edge_dart_line:
                    raise ParseError(f"dart {d} already used in an edge on line {edge_dart_line[d]}", line=n)
                edge_dart_line[d] = n
            edges.append(Edge(ident, (d1, d2), _SIGNS[body[2]], int(body[3])))
        else:
            raise ParseError(f"unknown record type {kind!r}", line=n)
    for d in sorted(dart_line.keys() ^ edge_dart_line.keys()):
        line = dart_line.get(d, edge_dart_line.get(d))
        raise ParseError(f"dart {d} is unpaired (needs one vertex and one edge)", line=line)
    try:
        return RibbonGraph(rotations, edges)
    except StructuralError as exc:
        raise ParseError(str(exc)) from exc


def serialize_rg(G: RibbonGraph) -> str:
    G = G.canonical()
    out = ["rg 1"]
    for i, rot in enumerate(G.vertices):
        out.append(" ".join([f"v {i} :"] + [str(d) for d in rot]))
    for e in G.edges:
        sign = "+" if e.sign == PLUS else "-"
        out.append(f"e {e.id} : {e.darts[0]} {e.darts[1]} {sign} {e.twist}")
    return "\n".join(out) + "\n"


def parse_rg_many(text: str) -> list[RibbonGraph]:
    """Split a stream of concatenated ``.rg`` documents at their headers."""
    chunks: list[list[str]] = []
    for raw in text.splitlines():
        if raw.split("#", 1)[0].split() == ["rg", "1"]:
            chunks.append([])
        if chunks:
            chunks[-1].append(raw)
        elif raw.split("#", 1)[0].strip():
            raise ParseError("content before the first 'rg 1' header")
    return [parse_rg("\n".join(c)) for c in chunks]


_ARROW = re.compile(r"^(\d+)([+-])$")


def parse_ap(text: str) -> ArrowPresentation:
    lines = _lines(text)
    _header(lines, "ap")
    cycles: list[list[tuple[int, int]]] = []
    signs: dict[int, int] = {}
    first_seen: dict[int, int] = {}
    for n, tokens in lines:
        if tokens[0] == "cycle":
            if len(tokens) < 2 or tokens[1] != ":":
                raise ParseError("expected 'cycle : ...'", line=n)
            cycle = []
            for tok in tokens[2:]:
                m = _ARROW.match(tok)
                if not m:
                    raise ParseError(f"bad arrow token {tok!r}", line=n)
                label = int(m.group(1))
                first_seen.setdefault(label, n)
                cycle.append((label, 1 if m.group(2) == "+" else -1))
            cycles.append(cycle)
        elif tokens[0] == "sign":
            if len(tokens) != 3 or tokens[2] not in _SIGNS:
                raise ParseError("expected 'sign <label> <+|->'", line=n)
            label = _int(tokens[1], n, "label")
            if label in signs:
                raise ParseError(f"label {label} signed twice", line=n)
            signs[label] = _SIGNS[tokens[2]]
        else:
            raise ParseError(f"unknown record type {tokens[0]!r}", line=n)
    counts: dict[int, int] = {}
    for cyc in cycles:
        for label, _ in cyc:
            counts[label] = counts.get(label, 0) + 1
    for label, c in counts.items():
        if c != 2:
            raise ParseError(f"label {label} occurs {c} times, expected 2", line=first_seen[label])
        if label not in signs:
            raise ParseError(f"label {label} has no sign", line=first_seen[label])
    try:
        return ArrowPresentation(cycles, signs)
    except StructuralError as exc:
        raise ParseError(str(exc)) from exc


def serialize_ap(P: ArrowPresentation) -> str:
    out = ["ap 1"]
    for cyc in P.cycles:
        out.append(" ".join(["cycle :"] + [f"{l}{'+' if d > 0 else '-'}" for l, d in cyc]))
    for label in sorted(P.signs):
        out.append(f"sign {label} {'+' if P.signs[label] > 0 else '-'}")
    return "\n".join(out) + "\n"
