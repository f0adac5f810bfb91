"""The signed Bollobas-Riordan polynomial and its duality relation.

``br_polynomial`` is the state sum over all edge subsets ``F``::

    sum_F x^(r(G)-r(F)+s(F)) y^(n(F)-s(F)) z^(k(F)-bd(F)+n(F)),
    s(F) = (2 e_-(F) - e_-(G)) / 2

``br_potts`` is the same polynomial after ``x = ac/b, y = bc, z = 1/c``,
computed directly as a Potts-type sum with edge weight ``b`` (positive) or
``a/b`` (negative).
"""

from __future__ import annotations

from typing import Iterable

from .duality import partial_dual
from .errors import InputError
from .graph import RibbonGraph, num_components, stats
from .laurent import LaurentPoly, substitute
from .states import state_histogram

XYZ = ("x", "y", "z")
ABC = ("a", "b", "c")
YZ = ("y", "z")


def br_polynomial(G: RibbonGraph, workers: int = 1) -> LaurentPoly:
    v = G.num_vertices
    kG = num_components(G)
    negG = sum(1 for e in G.edges if e.sign < 0)
    terms: dict[tuple[int, int, int], int] = {}
    for (k, bd, ne, nneg), count in state_histogram(G, workers).items():
        twice_s = 2 * nneg - negG
        nullity = ne - v + k
        key = (2 * (k - kG) + twice_s, 2 * nullity - twice_s, 2 * (k - bd + nullity))
        terms[key] = terms.get(key, 0) + count
    return LaurentPoly(XYZ, terms)


def br_potts(G: RibbonGraph, workers: int = 1) -> LaurentPoly:
    v = G.num_vertices
    kG = num_components(G)
    negG = sum(1 for e in G.edges if e.sign < 0)
    terms: dict[tuple[int, int, int], int] = {}
    for (k, bd, ne, nneg), count in state_histogram(G, workers).items():
        # a^k(F) c^bd(F) b^(e_+(F)) (a/b)^(e_-(F))
        a, b, c = 2 * (k + nneg), 2 * (ne - nneg) - 2 * nneg, 2 * bd
        key = (a, b, c)
        terms[key] = terms.get(key, 0) + count
    sum_part = LaurentPoly(ABC, terms)
    # (b/(ac))^k(G) (1/b)^v(G) (b/sqrt(a))^e_-(G)
    prefactor = LaurentPoly(ABC, {(-2 * kG - negG, 2 * kG - 2 * v + 2 * negG, -2 * kG): 1})
    return prefactor * sum_part


def potts_substitution(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a polynomial in ``x, y, z`` through ``x = ac/b, y = bc, z = 1/c``."""
    return substitute(p, {"x": "a*c*b^-1", "y": "b*c", "z": "c^-1"}, ABC)


def on_duality_surface(G: RibbonGraph, poly: LaurentPoly | None = None) -> LaurentPoly:
    """``(yz)^v(G) R_s(G)`` restricted to ``xyz^2 = 1``, as a polynomial in ``y, z``."""
    if poly is None:
        poly = br_polynomial(G)
    reduced = substitute(poly, {"x": "y^-1*z^-2", "y": "y", "z": "z"}, YZ)
    return LaurentPoly(YZ, {(2 * G.num_vertices,) * 2: 1}) * reduced


def verify_duality(G: RibbonGraph, subset: Iterable[int]) -> bool:
    subset = G.check_subset(subset)
    return on_duality_surface(G) == on_duality_surface(partial_dual(G, subset))


def tutte_oracle(G: RibbonGraph) -> LaurentPoly:
    """Tutte polynomial of the underlying graph of a connected plane all-positive ribbon graph."""
    st = stats(G)
    if st.components != 1:
        raise InputError("tutte_oracle needs a connected graph")
    if not st.orientable or st.euler_genus != 0:
        raise InputError("tutte_oracle needs a plane ribbon graph")
    if st.negative:
        raise InputError("tutte_oracle needs an all-positive graph")
    edges = [G.endpoints(e) for e in G.edges]
    terms = _tutte(tuple(edges), G.num_vertices)
    return LaurentPoly(("x", "y"), {(2 * i, 2 * j): c for (i, j), c in terms.items()})


def _connected(edges, u: int, w: int) -> bool:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen, stack = {u}, [u]
    while stack:
        for nxt in adj.get(stack.pop(), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return w in seen


def _shift(poly: dict, di: int, dj: int) -> dict:
    return {(i + di, j + dj): c for (i, j), c in poly.items()}


def _tutte(edges: tuple, n: int) -> dict[tuple[int, int], int]:
    if not edges:
        return {(0, 0): 1}
    (u, w), rest = edges[0], edges[1:]
    if u == w:
        return _shift(_tutte(rest, n), 0, 1)
    contracted = tuple((u if a == w else a, u if b == w else b) for a, b in rest)
    if not _connected(rest, u, w):
        return _shift(_tutte(contracted, n - 1), 1, 0)
    result = dict(_tutte(rest, n))
    for key, c in _tutte(contracted, n - 1).items():
        result[key] = result.get(key, 0) + c
    return result
