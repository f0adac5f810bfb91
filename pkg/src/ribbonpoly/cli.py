"""Command-line front end.

Exit codes: 0 success / verified / isomorphic, 1 verified-false or
non-isomorphic, 2 usage or parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .brpoly import XYZ, br_polynomial, br_potts, on_duality_surface
from .duality import partial_dual
from .errors import DomainError, InputError, ParseError, RibbonError
from .formats import parse_rg, serialize_rg
from .gen import GenParams, enumerate_graphs, random_graph, realize_polynomial
from .graph import RibbonGraph, iter_states, stats
from .homfly import homfly_resolution, homfly_state_sum, verify_transfer
from .iso import is_isomorphic
from .laurent import format_poly, parse_poly

OK, FALSE, USAGE, DOMAIN = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> RibbonGraph:
    try:
        return parse_rg(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _subset(G: RibbonGraph, text: str) -> frozenset[int]:
    text = text.strip()
    if text == "all":
        return frozenset(G.edge_ids)
    if text in ("none", ""):
        return frozenset()
    try:
        ids = {int(tok) for tok in text.split(",") if tok.strip()}
    except ValueError:
        raise _UsageError(f"bad edge list {text!r}") from None
    return G.check_subset(ids)


def cmd_info(args) -> int:
    st = stats(_load(args.file))
    print(
        f"v={st.vertices} e={st.edges} k={st.components} boundary={st.boundary} "
        f"genus={st.euler_genus} orientable={'yes' if st.orientable else 'no'}"
    )
    return OK


def cmd_brpoly(args) -> int:
    G = _load(args.file)
    poly = br_potts(G, args.workers) if args.potts else br_polynomial(G, args.workers)
    print(format_poly(poly))
    return OK


def cmd_dual(args) -> int:
    G = _load(args.file)
    sys.stdout.write(serialize_rg(partial_dual(G, _subset(G, args.edges))))
    return OK


def cmd_verify_duality(args) -> int:
    G = _load(args.file)
    lhs = on_duality_surface(G)
    subsets = iter_states(G) if args.all_subsets else [_subset(G, args.edges)]
    checked = 0
    for A in subsets:
        if on_duality_surface(partial_dual(G, A)) != lhs:
            print(f"duality FAILS for A={{{','.join(map(str, sorted(A)))}}}")
            return FALSE
        checked += 1
    print(f"duality verified for {checked} subset{'s' if checked != 1 else ''}")
    return OK


def cmd_homfly(args) -> int:
    G = _load(args.file)
    poly = homfly_resolution(G) if args.method == "resolution" else homfly_state_sum(G)
    print(format_poly(poly))
    return OK


def cmd_check_transfer(args) -> int:
    G = _load(args.file)
    ok = verify_transfer(G, args.samples, args.seed)
    print(f"transfer identity {'verified' if ok else 'FAILS'} at {args.samples} sample points")
    return OK if ok else FALSE


def cmd_iso(args) -> int:
    same = is_isomorphic(_load(args.file1), _load(args.file2))
    print("isomorphic" if same else "not isomorphic")
    return OK if same else FALSE


def cmd_random(args) -> int:
    params = GenParams(args.vertices, args.edges, args.neg_prob, args.twist_prob, args.orientable, args.seed)
    sys.stdout.write(serialize_rg(random_graph(params)))
    return OK


def _emit_many(graphs: list[RibbonGraph]) -> None:
    print(f"# {len(graphs)} graph{'s' if len(graphs) != 1 else ''}")
    for i, G in enumerate(graphs, start=1):
        print(f"# graph {i}")
        sys.stdout.write(serialize_rg(G))


def cmd_enum(args) -> int:
    _emit_many(enumerate_graphs(args.vertices, args.edges))
    return OK


def cmd_realize(args) -> int:
    try:
        target = parse_poly(_read(args.target).strip(), XYZ)
    except ParseError as exc:
        raise ParseError(f"{args.target}: {exc}") from exc
    found = realize_polynomial(target, args.vertices, args.edges)
    _emit_many(found)
    return OK if found else FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ribbonpoly", description="Signed ribbon graphs, partial duals and their polynomials.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="print vertex/edge/component/boundary counts")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("brpoly", help="signed Bollobas-Riordan polynomial")
    p.add_argument("file")
    p.add_argument("--potts", action="store_true", help="Potts form in variables a, b, c")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_brpoly)

    p = sub.add_parser("dual", help="partial dual with respect to an edge set")
    p.add_argument("file")
    p.add_argument("--edges", required=True, help="comma-separated ids, 'all' or 'none'")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("verify-duality", help="check the partial-duality relation")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--edges")
    group.add_argument("--all-subsets", action="store_true")
    p.set_defaults(func=cmd_verify_duality)

    p = sub.add_parser("homfly", help="homfly polynomial of the associated link")
    p.add_argument("file")
    p.add_argument("--method", choices=("statesum", "resolution"), default="statesum")
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("check-transfer", help="check the homfly / ribbon-graph transfer identity")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check_transfer)

    p = sub.add_parser("iso", help="test two graphs for isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("random", help="seeded random ribbon graph")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--neg-prob", type=float, default=0.5)
    p.add_argument("--twist-prob", type=float, default=0.5)
    p.add_argument("--orientable", action="store_true")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("enum", help="all graphs with given edge count up to isomorphism")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("realize", help="enumerated graphs with a given polynomial")
    p.add_argument("--target", required=True, help="file holding a polynomial in x, y, z")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.set_defaults(func=cmd_realize)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else USAGE
    except _UsageError as exc:
        print(f"ribbonpoly: error: {exc}", file=sys.stderr)
        return USAGE
    except (ParseError, InputError) as exc:
        print(f"ribbonpoly: error: {exc}", file=sys.stderr)
        return USAGE
    except DomainError as exc:
        print(f"ribbonpoly: domain error: {exc}", file=sys.stderr)
        return DOMAIN
    except RibbonError as exc:
        print(f"ribbonpoly: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
