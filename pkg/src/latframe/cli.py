"""``latframe`` command line.

Exit codes: 0 ok, 1 usage, 2 parse or validation error, 3 route limit exceeded,
4 invariant failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .bricks import (
    down_bricks,
    phi_L_all,
    psi_L_all,
    rowmotion_orbits,
    up_bricks,
)
from .checks import run_checks
from .classical import brick_to_arc, clique_to_perm, tamari_check
from .coherence import (
    GRoute,
    enumerate_bricks,
    enumerate_left_cornered_routes,
    enumerate_routes,
    parse_groute,
)
from .coords import ccl, ccr, leq_by_coordinates, not_leq_witness
from .corpus import random_framed_graph
from .errors import InvariantError, LatframeError, RouteLimitError, ValidationError
from .graph import FramedGraph, caracol, left_corners, oruga, parse_framed_graph, right_corners
from .lattice import DEFAULT_ROUTE_LIMIT, FramingLattice, build_lattice, sorted_clique, to_dot

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_LIMIT, EXIT_INVARIANT = 0, 1, 2, 3, 4


class UsageError(LatframeError):
    pass


@dataclass
class RunConfig:
    source: str
    command: str
    fmt: str = "text"
    route_limit: int = DEFAULT_ROUTE_LIMIT
    multiplicity: int = 2

    def __post_init__(self):
        if self.route_limit <= 0:
            raise UsageError("--route-limit must be positive")
        if self.multiplicity <= 0:
            raise UsageError("--multiplicity must be positive")


_FAMILY = re.compile(r"^(oruga|caracol|caracol-reversed):(\d+)$")
_RANDOM = re.compile(r"^random:(\d+),(\d+),(\d+)$")


def load_graph(cfg: RunConfig) -> FramedGraph:
    m = _FAMILY.match(cfg.source)
    if m:
        fam, n = m.group(1), int(m.group(2))
        if fam == "oruga":
            return oruga(n)
        return caracol(n, "tamari" if fam == "caracol" else "reversed")
    m = _RANDOM.match(cfg.source)
    if m:
        seed, v, e = map(int, m.groups())
        if v < 4 or e < 1:
            raise ValidationError("random graphs need at least 4 vertices and 1 edge")
        return random_framed_graph(seed, v, e, cfg.multiplicity)
    path = Path(cfg.source)
    if not path.is_file():
        raise UsageError(f"{cfg.source!r} is neither a file nor a builtin family")
    return parse_framed_graph(path.read_text())


# -- rendering helpers ---------------------------------------------------------------

def _clique_strs(G, clique) -> list[str]:
    return [str(r) for r in sorted_clique(G, clique)]


def _brick_strs(G, bricks) -> list[str]:
    return [str(b) for b in sorted_clique(G, bricks)]


def _emit(cfg: RunConfig, data, text_lines) -> None:
    if cfg.fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    elif cfg.fmt == "text":
        for line in text_lines:
            print(line)
    else:
        raise UsageError(f"--format {cfg.fmt} is not available for {cfg.command}")


def parse_element(L: FramingLattice, text: str) -> int:
    """A lattice index, or a ``;``-separated list of routes."""
    text = text.strip()
    if re.fullmatch(r"\d+", text):
        k = int(text)
        if k >= len(L):
            raise ValidationError(f"element {k} out of range 0..{len(L) - 1}")
        return k
    clique = frozenset(parse_groute(L.graph, part) for part in text.split(";") if part.strip())
    if clique not in L.index:
        raise ValidationError(f"{text!r} is not a maximal clique")
    return L.index[clique]


def parse_bricks(G: FramedGraph, text: str) -> frozenset[GRoute]:
    bricks = frozenset(parse_groute(G, part) for part in text.split(";") if part.strip())
    for b in bricks:
        if b.kind != "brick":
            raise ValidationError(f"{b} is not a brick")
    return bricks


# -- commands -------------------------------------------------------------------------

def cmd_routes(cfg, G, args):
    kinds = {
        "routes": enumerate_routes,
        "bricks": enumerate_bricks,
        "left": enumerate_left_cornered_routes,
    }
    items = [str(r) for r in kinds[args.kind](G)]
    _emit(cfg, {"kind": args.kind, "count": len(items), "items": items},
          [f"{k}\t{s}" for k, s in enumerate(items)] + [f"# {len(items)} {args.kind}"])


def cmd_cliques(cfg, G, args):
    L = build_lattice(G, cfg.route_limit)
    data = [_clique_strs(G, D) for D in L.elements]
    _emit(cfg, {"clique_size": G.clique_size, "cliques": data},
          [f"{k}\t" + "  ".join(c) for k, c in enumerate(data)])


def cmd_lattice(cfg, G, args):
    L = build_lattice(G, cfg.route_limit)
    if cfg.fmt == "dot":
        sys.stdout.write(to_dot(L, [ccl(G, D) for D in L.elements]))
        return
    covers = [{"lower": a, "upper": b, "label": str(lab)} for a, b, lab in L.hasse]
    data = {
        "elements": [{"index": k, "routes": _clique_strs(G, D)} for k, D in enumerate(L.elements)],
        "covers": covers,
        "bottom": L.bottom,
        "top": L.top,
    }
    lines = [f"{len(L)} elements, {len(covers)} covers, bottom {L.bottom}, top {L.top}"]
    lines += [f"{c['lower']} -> {c['upper']}\t{c['label']}" for c in covers]
    _emit(cfg, data, lines)


def cmd_bricks(cfg, G, args):
    L = build_lattice(G, cfg.route_limit)
    if args.element is None:
        items = [str(b) for b in enumerate_bricks(G)]
        _emit(cfg, {"bricks": items}, items)
        return
    x = parse_element(L, args.element)
    down, up = _brick_strs(G, down_bricks(L, x)), _brick_strs(G, up_bricks(L, x))
    _emit(cfg, {"element": x, "down": down, "up": up},
          [f"element {x}", "down: " + "  ".join(down), "up: " + "  ".join(up)])


def cmd_reconstruct(cfg, G, args):
    L = build_lattice(G, cfg.route_limit)
    T = parse_bricks(G, args.bricks)
    LT = phi_L_all(G, T)
    D = psi_L_all(G, LT)
    stage1 = [{"corner": str(c), "route": str(LT[c])} for c in left_corners(G)]
    stage2 = _clique_strs(G, D)
    x = L.index[D]
    lines = ["stage 1:"] + [f"  {s['route']}" for s in stage1]
    lines += ["stage 2:"] + [f"  {r}" for r in stage2] + [f"element {x}"]
    _emit(cfg, {"bricks": _brick_strs(G, T), "stage1": stage1, "stage2": stage2, "element": x}, lines)


def cmd_coords(cfg, G, args):
    L = build_lattice(G, cfg.route_limit)
    xs = [parse_element(L, e) for e in args.elements] if args.elements else range(len(L))
    rows = [{"element": x, "ccl": list(ccl(G, L.elements[x])), "ccr": list(ccr(G, L.elements[x]))} for x in xs]
    data = {
        "left_corners": [str(c) for c in left_corners(G)],
        "right_corners": [str(c) for c in right_corners(G)],
        "coordinates": rows,
    }
    _emit(cfg, data, [f"{r['element']}\tccl={tuple(r['ccl'])}\tccr={tuple(r['ccr'])}" for r in rows])


def cmd_compare(cfg, G, args):
    L = build_lattice(G, cfg.route_limit)
    a, b = parse_element(L, args.a), parse_element(L, args.b)
    A, B = L.elements[a], L.elements[b]
    verdict = leq_by_coordinates(G, A, B)
    if verdict != L.leq(a, b):
        raise InvariantError(f"coordinates and lattice order disagree on {a}, {b}")
    data = {"a": a, "b": b, "leq": verdict}
    if verdict:
        data["ccl_a"], data["ccl_b"] = list(ccl(G, A)), list(ccl(G, B))
        lines = [f"{a} <= {b}", f"ccl({a}) = {tuple(data['ccl_a'])}", f"ccl({b}) = {tuple(data['ccl_b'])}"]
    else:
        r, r2, v = not_leq_witness(G, A, B)
        data["witness"] = {"route_a": str(r), "route_b": str(r2), "vertex": v}
        lines = [f"{a} is not <= {b}", f"witness: {r2} (in {b}) is clockwise to {r} (in {a}) at {v}"]
    _emit(cfg, data, lines)


def cmd_check(cfg, G, args):
    results = []
    failed = None
    for res in run_checks(G, route_limit=cfg.route_limit):
        results.append(res)
        if cfg.fmt == "text":
            mark = "PASS" if res.passed else "FAIL"
            print(f"{mark}  {res.name} ({res.seconds:.2f}s){'  ' + res.detail if res.detail else ''}")
        if not res.passed:
            failed = res
    if cfg.fmt == "json":
        print(json.dumps(
            [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            indent=2, sort_keys=True, ensure_ascii=False,
        ))
    elif cfg.fmt != "text":
        raise UsageError("check supports text and json only")
    if failed is not None:
        raise InvariantError(f"{failed.name}: {failed.detail}")


def cmd_export_dot(cfg, G, args):
    L = build_lattice(G, cfg.route_limit)
    dot = to_dot(L, [ccl(G, D) for D in L.elements] if not args.no_coords else None)
    if args.output:
        Path(args.output).write_text(dot)
    else:
        sys.stdout.write(dot)


def cmd_rowmotion(cfg, G, args):
    L = build_lattice(G, cfg.route_limit)
    orbits = rowmotion_orbits(L)
    _emit(cfg, {"orbits": orbits, "sizes": sorted(len(o) for o in orbits)},
          [" ".join(map(str, o)) for o in orbits])


def cmd_table(cfg, G, args):
    """Correspondence with permutations (oruga) or bracket vectors (caracol)."""
    m = _FAMILY.match(cfg.source)
    if not m or m.group(1) == "caracol-reversed":
        raise UsageError("table needs oruga:n or caracol:n")
    fam, n = m.group(1), int(m.group(2))
    L = build_lattice(G, cfg.route_limit)
    rows, lines = [], []
    if fam == "oruga":
        for x, D in enumerate(L.elements):
            perm = clique_to_perm(n, D)
            arcs = sorted(brick_to_arc(n, b) for b in down_bricks(L, x))
            row = {"element": x, "permutation": "".join(map(str, perm)),
                   "arcs": [str(a) for a in arcs], "ccl": list(ccl(G, D))}
            rows.append(row)
        w = max(len(" ".join(r["arcs"])) for r in rows)
        lines = [f"{r['element']:>4}  {r['permutation']:<{n}}  {' '.join(r['arcs']):<{w}}  {tuple(r['ccl'])}" for r in rows]
    else:
        rep = tamari_check(n)
        for x, D in enumerate(L.elements):
            rows.append({"element": x, "ccl": list(ccl(G, D)), "bricks": _brick_strs(G, down_bricks(L, x))})
        lines = [f"{r['element']:>4}  {tuple(r['ccl'])}  {'  '.join(r['bricks'])}" for r in rows]
        lines.append(f"# tamari check {'passed' if rep.passed else 'FAILED'}, corner map {rep.corner_map}")
        if not rep.passed:
            raise InvariantError("tamari check failed")
    _emit(cfg, {"family": fam, "n": n, "rows": rows}, lines)


COMMANDS = {
    "routes": cmd_routes,
    "cliques": cmd_cliques,
    "lattice": cmd_lattice,
    "bricks": cmd_bricks,
    "reconstruct": cmd_reconstruct,
    "coords": cmd_coords,
    "compare": cmd_compare,
    "check": cmd_check,
    "export-dot": cmd_export_dot,
    "rowmotion": cmd_rowmotion,
    "table": cmd_table,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("source", help="graph file, oruga:n, caracol:n, caracol-reversed:n or random:seed,v,e")
    common.add_argument("--format", dest="fmt", choices=["text", "json", "dot"], default="text")
    common.add_argument("--route-limit", type=int, default=DEFAULT_ROUTE_LIMIT)
    common.add_argument("--multiplicity", type=int, default=2, help="max parallel edges for random graphs")

    p = _Parser(prog="latframe", description="Framing lattices of framed DAGs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("routes", parents=[common], help="list routes, bricks or left-cornered routes")
    s.add_argument("--kind", choices=["routes", "bricks", "left"], default="routes")
    sub.add_parser("cliques", parents=[common], help="maximal cliques in lattice order")
    sub.add_parser("lattice", parents=[common], help="elements and labelled covers")
    s = sub.add_parser("bricks", parents=[common], help="bricks, or cover labels of one element")
    s.add_argument("element", nargs="?")
    s = sub.add_parser("reconstruct", parents=[common], help="clique from a brick clique")
    s.add_argument("--bricks", required=True, help="bricks separated by ';' (empty for the bottom)")
    s = sub.add_parser("coords", parents=[common], help="cubical coordinates")
    s.add_argument("elements", nargs="*")
    s = sub.add_parser("compare", parents=[common], help="compare two elements")
    s.add_argument("a")
    s.add_argument("b")
    sub.add_parser("check", parents=[common], help="run the invariant suite")
    s = sub.add_parser("export-dot", parents=[common], help="Hasse diagram as DOT")
    s.add_argument("-o", "--output")
    s.add_argument("--no-coords", action="store_true")
    sub.add_parser("rowmotion", parents=[common], help="rowmotion orbits")
    sub.add_parser("table", parents=[common], help="classical correspondence table")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code
    try:
        cfg = RunConfig(args.source, args.command, args.fmt, args.route_limit, args.multiplicity)
        G = load_graph(cfg)
        COMMANDS[args.command](cfg, G, args)
    except UsageError as exc:
        print(f"latframe: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RouteLimitError as exc:
        print(f"latframe: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InvariantError as exc:
        print(f"latframe: invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (LatframeError, ValueError) as exc:
        print(f"latframe: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
