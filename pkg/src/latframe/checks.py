"""Exhaustive invariant checks on one framed graph.

Each check raises :class:`InvariantError` carrying the first counterexample.
``run_checks`` drives them all; the CLI ``check`` command and the acceptance
tests both use it.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .bricks import (
    brick_complex_faces,
    down_bricks,
    phi_L,
    phi_L_all,
    phi_L_brute,
    phi_R,
    psi_L,
    psi_L_all,
    psi_L_brute,
    psi_L_dual,
    psi_L_dual_all,
    psi_R,
    reconstruct,
    rowmotion_orbits,
    seeds,
    sigma_L,
    sigma_R,
    up_bricks,
    up_reconstruct,
)
from .coherence import (
    are_coherent,
    enumerate_bricks,
    enumerate_routes,
    is_clockwise_at,
    reflect_route_lr,
    shared_internal,
)
from .coords import (
    ccl,
    ccr,
    cornering_routes,
    is_left_clockwise,
    leq_by_coordinates,
    left_clockwise_bricks,
    not_leq_witness,
)
from .errors import InvariantError
from .graph import FramedGraph, left_corners, reflect_lr, reflect_ud
from .lattice import (
    FramingLattice,
    adjacent,
    build_lattice,
    canonical_join_representation,
    check_semidistributive,
    flip_graph_cliques,
    join_irreducibles,
    maximal_cliques,
)


def _fail(msg: str):
    raise InvariantError(msg)


class Context:
    """Lazily computed shared data for one graph."""

    def __init__(self, G: FramedGraph, route_limit: Optional[int] = None):
        self.G = G
        self.L: FramingLattice = build_lattice(G, route_limit) if route_limit else build_lattice(G)
        self._faces = None
        self._lcb = None

    @property
    def faces(self):
        if self._faces is None:
            self._faces = brick_complex_faces(self.G)
        return self._faces

    @property
    def lcb(self):
        if self._lcb is None:
            self._lcb = [left_clockwise_bricks(self.G, D) for D in self.L.elements]
        return self._lcb


# -- individual checks ---------------------------------------------------------------

def check_clique_sizes(ctx: Context):
    G = ctx.G
    for D in ctx.L.elements:
        if len(D) != G.clique_size:
            _fail(f"clique of size {len(D)} != {G.clique_size}")
        routes = enumerate_routes(G)
        for r in routes:
            if r not in D and all(are_coherent(G, r, q) for q in D):
                _fail(f"clique is not maximal: {r} can be added")


def check_flip_graph(ctx: Context):
    G = ctx.G
    start = reconstruct(G, frozenset())
    if set(flip_graph_cliques(G, start)) != set(maximal_cliques(G)):
        _fail("flip-graph exploration and clique enumeration disagree")
    if start != ctx.L.elements[ctx.L.bottom]:
        _fail("reconstruction of the empty brick clique is not the bottom")


def check_coherence_basics(ctx: Context):
    G = ctx.G
    routes = enumerate_routes(G)
    for i, p in enumerate(routes):
        for q in routes[i + 1 :]:
            for v in shared_internal(G, p, q):
                if is_clockwise_at(G, p, q, v) and is_clockwise_at(G, q, p, v):
                    _fail(f"{p} and {q} clockwise to each other at {v}")
    for b in enumerate_bricks(G):
        v = b.left.apex
        if not any(v in r.vset and is_clockwise_at(G, b, r, v) for r in routes):
            _fail(f"brick {b} is clockwise to no route at its left corner")


def check_cover_labels(ctx: Context):
    G, L = ctx.G, ctx.L
    for a, b, lab in L.hasse:
        r, r2, sub = adjacent(G, L.elements[a], L.elements[b])
        v = sub[1]
        if not (is_clockwise_at(G, lab, r2, v) and is_clockwise_at(G, r, lab, v)):
            _fail(f"label {lab} of {a}<{b} is not between the exchanged routes")
    for x in range(len(L)):
        labels = [lab for _, lab in L.lower_covers[x]]
        if len(set(labels)) != len(labels):
            _fail(f"repeated lower cover labels at {x}")


def check_semidistributivity(ctx: Context):
    if not check_semidistributive(ctx.L):
        _fail("lattice is not semidistributive")


def check_canonical_join(ctx: Context):
    G, L = ctx.G, ctx.L
    bricks = enumerate_bricks(G)
    ji = join_irreducibles(L)
    if len(ji) != len(bricks):
        _fail(f"{len(ji)} join-irreducibles vs {len(bricks)} bricks")
    to_elt = {b: L.find(reconstruct(G, frozenset([b]))) for b in bricks}
    if sorted(to_elt.values()) != sorted(ji):
        _fail("single bricks do not reconstruct to the join-irreducibles")
    to_brick = {x: b for b, x in to_elt.items()}
    cjrs = set()
    for x in range(len(L)):
        cjr = frozenset(to_brick[j] for j in canonical_join_representation(L, x))
        if cjr != down_bricks(L, x):
            _fail(f"canonical join representation of {x} differs from its down bricks")
        cjrs.add(cjr)
    if cjrs != set(ctx.faces):
        _fail("brick complex differs from the canonical join complex")


def check_round_trips(ctx: Context):
    G, L = ctx.G, ctx.L
    for T in ctx.faces:
        D = reconstruct(G, T)
        if down_bricks(L, D) != T:
            _fail(f"down_bricks(reconstruct(T)) != T for T = {sorted(map(str, T))}")
        if up_bricks(L, up_reconstruct(G, T)) != T:
            _fail(f"up_bricks(up_reconstruct(T)) != T for T = {sorted(map(str, T))}")
    for x, D in enumerate(L.elements):
        if reconstruct(G, down_bricks(L, x)) != D:
            _fail(f"reconstruct(down_bricks) is not the identity at element {x}")
        if up_reconstruct(G, up_bricks(L, x)) != D:
            _fail(f"up_reconstruct(up_bricks) is not the identity at element {x}")


def check_greedy_vs_oracle(ctx: Context):
    G = ctx.G
    for T in ctx.faces:
        for c in left_corners(G):
            if phi_L(G, T, c) != phi_L_brute(G, T, c):
                _fail(f"greedy first step differs from its oracle at {c}")
        LT = phi_L_all(G, T)
        for d in seeds(G):
            if psi_L(G, LT, d) != psi_L_brute(G, LT, d):
                _fail(f"greedy second step differs from its oracle at {d}")


def check_cornering(ctx: Context):
    G, L = ctx.G, ctx.L
    for T in ctx.faces:
        LT = phi_L_all(G, T)
        if sigma_L(G, psi_L_all(G, LT)) != LT:
            _fail("sigma_L(psi_L(LT)) != LT")
    for D in L.elements:
        if psi_L_all(G, sigma_L(G, D)) != D:
            _fail("psi_L(sigma_L(D)) != D")
        lowers = [cornering_routes(G, D, c)[0] for c in left_corners(G)]
        uppers = [cornering_routes(G, D, c)[1] for c in left_corners(G)]
        if len(set(lowers)) != len(lowers) or len(set(uppers)) != len(uppers):
            _fail("a route is a cornering route at two different corners")


def check_right_and_dual(ctx: Context):
    G, L = ctx.G, ctx.L
    for x, D in enumerate(L.elements):
        if psi_R(G, phi_R(G, down_bricks(L, x))) != D:
            _fail(f"right reconstruction fails at element {x}")
        if psi_R(G, sigma_R(G, D)) != D:
            _fail(f"psi_R(sigma_R(D)) != D at element {x}")
        LT = sigma_L(G, D)
        if psi_L_dual_all(G, LT) != psi_L_all(G, LT):
            _fail(f"psi_L and its dual disagree as clique maps at element {x}")
        for c in left_corners(G):
            if psi_L(G, LT, c) == psi_L_dual(G, LT, c):
                _fail(f"psi_L and its dual agree at corner {c}")


def check_cube_embedding(ctx: Context):
    G, L = ctx.G, ctx.L
    left = [ccl(G, D) for D in L.elements]
    right = [ccr(G, D) for D in L.elements]
    for a, b, lab in L.hasse:
        diff = [k for k, (x, y) in enumerate(zip(left[a], left[b])) if x != y]
        if len(diff) != 1 or left[a][diff[0]] > left[b][diff[0]]:
            _fail(f"cover {a}<{b} changes left coordinates {left[a]} -> {left[b]}")
        if left_corners(G)[diff[0]] != lab.left:
            _fail(f"cover {a}<{b} changes a coordinate other than its label's corner")
        rdiff = [k for k, (x, y) in enumerate(zip(right[a], right[b])) if x != y]
        if len(rdiff) != 1 or right[a][rdiff[0]] < right[b][rdiff[0]]:
            _fail(f"cover {a}<{b} changes right coordinates {right[a]} -> {right[b]}")
    if any(left[L.bottom]):
        _fail("bottom does not have zero coordinates")


def check_comparison(ctx: Context):
    G, L = ctx.G, ctx.L
    lcb = ctx.lcb
    els = L.elements
    for a in range(len(L)):
        for b in range(len(L)):
            truth = L.leq(a, b)
            if leq_by_coordinates(G, els[a], els[b]) != truth:
                _fail(f"coordinate comparison wrong for {a}, {b}")
            if (lcb[a] <= lcb[b]) != truth:
                _fail(f"left-clockwise inclusion wrong for {a}, {b}")
            if (not_leq_witness(G, els[a], els[b]) is None) != truth:
                _fail(f"clockwise witness wrong for {a}, {b}")


def check_duality(ctx: Context):
    G, L = ctx.G, ctx.L
    Lud = build_lattice(reflect_ud(G))
    f = [Lud.find(D) for D in L.elements]
    _check_anti(L, Lud, f, "up-down")
    Llr = build_lattice(reflect_lr(G))
    g = [Llr.find(frozenset(reflect_route_lr(G, r) for r in D)) for D in L.elements]
    _check_anti(L, Llr, g, "left-right")


def _check_anti(L, M, f, name):
    if sorted(f) != list(range(len(M))) or len(M) != len(L):
        _fail(f"{name} reflection does not biject the cliques")
    for a in range(len(L)):
        for b in range(len(L)):
            if L.leq(a, b) != M.leq(f[b], f[a]):
                _fail(f"{name} reflection is not an anti-isomorphism at {a}, {b}")


def check_rowmotion(ctx: Context):
    rowmotion_orbits(ctx.L)


CHECKS: list[tuple[str, Callable[[Context], None]]] = [
    ("clique sizes and maximality", check_clique_sizes),
    ("flip graph matches clique search", check_flip_graph),
    ("coherence basics", check_coherence_basics),
    ("cover labels", check_cover_labels),
    ("semidistributivity", check_semidistributivity),
    ("canonical join representations", check_canonical_join),
    ("reconstruction round trips", check_round_trips),
    ("greedy steps match oracles", check_greedy_vs_oracle),
    ("left-cornering inverse", check_cornering),
    ("right and dual variants", check_right_and_dual),
    ("cube embedding", check_cube_embedding),
    ("componentwise comparison", check_comparison),
    ("reflection duality", check_duality),
    ("rowmotion bijection", check_rowmotion),
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def run_checks(G: FramedGraph, stop_on_failure: bool = True, route_limit: Optional[int] = None) -> Iterator[CheckResult]:
    t = time.perf_counter()
    try:
        ctx = Context(G, route_limit)
    except InvariantError as exc:
        yield CheckResult("lattice construction", False, str(exc), time.perf_counter() - t)
        return
    yield CheckResult("lattice construction", True, f"{len(ctx.L)} elements", time.perf_counter() - t)
    for name, fn in CHECKS:
        t = time.perf_counter()
        try:
            fn(ctx)
        except InvariantError as exc:
            yield CheckResult(name, False, str(exc), time.perf_counter() - t)
            if stop_on_failure:
                return
        else:
            yield CheckResult(name, True, "", time.perf_counter() - t)


def meet_intersection_witness(G: FramedGraph, L: Optional[FramingLattice] = None):
    """Elements whose meet has fewer or other left-clockwise bricks than the intersection of theirs."""
    L = L or build_lattice(G)
    lcb = [left_clockwise_bricks(G, D, check=False) for D in L.elements]
    for a in range(len(L)):
        for b in range(a + 1, len(L)):
            if lcb[L.meet(a, b)] != lcb[a] & lcb[b]:
                return a, b
    return None
