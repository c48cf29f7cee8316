"""Maximal cliques of routes and the framing lattice they form.

Elements are frozensets of routes.  Cliques come from a pivoting Bron-Kerbosch
search on the coherence graph, which knows nothing about rotations; the Hasse
diagram is then built from adjacent cliques.  Order queries go through per-element
bitsets (python ints), with elements indexed along a linear extension so that the
least upper bound candidate of a set is simply its lowest bit.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .coherence import (
    GRoute,
    are_coherent,
    conflict_subroutes,
    groute,
    route,
    enumerate_routes,
    is_clockwise_at,
    route_key,
)
from .errors import InvariantError, RouteLimitError
from .graph import FramedGraph, LeftCorner, RightCorner

Clique = frozenset  # of GRoute

DEFAULT_ROUTE_LIMIT = 4096


def coherence_graph(G: FramedGraph, routes) -> list[set[int]]:
    nbrs: list[set[int]] = [set() for _ in routes]
    for i in range(len(routes)):
        for j in range(i + 1, len(routes)):
            if are_coherent(G, routes[i], routes[j]):
                nbrs[i].add(j)
                nbrs[j].add(i)
    return nbrs


def bron_kerbosch(nbrs: list[set[int]]) -> list[frozenset[int]]:
    """All maximal cliques of a graph given as adjacency sets (Tomita pivoting)."""
    out: list[frozenset[int]] = []

    def expand(R, P, X):
        if not P and not X:
            out.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: len(P & nbrs[u]))
        for v in list(P - nbrs[pivot]):
            expand(R | {v}, P & nbrs[v], X & nbrs[v])
            P = P - {v}
            X = X | {v}

    expand(set(), set(range(len(nbrs))), set())
    return out


def _check_limit(G, routes, route_limit):
    if route_limit is not None and len(routes) > route_limit:
        raise RouteLimitError(f"{len(routes)} routes exceed the limit of {route_limit}")


@lru_cache(maxsize=64)
def maximal_cliques(G: FramedGraph, route_limit: Optional[int] = DEFAULT_ROUTE_LIMIT) -> tuple[Clique, ...]:
    routes = enumerate_routes(G)
    _check_limit(G, routes, route_limit)
    found = []
    for idx in bron_kerbosch(coherence_graph(G, routes)):
        if len(idx) != G.clique_size:
            raise InvariantError(f"maximal clique of size {len(idx)}, expected {G.clique_size}")
        found.append(frozenset(routes[i] for i in idx))
    return tuple(sorted(found, key=lambda c: clique_key(G, c)))


def clique_key(G: FramedGraph, clique) -> tuple:
    return tuple(sorted(route_key(G, r) for r in clique))


def sorted_clique(G: FramedGraph, clique) -> list[GRoute]:
    return sorted(clique, key=lambda r: route_key(G, r))


def flip_graph_cliques(G: FramedGraph, start: Clique) -> set[Clique]:
    """Every clique reachable from ``start`` by exchanging one route at a time."""
    routes = enumerate_routes(G)
    seen = {start}
    queue = deque([start])
    while queue:
        D = queue.popleft()
        for r in D:
            rest = D - {r}
            for r2 in routes:
                if r2 in D:
                    continue
                if all(are_coherent(G, r2, q) for q in rest):
                    E = rest | {r2}
                    if E not in seen:
                        seen.add(E)
                        queue.append(E)
    return seen


def adjacent(G: FramedGraph, D: Clique, E: Clique):
    """``(r, r2, conflict)`` when the cliques share all but one route, else ``None``.

    ``r`` is the route of ``D`` missing from ``E``; ``conflict`` is
    ``(edges, start vertex, end vertex)``.
    """
    only_d = D - E
    only_e = E - D
    if len(only_d) != 1 or len(only_e) != 1:
        return None
    (r,) = only_d
    (r2,) = only_e
    subs = conflict_subroutes(G, r, r2)
    if len(subs) != 1:
        raise InvariantError(f"{r} and {r2} have {len(subs)} subroutes of conflict")
    sub = subs[0]
    common = D & E
    for x, y in ((r, r2), (r2, r)):
        rec = _recombine(G, x, y, sub)
        if rec not in common:
            raise InvariantError(f"recombination {rec} of {x} and {y} is not in both cliques")
    return r, r2, sub


def _split(r: GRoute, sub):
    """Prefix edges before the conflict start and suffix edges after its end."""
    _, a, b = sub
    i = r.vertices.index(a)
    j = r.vertices.index(b)
    return r.path[:i], r.path[j:]


def _recombine(G, x, y, sub):
    px, _ = _split(x, sub)
    _, sy = _split(y, sub)
    return route(G, *(px + sub[0] + sy))


def cover_label_from(G: FramedGraph, r: GRoute, r2: GRoute, sub) -> GRoute:
    """Brick ``c1 · s · c2`` for the exchange of ``r`` and ``r2`` along ``s``."""
    edges, a, b = sub
    p, s = _split(r, sub)
    p2, s2 = _split(r2, sub)
    if not p or not p2 or not s or not s2:
        raise InvariantError("conflict subroute touches a source or a sink")
    e, e2 = sorted((p[-1], p2[-1]), key=lambda x: G.in_position(a, x))
    if G.in_position(a, e2) - G.in_position(a, e) != 1:
        raise InvariantError(f"{e}, {e2} are not consecutive at {a}")
    f, f2 = sorted((s[0], s2[0]), key=lambda x: G.out_position(b, x))
    if G.out_position(b, f2) - G.out_position(b, f) != 1:
        raise InvariantError(f"{f}, {f2} are not consecutive at {b}")
    return groute(G, LeftCorner(a, e, e2), edges, RightCorner(b, f, f2))


def cover_label(G: FramedGraph, lower: Clique, upper: Clique) -> GRoute:
    adj = adjacent(G, lower, upper)
    if adj is None:
        raise ValueError("cliques are not adjacent")
    r, r2, sub = adj
    if not is_clockwise_at(G, r, r2, sub[1]):
        raise ValueError("first clique is not below the second")
    return cover_label_from(G, r, r2, sub)


@dataclass
class FramingLattice:
    graph: FramedGraph
    elements: list[Clique]
    hasse: list[tuple[int, int, GRoute]]
    up: list[int]  # bitset of elements >= i
    down: list[int]  # bitset of elements <= i
    lower_covers: list[list[tuple[int, GRoute]]] = field(default_factory=list)
    upper_covers: list[list[tuple[int, GRoute]]] = field(default_factory=list)
    index: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def join(self, a: int, b: int) -> int:
        ub = self.up[a] & self.up[b]
        j = (ub & -ub).bit_length() - 1
        if j < 0 or self.up[j] != ub:
            raise InvariantError(f"elements {a} and {b} have no least upper bound")
        return j

    def meet(self, a: int, b: int) -> int:
        lb = self.down[a] & self.down[b]
        m = lb.bit_length() - 1
        if m < 0 or self.down[m] != lb:
            raise InvariantError(f"elements {a} and {b} have no greatest lower bound")
        return m

    def join_all(self, xs) -> int:
        acc = self.bottom
        for x in xs:
            acc = self.join(acc, x)
        return acc

    def meet_all(self, xs) -> int:
        acc = self.top
        for x in xs:
            acc = self.meet(acc, x)
        return acc

    def find(self, clique) -> int:
        return self.index[frozenset(clique)]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_lattice(G: FramedGraph, route_limit: Optional[int] = DEFAULT_ROUTE_LIMIT) -> FramingLattice:
    cliques = list(maximal_cliques(G, route_limit))
    # adjacent cliques share a (k-1)-subset
    by_facet: dict[frozenset, list[int]] = defaultdict(list)
    for i, D in enumerate(cliques):
        for r in D:
            by_facet[D - {r}].append(i)
    arrows: list[tuple[int, int, GRoute]] = []
    for members in by_facet.values():
        if len(members) > 2:
            raise InvariantError("a facet is shared by more than two maximal cliques")
        if len(members) == 2:
            i, j = members
            r, r2, sub = adjacent(G, cliques[i], cliques[j])
            if is_clockwise_at(G, r, r2, sub[1]):
                arrows.append((i, j, cover_label_from(G, r, r2, sub)))
            elif is_clockwise_at(G, r2, r, sub[1]):
                arrows.append((j, i, cover_label_from(G, r2, r, sub)))
            else:
                raise InvariantError("adjacent cliques with no clockwise exchange")

    # longest-path levels give a linear extension
    n = len(cliques)
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b, _ in arrows:
        succ[a].append(b)
        indeg[b] += 1
    level = [0] * n
    queue = deque(i for i in range(n) if indeg[i] == 0)
    order = []
    while queue:
        a = queue.popleft()
        order.append(a)
        for b in succ[a]:
            level[b] = max(level[b], level[a] + 1)
            indeg[b] -= 1
            if indeg[b] == 0:
                queue.append(b)
    if len(order) != n:
        raise InvariantError("rotation digraph has a cycle")
    keys = [clique_key(G, c) for c in cliques]
    perm = sorted(range(n), key=lambda i: (level[i], keys[i]))
    new = {old: k for k, old in enumerate(perm)}
    elements = [cliques[i] for i in perm]
    hasse = sorted((new[a], new[b], lab) for a, b, lab in arrows)

    lower = [[] for _ in range(n)]
    upper = [[] for _ in range(n)]
    for a, b, lab in hasse:
        upper[a].append((b, lab))
        lower[b].append((a, lab))
    up = [0] * n
    for a in reversed(range(n)):
        m = 1 << a
        for b, _ in upper[a]:
            m |= up[b]
        up[a] = m
    down = [0] * n
    for a in range(n):
        m = 1 << a
        for b, _ in lower[a]:
            m |= down[b]
        down[a] = m

    L = FramingLattice(G, elements, hasse, up, down, lower, upper, {c: i for i, c in enumerate(elements)})
    _check_lattice(L)
    return L


def _check_lattice(L: FramingLattice) -> None:
    n = len(L)
    full = (1 << n) - 1
    if L.up[0] != full or L.down[n - 1] != full:
        raise InvariantError("no unique bottom/top")
    # Hasse arrows must be exactly the transitive reduction
    for a, b, _ in L.hasse:
        via = 0
        for c, _ in L.upper_covers[a]:
            if c != b:
                via |= L.up[c]
        if via >> b & 1:
            raise InvariantError(f"arrow {a}->{b} is implied by a longer chain")
    for a in range(n):
        for b in range(a + 1, n):
            L.join(a, b)
            L.meet(a, b)


def leq(L: FramingLattice, a: int, b: int) -> bool:
    return L.leq(a, b)


def join(L: FramingLattice, a: int, b: int) -> int:
    return L.join(a, b)


def meet(L: FramingLattice, a: int, b: int) -> int:
    return L.meet(a, b)


def lattice_of(G: FramedGraph) -> FramingLattice:
    """Memoized ``build_lattice`` for callers that only need the default route limit."""
    return _lattice_cached(G)


@lru_cache(maxsize=32)
def _lattice_cached(G: FramedGraph) -> FramingLattice:
    return build_lattice(G)


# -- semidistributivity and canonical join representations ---------------------

def check_semidistributive(L: FramingLattice) -> bool:
    """Join- and meet-semidistributivity.

    For fixed ``x`` the elements ``y`` with a given ``x v y`` must be closed under
    meets; that is equivalent to the usual triple condition and only needs the
    meet of each class.
    """
    n = len(L)
    for x in range(n):
        joins: dict[int, int] = {}
        meets: dict[int, int] = {}
        for y in range(n):
            j = L.join(x, y)
            joins[j] = L.meet(joins[j], y) if j in joins else y
            m = L.meet(x, y)
            meets[m] = L.join(meets[m], y) if m in meets else y
        for j, low in joins.items():
            if L.join(x, low) != j:
                return False
        for m, high in meets.items():
            if L.meet(x, high) != m:
                return False
    return True


def check_semidistributive_triples(L: FramingLattice) -> bool:
    """Literal triple-by-triple definition; cubic, for cross-checking on small lattices."""
    n = len(L)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if L.join(x, y) == L.join(x, z) and L.join(x, L.meet(y, z)) != L.join(x, y):
                    return False
                if L.meet(x, y) == L.meet(x, z) and L.meet(x, L.join(y, z)) != L.meet(x, y):
                    return False
    return True


def join_irreducibles(L: FramingLattice) -> list[int]:
    return [x for x in range(len(L)) if len(L.lower_covers[x]) == 1]


def cover_join_label(L: FramingLattice, y: int, x: int) -> int:
    """The unique minimal ``j`` with ``j v y = x`` for a cover ``y < x``."""
    cands = [j for j in _bits(L.down[x]) if L.join(j, y) == x]
    cmask = sum(1 << j for j in cands)
    minimal = [j for j in cands if L.down[j] & cmask == 1 << j]
    if len(minimal) != 1:
        raise InvariantError(f"cover {y} < {x} has {len(minimal)} minimal join labels")
    return minimal[0]


def canonical_join_representation(L: FramingLattice, x: int) -> frozenset[int]:
    reps = frozenset(cover_join_label(L, y, x) for y, _ in L.lower_covers[x])
    for j in reps:
        if len(L.lower_covers[j]) != 1:
            raise InvariantError(f"cover label {j} is not join-irreducible")
    if reps and L.join_all(reps) != x:
        raise InvariantError(f"canonical joinands of {x} do not join to it")
    return reps


# -- export -------------------------------------------------------------------------

def to_dot(L: FramingLattice, coords=None) -> str:
    lines = ["digraph framing_lattice {", "  rankdir=BT;"]
    for i in range(len(L)):
        label = str(i)
        if coords is not None:
            label += " (" + ",".join(map(str, coords[i])) + ")"
        lines.append(f'  n{i} [label="{label}"];')
    for a, b, lab in L.hasse:
        lines.append(f'  n{a} -> n{b} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
