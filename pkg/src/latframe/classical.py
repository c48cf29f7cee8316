"""Classical lattices inside framing lattices.

* permutations and the weak order on the oruga graph,
* noncrossing arc diagrams as brick cliques of the oruga graph,
* binary trees, right rotations and bracket vectors for the Tamari framing of the caracol graph.

Every classical object here is built from its own definition (inversion sets,
arc crossings, tree rotations), so it can act as an independent check on the
framing-lattice machinery.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .coherence import GRoute, groute, route
from .coords import ccl
from .errors import InvariantError
from .graph import LeftCorner, RightCorner, caracol, oruga
from .lattice import FramingLattice, build_lattice

Perm = tuple[int, ...]


# -- permutations and the weak order ----------------------------------------------

def inversions(pi: Perm) -> frozenset[tuple[int, int]]:
    """Value pairs ``(a, b)`` with ``a < b`` where ``b`` appears before ``a``."""
    pos = {v: k for k, v in enumerate(pi)}
    n = len(pi)
    return frozenset((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if pos[a] > pos[b])


def weak_leq(pi: Perm, sigma: Perm) -> bool:
    return inversions(pi) <= inversions(sigma)


def weak_covers(n: int) -> set[tuple[Perm, Perm]]:
    """Swaps of two adjacent positions holding an ascent; each adds exactly one inversion."""
    out = set()
    for pi in permutations(range(1, n + 1)):
        for k in range(n - 1):
            if pi[k] < pi[k + 1]:
                s = list(pi)
                s[k], s[k + 1] = s[k + 1], s[k]
                out.add((pi, tuple(s)))
    return out


def perm_to_clique(n: int, pi: Perm) -> frozenset[GRoute]:
    """Words ``p_0 .. p_n`` where ``p_k`` goes up exactly at steps ``pi_1 .. pi_k``."""
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{n}")
    G = oruga(n)
    ones: set[int] = set()
    words = []
    for k in range(n + 1):
        if k:
            ones.add(pi[k - 1])
        words.append(route(G, *[("u" if j in ones else "d") + str(j) for j in range(1, n + 1)]))
    return frozenset(words)


def clique_to_perm(n: int, clique) -> Perm:
    ups = sorted((frozenset(int(e[1:]) for e in r.path if e[0] == "u") for r in clique), key=len)
    if [len(u) for u in ups] != list(range(n + 1)):
        raise InvariantError("clique is not a chain of binary words")
    pi = []
    for prev, cur in zip(ups, ups[1:]):
        if not prev < cur:
            raise InvariantError("clique is not a chain of binary words")
        (step,) = cur - prev
        pi.append(step)
    return tuple(pi)


def ccl_weak_formula(n: int, pi: Perm, i: int) -> int:
    """Sum of ``2**(n - j)`` over inversions ``(i, j)``."""
    return sum(2 ** (n - j) for a, j in inversions(pi) if a == i)


def lehmer_code(pi: Perm) -> tuple[int, ...]:
    n = len(pi)
    inv = inversions(pi)
    return tuple(sum(1 for a, _ in inv if a == i) for i in range(1, n + 1))


def lehmer_counterexample(n: int) -> Optional[tuple[Perm, Perm]]:
    """Two permutations with comparable Lehmer codes but incomparable in the weak order.

    Also checks that Lehmer codes change in exactly one entry along weak-order covers.
    """
    for pi, sigma in weak_covers(n):
        a, b = lehmer_code(pi), lehmer_code(sigma)
        if sum(x != y for x, y in zip(a, b)) != 1:
            raise InvariantError(f"Lehmer codes of {pi} < {sigma} differ in more than one entry")
    perms = list(permutations(range(1, n + 1)))
    for pi in perms:
        for sigma in perms:
            a, b = lehmer_code(pi), lehmer_code(sigma)
            if all(x <= y for x, y in zip(a, b)) and not weak_leq(pi, sigma):
                return pi, sigma
    return None


def check_weak_order(n: int, L: Optional[FramingLattice] = None) -> None:
    """Raise unless ``perm_to_clique`` is an order isomorphism from the weak order onto the lattice."""
    G = oruga(n)
    L = L or build_lattice(G)
    perms = list(permutations(range(1, n + 1)))
    image = {}
    for pi in perms:
        D = perm_to_clique(n, pi)
        if D not in L.index:
            raise InvariantError(f"{pi} does not give a maximal clique")
        if clique_to_perm(n, D) != pi:
            raise InvariantError(f"clique_to_perm does not invert perm_to_clique at {pi}")
        image[pi] = L.index[D]
    if len(set(image.values())) != len(L):
        raise InvariantError("perm_to_clique is not a bijection")
    for pi in perms:
        for sigma in perms:
            if weak_leq(pi, sigma) != L.leq(image[pi], image[sigma]):
                raise InvariantError(f"order mismatch at {pi}, {sigma}")
    hasse = {(a, b) for a, b, _ in L.hasse}
    if {(image[p], image[s]) for p, s in weak_covers(n)} != hasse:
        raise InvariantError("weak-order covers differ from Hasse arrows")


# -- arcs -------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Arc:
    start: int
    end: int
    above: tuple[bool, ...]  # one flag per integer strictly between start and end

    def __post_init__(self):
        if not self.start < self.end or len(self.above) != self.end - self.start - 1:
            raise ValueError(f"malformed arc {self}")

    def height(self, k: int) -> int:
        """+1 / -1 when passing above / below ``k``, 0 at an endpoint."""
        if k in (self.start, self.end):
            return 0
        return 1 if self.above[k - self.start - 1] else -1

    def __str__(self) -> str:
        sides = "".join("+" if a else "-" for a in self.above)
        return f"({self.start},{self.end}{':' + sides if sides else ''})"


def all_arcs(n: int) -> list[Arc]:
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for m in range(2 ** (j - i - 1)):
                out.append(Arc(i, j, tuple(bool(m >> b & 1) for b in range(j - i - 1))))
    return out


def arcs_compatible(a: Arc, b: Arc) -> bool:
    """No shared start, no shared end, and a consistent above/below relation where both live."""
    if a.start == b.start or a.end == b.end:
        return False
    lo, hi = max(a.start, b.start), min(a.end, b.end)
    signs = set()
    for k in range(lo, hi + 1):
        ha, hb = a.height(k), b.height(k)
        if ha != hb:
            signs.add(ha > hb)
    return len(signs) <= 1


def noncrossing_diagrams(n: int) -> list[frozenset[Arc]]:
    arcs = all_arcs(n)
    out: list[frozenset[Arc]] = []

    def grow(chosen: list[Arc], rest: list[Arc]):
        out.append(frozenset(chosen))
        for k, a in enumerate(rest):
            grow(chosen + [a], [b for b in rest[k + 1 :] if arcs_compatible(a, b)])

    grow([], arcs)
    return out


def arc_to_brick(n: int, arc: Arc) -> GRoute:
    """Left corner at ``start``, right corner at ``end - 1``, top edge into ``k`` iff the arc passes above ``k``."""
    G = oruga(n)
    i, j = arc.start, arc.end
    path = [("u" if arc.above[k - i - 1] else "d") + str(k) for k in range(i + 1, j)]
    return groute(G, LeftCorner(i, f"u{i}", f"d{i}"), path, RightCorner(j - 1, f"u{j}", f"d{j}"))


def brick_to_arc(n: int, brick: GRoute) -> Arc:
    i = brick.left.apex
    j = brick.right.apex + 1
    return Arc(i, j, tuple(e[0] == "u" for e in brick.path))


# -- binary trees and the Tamari lattice ---------------------------------------------

Tree = Optional[tuple]  # None or (left, right)


def binary_trees(n: int) -> list[Tree]:
    if n == 0:
        return [None]
    out = []
    for k in range(n):
        for left in binary_trees(k):
            for right in binary_trees(n - 1 - k):
                out.append((left, right))
    return out


def tree_size(t: Tree) -> int:
    return 0 if t is None else 1 + tree_size(t[0]) + tree_size(t[1])


def right_rotations(t: Tree) -> list[Tree]:
    """Trees reached by one rotation ``((A, B), C) -> (A, (B, C))`` anywhere in ``t``."""
    if t is None:
        return []
    left, right = t
    out = []
    if left is not None:
        a, b = left
        out.append((a, (b, right)))
    out += [(l2, right) for l2 in right_rotations(left)]
    out += [(left, r2) for r2 in right_rotations(right)]
    return out


def bracket_vector(t: Tree) -> tuple[int, ...]:
    """Right-subtree size of each node, nodes taken in in-order."""
    if t is None:
        return ()
    left, right = t
    return bracket_vector(left) + (tree_size(right),) + bracket_vector(right)


@dataclass
class TamariReport:
    n: int
    size: int
    corner_map: tuple[int, ...]  # corner k of caracol -> bracket-vector index
    order_ok: bool
    vectors_ok: bool
    hasse_ok: bool

    @property
    def passed(self) -> bool:
        return self.order_ok and self.vectors_ok and self.hasse_ok


def tamari_check(n: int) -> TamariReport:
    G = caracol(n)
    L = build_lattice(G)
    vecs = [ccl(G, D) for D in L.elements]
    m = len(vecs[0])

    order_ok = all(
        L.leq(a, b) == all(x <= y for x, y in zip(vecs[a], vecs[b]))
        for a in range(len(L))
        for b in range(len(L))
    )

    trees = binary_trees(n)
    # the last in-order node never has a right subtree, so its entry is dropped
    tvec = {t: bracket_vector(t)[:-1] for t in trees}
    targets = set(tvec.values())
    right_comb = tvec[_right_comb(n)]
    corner_map = None
    for perm in permutations(range(m)):
        moved = lambda v: tuple(v[perm.index(k)] for k in range(m))  # noqa: E731
        if moved(vecs[L.top]) != right_comb:
            continue
        if {moved(v) for v in vecs} == targets:
            corner_map = perm
            break
    vectors_ok = corner_map is not None and len(set(vecs)) == len(vecs) == len(trees)

    hasse_ok = False
    if vectors_ok:
        moved = lambda v: tuple(v[corner_map.index(k)] for k in range(m))  # noqa: E731
        tree_of = {t_vec: t for t, t_vec in tvec.items()}
        elt_tree = [tree_of[moved(v)] for v in vecs]
        lattice_covers = {(elt_tree[a], elt_tree[b]) for a, b, _ in L.hasse}
        rotation_covers = {(t, s) for t in trees for s in right_rotations(t)}
        hasse_ok = lattice_covers == rotation_covers
    return TamariReport(n, len(L), tuple(corner_map or ()), order_ok, vectors_ok, hasse_ok)


def _right_comb(n: int) -> Tree:
    t = None
    for _ in range(n):
        t = (None, t)
    return t
