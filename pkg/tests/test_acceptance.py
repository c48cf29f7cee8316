"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS`` / ``FAIL`` line.  Run with
``pytest tests/test_acceptance.py -v`` or directly with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time
from contextlib import nullcontext
from functools import lru_cache
from itertools import permutations

import pytest

from latframe import checks
from latframe.classical import (
    ccl_weak_formula,
    check_weak_order,
    inversions,
    lehmer_code,
    lehmer_counterexample,
    perm_to_clique,
    tamari_check,
    weak_leq,
)
from latframe.coherence import enumerate_bricks
from latframe.coords import ccl, left_clockwise_at
from latframe.corpus import standard_corpus
from latframe.errors import InvariantError
from latframe.graph import caracol, left_corners, oruga
from latframe.lattice import build_lattice

_capsys = None


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f"  ({detail})" if detail else "")
    with _capsys.disabled() if _capsys is not None else nullcontext():
        print("\n" + line)
    assert ok, line


@pytest.fixture(autouse=True)
def _show(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


@lru_cache(maxsize=None)
def contexts():
    t = time.perf_counter()
    out = [(name, checks.Context(G)) for name, G in standard_corpus(50)]
    return out, time.perf_counter() - t


def run_on_corpus(*fns):
    ctxs, build = contexts()
    t = time.perf_counter()
    for name, ctx in ctxs:
        for fn in fns:
            try:
                fn(ctx)
            except InvariantError as exc:
                return False, f"{name}: {exc}", build + time.perf_counter() - t
    return True, f"{len(ctxs)} graphs", build + time.perf_counter() - t


def test_criterion_1_counts():
    t = time.perf_counter()
    got = []
    for n in (2, 3, 4, 5):
        L = build_lattice(oruga(n))
        got.append((len(L), {len(D) for D in L.elements}, len(enumerate_bricks(oruga(n)))))
    elapsed = time.perf_counter() - t
    want = [(2, {3}, 1), (6, {4}, 4), (24, {5}, 11), (120, {6}, 26)]
    car = []
    for n in (2, 3):
        G = caracol(n)
        L = build_lattice(G)
        car.append({len(D) for D in L.elements} == {len(G.edges) - G.n + 2})
    ok = got == want and all(car) and caracol(3).clique_size == 5 and elapsed < 30
    report(1, "oruga and caracol counts", ok, f"oruga(2..5) in {elapsed:.2f}s")


def test_criterion_2_round_trips():
    ok, detail, elapsed = run_on_corpus(checks.check_round_trips)
    report(2, "down/up brick round trips", ok and elapsed < 60, f"{detail}, {elapsed:.1f}s")


def test_criterion_3_greedy_vs_oracle():
    ok, detail, _ = run_on_corpus(checks.check_greedy_vs_oracle)
    report(3, "greedy reconstruction equals brute-force extremum", ok, detail)


def test_criterion_4_cornering_inverse():
    ok, detail, _ = run_on_corpus(checks.check_cornering)
    report(4, "cornering map inverts the second step", ok, detail)


def test_criterion_5_cube_embedding():
    ok, detail, _ = run_on_corpus(checks.check_cube_embedding)
    report(5, "covers change one left coordinate upward", ok, detail)


def _ideal_and_counts(ctx):
    G = ctx.G
    for D in ctx.L.elements:
        v = ccl(G, D)
        for c, x in zip(left_corners(G), v):
            # raises on a broken characterization, ideal or count
            if len(left_clockwise_at(G, D, c, check=True)) != x:
                raise InvariantError(f"count differs from coordinate at {c}")


def test_criterion_6_comparison():
    ok, detail, _ = run_on_corpus(checks.check_comparison, _ideal_and_counts)
    report(6, "coordinates, reachability and left-clockwise inclusion agree", ok, detail)


def test_criterion_7_lattice_theory():
    ok, detail, _ = run_on_corpus(checks.check_semidistributivity, checks.check_canonical_join)
    report(7, "semidistributive, canonical joins are down bricks", ok, detail)


def test_criterion_8_classical_models():
    problems = []
    for n in (2, 3, 4):
        try:
            check_weak_order(n)
        except InvariantError as exc:
            problems.append(f"weak order {n}: {exc}")
        G = oruga(n)
        for pi in permutations(range(1, n + 1)):
            if ccl(G, perm_to_clique(n, pi)) != tuple(ccl_weak_formula(n, pi, i) for i in range(1, n)):
                problems.append(f"formula at {pi}")
    if ccl(oruga(3), perm_to_clique(3, (3, 2, 1))) != (3, 1):
        problems.append("321")
    pair = lehmer_counterexample(3) or lehmer_counterexample(4)
    if pair is None or weak_leq(*pair) or inversions(pair[0]) <= inversions(pair[1]):
        problems.append("no Lehmer counterexample")
    elif not all(a <= b for a, b in zip(lehmer_code(pair[0]), lehmer_code(pair[1]))):
        problems.append("Lehmer pair not comparable")
    for n in (2, 3):
        rep = tamari_check(n)
        if not rep.passed:
            problems.append(f"tamari {n}: {rep}")
    report(8, "weak order, inversion formula, Lehmer witness, Tamari", not problems, "; ".join(problems) or f"witness {pair}")


def test_criterion_9_duality_and_dynamics():
    ok, detail, _ = run_on_corpus(checks.check_duality, checks.check_rowmotion, checks.check_right_and_dual)
    report(9, "reflections anti-isomorphic, rowmotion bijective, dual second step", ok, detail)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
