"""Size and invariant-check summary for every graph of the standard corpus."""
import argparse
import time

from latframe.checks import run_checks
from latframe.coherence import enumerate_bricks, enumerate_routes
from latframe.corpus import standard_corpus
from latframe.lattice import build_lattice


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=50, help="number of random graphs")
    args = ap.parse_args()

    print(f"{'graph':<22}{'routes':>7}{'bricks':>7}{'elems':>7}{'covers':>7}{'secs':>7}  verdict")
    total = time.perf_counter()
    for name, G in standard_corpus(args.random):
        t = time.perf_counter()
        results = list(run_checks(G))
        bad = [r for r in results if not r.passed]
        L = build_lattice(G)
        verdict = "ok" if not bad else f"FAIL {bad[0].name}: {bad[0].detail}"
        print(
            f"{name:<22}{len(enumerate_routes(G)):>7}{len(enumerate_bricks(G)):>7}"
            f"{len(L):>7}{len(L.hasse):>7}{time.perf_counter() - t:>7.2f}  {verdict}"
        )
    print(f"total {time.perf_counter() - total:.1f}s")


if __name__ == "__main__":
    main()
