"""Run the invariant suite on larger seeded random graphs."""
import argparse
import time

from latframe.checks import run_checks
from latframe.corpus import RandomGraphConfig, random_corpus
from latframe.graph import serialize_framed_graph
from latframe.lattice import build_lattice


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--vertices", type=int, default=7)
    ap.add_argument("--edges", type=int, default=12)
    ap.add_argument("--max-routes", type=int, default=256)
    ap.add_argument("--start-seed", type=int, default=1000)
    args = ap.parse_args()
    cfg = RandomGraphConfig(args.vertices, args.edges, 2, args.max_routes)
    for name, G in random_corpus(args.count, cfg, args.start_seed):
        t = time.perf_counter()
        bad = next((r for r in run_checks(G) if not r.passed), None)
        size = len(build_lattice(G))
        print(f"{name:<24}{size:>6} elements {time.perf_counter() - t:>7.2f}s  {'ok' if bad is None else 'FAIL'}", flush=True)
        if bad is not None:
            print(f"{bad.name}: {bad.detail}")
            print(serialize_framed_graph(G))
            return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
