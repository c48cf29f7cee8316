"""Rowmotion orbit sizes on oruga and caracol framing lattices."""
import argparse
from collections import Counter

from latframe.bricks import rowmotion_orbits
from latframe.graph import caracol, oruga
from latframe.lattice import build_lattice


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-oruga", type=int, default=4)
    ap.add_argument("--max-caracol", type=int, default=5)
    args = ap.parse_args()
    graphs = [(f"oruga({n})", oruga(n)) for n in range(2, args.max_oruga + 1)]
    graphs += [(f"caracol({n})", caracol(n)) for n in range(2, args.max_caracol + 1)]
    for name, G in graphs:
        L = build_lattice(G)
        sizes = Counter(len(o) for o in rowmotion_orbits(L))
        shown = ", ".join(f"{k}x{v}" for k, v in sorted(sizes.items()))
        print(f"{name:<12} {len(L):>5} elements  orbits {shown}")


if __name__ == "__main__":
    main()
