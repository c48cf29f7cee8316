"""Compare caracol(n) framing lattices with the Tamari lattice on binary trees."""
import argparse

from latframe.classical import tamari_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print(f"{'n':>3}{'size':>6}  order  vectors  hasse  corner map")
    for n in range(2, args.max_n + 1):
        r = tamari_check(n)
        print(f"{n:>3}{r.size:>6}  {r.order_ok!s:<5}  {r.vectors_ok!s:<7}  {r.hasse_ok!s:<5}  {r.corner_map}")


if __name__ == "__main__":
    main()
