#!/usr/bin/env python3
"""Print Hilbert-square Hodge data for the built-in varieties and a genus
sweep of symmetric squares of curves."""

import argparse

from flipcheck import hodge, varieties


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-genus", type=int, default=6)
    args = parser.parse_args()

    for name in ("quartic-double-solid", "degree2-del-pezzo-surface", "p2"):
        d = varieties.builtin(name)
        h = hodge.hilbert_square(d)
        print(f"{name}: dim {d.dim} -> X^[2] of dim {h.dim}")
        print(f"  diagonal: {hodge.diagonal(h)}")
        print(f"  hh0 = {hodge.hh0(h)},  e = {hodge.euler(h)}")

    print()
    print("Sym^2 of genus-g curves: h^{2,0} = g(g-1)/2, h^{1,1} = g^2 + 1")
    print(f"{'g':>3} {'h20':>6} {'h11':>6} {'hh0':>6} {'euler':>6}")
    for g in range(args.max_genus + 1):
        s = hodge.sym2(varieties.curve(g))
        print(f"{g:>3} {s.hodge(2, 0):>6} {s.hodge(1, 1):>6} "
              f"{hodge.hh0(s):>6} {hodge.euler(s):>6}")


if __name__ == "__main__":
    main()
