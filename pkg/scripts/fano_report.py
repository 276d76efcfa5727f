#!/usr/bin/env python3
"""Survey the three del Pezzo families: expected dimensions, flip regimes
and shapes, and the codimension identity grid."""

import argparse

from flipcheck import fano
from flipcheck.fano import Family


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--k-max", type=int, default=4)
    args = parser.parse_args()

    for family in (Family.CUBIC, Family.TWO_QUADRICS):
        print(f"== {family} ==")
        for k in range(args.k_max + 1):
            cells = []
            for n in range(max(k, 1), args.n_max + 1):
                regime = fano.emptiness_threshold(family, n, k)
                report = fano.verify_codim_identity(family, n, k)
                mark = {"nonempty_expected": "flip",
                        "F_k_empty": "empty",
                        "F_k1_empty_flip_degenerates": "iso"}[str(regime)]
                cells.append(f"n={n}:{mark}{'' if report.passed else '!'}")
            shape = fano.flip_shapes(family, args.n_max, k)[0]
            print(f"  k={k} (r={shape.r}): " + " ".join(cells))

    print("== gr25 ==")
    for n in range(2, 7):
        row = fano.gr25_dim_row(n)
        print(f"  dim X={n}: F1={row.f1} F2s={row.f2_sigma} "
              f"F2t={row.f2_tau} F3={row.f3}")
    for n, k in [(n, k) for k in (0, 1) for n in range(2, 7)]:
        try:
            report = fano.verify_codim_identity(Family.GR25_SECTION, n, k)
        except ValueError:
            continue
        status = "pass" if report.passed else "FAIL"
        print(f"  codim identity n={n} k={k}: {status}")


if __name__ == "__main__":
    main()
