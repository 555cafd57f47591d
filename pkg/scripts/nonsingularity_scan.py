#!/usr/bin/env python3
"""Scan a genus range: system order, determinant nonvanishing, and whether
Q_g * T_g comes out lower-triangular, with timings."""

from __future__ import annotations

import argparse
import time

from bn2.basis import basis_dimension
from bn2.relations import build_matrix, build_T, triangularity_report
from bn2.solver import det_is_nonzero


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--g-min", type=int, default=6)
    parser.add_argument("--g-max", type=int, default=16)
    args = parser.parse_args()

    for g in range(args.g_min, args.g_max + 1):
        start = time.perf_counter()
        q = build_matrix(g)
        nonzero = det_is_nonzero(q)
        det_t = time.perf_counter() - start
        start = time.perf_counter()
        tri = triangularity_report(q, build_T(g))
        tri_t = time.perf_counter() - start
        print(
            f"g={g:2d} order={basis_dimension(g):3d} det!=0: {nonzero} ({det_t:.2f}s)  "
            f"QT triangular: {tri.ok} ({tri_t:.2f}s)"
        )


if __name__ == "__main__":
    main()
