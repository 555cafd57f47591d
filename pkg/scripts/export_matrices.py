#!/usr/bin/env python3
"""Dump the relation system Q_g, its right-hand side at k = g/2 (even g),
and the triangularizing matrix T_g into an output directory."""

from __future__ import annotations

import argparse
from pathlib import Path

from bn2.relations import (
    build_relations,
    system_to_csv,
    system_to_json,
    t_matrix_to_csv,
    t_matrix_to_json,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--g", type=int, required=True, help="genus")
    parser.add_argument("--outdir", default="exports", help="output directory")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    system = build_relations(args.g)
    k = args.g // 2 if args.g % 2 == 0 else None

    (outdir / f"q{args.g}.csv").write_text(system_to_csv(system, k), encoding="utf-8")
    (outdir / f"q{args.g}.json").write_text(system_to_json(system, k), encoding="utf-8")
    if args.g >= 6:
        (outdir / f"t{args.g}.csv").write_text(t_matrix_to_csv(args.g), encoding="utf-8")
        (outdir / f"t{args.g}.json").write_text(t_matrix_to_json(args.g), encoding="utf-8")
    print(f"wrote exports for g={args.g} to {outdir}/")


if __name__ == "__main__":
    main()
