#!/usr/bin/env python3
"""Run the cross-solver benchmark grid and write a CSV.

Usage: python scripts/run_bench.py [out.csv]

Edit the configs below to change the grid; every row asserts that all
applicable solvers returned the same value.
"""

import sys

from posetdist import BenchConfig, bench_harness, rows_to_csv

CONFIGS = [
    BenchConfig(kind="wso", sizes=(4, 6, 8), trials=5, labels=3, density=0.5, seed=100),
    BenchConfig(kind="closure", sizes=(4, 6, 8), trials=5, labels=3, density=0.4, seed=200),
    BenchConfig(kind="path-closure", sizes=(6, 8, 10), trials=5, labels=3, density=0.3, seed=300),
]


def main() -> None:
    rows = []
    for config in CONFIGS:
        print(f"kind={config.kind} sizes={config.sizes} trials={config.trials}", file=sys.stderr)
        rows.extend(bench_harness(config))
    text = rows_to_csv(rows)
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {sys.argv[1]}", file=sys.stderr)
    else:
        print(text, end="")


if __name__ == "__main__":
    main()
