#!/usr/bin/env python3
"""Distance between two ~40-node path-closure instances with a small
label alphabet, the largest workload the chain-aware solver targets.

Usage: python scripts/scale_demo.py [nodes] [labels] [seed]
"""

import sys
import time

from posetdist import Solver, d_e, generate_instance


def main() -> None:
    nodes = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    labels = int(sys.argv[2]) if len(sys.argv) > 2 else 6
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 2024
    g = generate_instance("path-closure", nodes, labels, 0.15, seed)
    g2 = generate_instance("path-closure", nodes, labels, 0.15, seed + 1)
    print(f"first:  {len(g.nodes)} nodes, {len(g.edges)} edges")
    print(f"second: {len(g2.nodes)} nodes, {len(g2.edges)} edges")
    start = time.perf_counter()
    result = d_e(g, g2, solver=Solver.ALG3)
    elapsed = time.perf_counter() - start
    print(f"dmces    {result.dmces_value} / {result.normalizer}")
    print(f"distance {result.distance} (~{float(result.distance):.4f})")
    print(f"elapsed  {elapsed:.2f}s")


if __name__ == "__main__":
    main()
