#!/usr/bin/env python3
"""Motif closing ratios of a graph versus the random-graph chance level.

Prints, for each of the three almost-2-simplex shapes, the completed
fraction (plain and strict) next to 2*p_e - p_e**2.

Example:
    python scripts/motif_ratios.py data/network.edges
    python scripts/motif_ratios.py --n 200 --m 1990 --seed 3
"""

import argparse
import sys

from simplicia import census_motifs, generate_er, parse_graph


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input", nargs="?", help="edge-list file")
    parser.add_argument("--n", type=int, default=200)
    parser.add_argument("--m", type=int, default=1990)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            g = parse_graph(fh.read())
    else:
        g = generate_er(args.n, args.m, args.seed)
    report = census_motifs(g, threads=args.threads)
    chance = report.chance
    print(f"graph: n={g.n} m={g.edge_count} p_e={float(report.edge_density):.4f}")
    print(f"chance level 2p-p^2 = {float(chance):.4f}")
    print(f"{'motif':>10} {'total':>10} {'ratio':>8} {'strict total':>13} {'strict ratio':>13}")
    for kind in ("divergent", "chain", "convergent"):
        counts = report.kind(kind)
        ratio = f"{float(counts.ratio):.4f}" if counts.ratio is not None else "-"
        strict = f"{float(counts.strict_ratio):.4f}" if counts.strict_ratio is not None else "-"
        print(f"{kind:>10} {counts.total:>10} {ratio:>8} {counts.strict_total:>13} {strict:>13}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
