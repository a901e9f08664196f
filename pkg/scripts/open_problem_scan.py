#!/usr/bin/env python3
"""Experimental: scan for pairs where gp(G x H) != gp(G) gp(H) (strong product).

Whether equality always holds is open; this scan is exploratory and is not
part of the verified statement catalog.  Exact solvers only, so keep the
product order modest.

Usage:
    python scripts/open_problem_scan.py --max-n 4
    python scripts/open_problem_scan.py --max-n 5 --product-cap 20
"""

import argparse
import sys

from genpos.graph6 import write_graph6
from genpos.graphs import all_pairs_distances
from genpos.positions import max_gp_oracle
from genpos.products import strong_product
from genpos.statements import enumerate_connected


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--product-cap", type=int, default=16)
    args = ap.parse_args()

    graphs = []
    for n in range(args.min_n, args.max_n + 1):
        graphs.extend(enumerate_connected(n))
    gp = {}
    for g in graphs:
        gp[g] = max_gp_oracle(all_pairs_distances(g))[0]

    checked = 0
    gaps = 0
    for i, g in enumerate(graphs):
        for h in graphs[i:]:
            if g.n * h.n > args.product_cap:
                continue
            prod = strong_product(g, h).graph
            val = max_gp_oracle(all_pairs_distances(prod))[0]
            checked += 1
            if val != gp[g] * gp[h]:
                gaps += 1
                print(f"gap: {write_graph6(g)} x {write_graph6(h)}: "
                      f"gp(product)={val}, gp(G)gp(H)={gp[g] * gp[h]}")
    print(f"{checked} pairs checked, {gaps} with gp(product) != gp(G)gp(H)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
