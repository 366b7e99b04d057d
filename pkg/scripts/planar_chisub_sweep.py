"""Exact subchromatic number of the square of the planar tree-plus-gadget
family over a small (branching, depth) grid."""

import argparse
import json
import time

from sparse_powers.gadgets import planar_subchromatic_family
from sparse_powers.graph import power
from sparse_powers.orderings import degeneracy_ordering, wcol_of_ordering
from sparse_powers.subcoloring import exact_subchromatic, subcolor_via_quotient, xi_subcolor


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-branching", type=int, default=3)
    ap.add_argument("--max-depth", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=45, help="skip the exact oracle above this size")
    args = ap.parse_args()

    rows = []
    for b in range(1, args.max_branching + 1):
        for h in range(1, args.max_depth + 1):
            out = planar_subchromatic_family(b, h)
            g = out.graph
            order, _ = degeneracy_ordering(g)
            row = {
                "branching": b,
                "depth": h,
                "n": g.n,
                "planar": out.planar,
                "wcol4": wcol_of_ordering(g, order, 4),
                "quotient_palette": subcolor_via_quotient(g, order, 2).palette,
                "xi_palette": xi_subcolor(g, order, 2).palette,
                "chi_sub": None,
            }
            if g.n <= args.max_vertices:
                t = time.perf_counter()
                row["chi_sub"] = exact_subchromatic(power(g, 2), limit=g.n)
                row["oracle_s"] = round(time.perf_counter() - t, 2)
            rows.append(row)
            print(json.dumps(row), flush=True)


if __name__ == "__main__":
    main()
