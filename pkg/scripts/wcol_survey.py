"""Per-instance sizes behind the clustering and colouring bounds on the
seeded sparse corpus: wcol profile, block counts, palettes and col/omega."""

import argparse
import json
import statistics

from sparse_powers.cliques import clique_number
from sparse_powers.clustering import build_clustering
from sparse_powers.corpus import sparse_corpus
from sparse_powers.graph import power
from sparse_powers.orderings import coloring_number, degeneracy_ordering, wcol_profile
from sparse_powers.subcoloring import subcolor_via_quotient, xi_subcolor


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=60)
    ap.add_argument("--size", type=int, default=120)
    ap.add_argument("--d", type=int, default=2)
    args = ap.parse_args()
    d = args.d

    ratios = []
    for inst in sparse_corpus(args.count, args.seed, args.size):
        g = inst.graph
        order, _ = degeneracy_ordering(g)
        prof = wcol_profile(g, order, [1, d, 2 * d])
        gd = power(g, d)
        omega = clique_number(gd)
        col = coloring_number(gd)
        ratios.append(col / omega)
        print(
            json.dumps(
                {
                    "instance": inst.name,
                    "n": g.n,
                    "wcol": prof,
                    "blocks": build_clustering(g, order, d).size,
                    "quotient_palette": subcolor_via_quotient(g, order, d).palette,
                    "xi_palette": xi_subcolor(g, order, d).palette,
                    "omega_power": omega,
                    "col_power": col,
                }
            ),
            flush=True,
        )
    print(json.dumps({"col_over_omega": {"max": max(ratios), "mean": statistics.mean(ratios)}}))


if __name__ == "__main__":
    main()
