"""Seeded batch checks of every construction against its guarantee.

Each suite returns a plain dict: per-instance records (sorted by id) plus a
list of named assertions with violation counts. Nothing in the output depends
on timing or worker count, so equal arguments give equal reports.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .cliques import (
    apx_clique,
    bron_kerbosch,
    clique_number,
    enumerate_maximal_cliques_semiladder,
    is_clique,
    is_maximal_clique,
    semi_ladder_index,
)
from .clustering import build_clustering, verify_clustering_bound
from .corpus import random_sparse, random_tree, sparse_corpus
from .gadgets import (
    claimed_cliques,
    gadget_power_cliques,
    planar_subchromatic_family,
    power_cliques_vertex_count,
)
from .graph import Graph, cycle_graph, induced_subgraph, path_graph, petersen_graph, power, subdivide
from .oracles import check_general_bounds, check_sandwich, validate_elimination_forest
from .orderings import VertexOrdering, degeneracy_ordering, wcol_profile
from .subcoloring import (
    exact_subchromatic,
    lambda_weak_coloring,
    subcolor_via_quotient,
    validate_subcoloring,
    xi_subcolor,
)

SUITES = ("clustering", "subcolor", "bounds", "enumeration", "gadgets")
THREADS_ENV = "SPARSE_POWERS_THREADS"


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn: Callable, jobs: list) -> list:
    workers = min(worker_count(), len(jobs))
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def random_ordering(n: int, seed: int, tag: str) -> VertexOrdering:
    seq = list(range(n))
    random.Random(f"{seed}:{tag}").shuffle(seq)
    return VertexOrdering.from_sequence(seq)


def instance_orderings(g: Graph, seed: int, name: str) -> list[tuple[str, VertexOrdering]]:
    if g.n == 0:
        return []
    return [
        ("degeneracy", degeneracy_ordering(g)[0]),
        ("random", random_ordering(g.n, seed, name)),
    ]


def _assertion(name: str, claim: str, violations: int, checked: int) -> dict:
    return {
        "name": name,
        "claim": claim,
        "checked": checked,
        "violations": violations,
        "passed": violations == 0,
    }


# --------------------------------------------------------------------------
# clustering
# --------------------------------------------------------------------------


def _clustering_job(job) -> list[dict]:
    seed, name, g, ds, rs = job
    rows = []
    for oname, order in instance_orderings(g, seed, name):
        for d in ds:
            clustering = build_clustering(g, order, d)
            gd = power(g, d)
            cliques_ok = all(is_clique(gd, blk) for blk in clustering.blocks)
            for r in rs:
                rep = verify_clustering_bound(g, order, d, r, clustering, gd)
                rows.append(
                    {
                        "instance": name,
                        "ordering": oname,
                        "n": g.n,
                        "m": g.m,
                        "d": d,
                        "r": r,
                        "blocks": clustering.size,
                        "blocks_are_cliques": cliques_ok,
                        "lhs": rep.lhs,
                        "rhs": rep.rhs,
                        "rhs_tight": rep.rhs_tight,
                        "per_block_violations": len(rep.per_block_violations),
                        "tight_violations": len(rep.tight_violations),
                        "leader_not_common": len(rep.leader_not_common),
                    }
                )
    return rows


def suite_clustering(seed: int, count: int, size: int, ds=(2, 3, 4), rs=(1, 2)) -> dict:
    corpus = sparse_corpus(count, seed, size)
    jobs = [(seed, inst.name, inst.graph, tuple(ds), tuple(rs)) for inst in corpus]
    rows = [row for chunk in _map(_clustering_job, jobs) for row in chunk]
    total = len(rows)
    return {
        "instances": rows,
        "assertions": [
            _assertion(
                "blocks-are-cliques-in-power",
                "leader fibres are cliques of G^d",
                sum(not r["blocks_are_cliques"] for r in rows),
                total,
            ),
            _assertion(
                "quotient-wreach-bound-per-block",
                "|WReach_r[G^d/X, tau, A]| <= |WReach_2dr[G, sigma, lead(A)]| for every block",
                sum(r["per_block_violations"] > 0 for r in rows),
                total,
            ),
            _assertion(
                "quotient-wcol-bound",
                "wcol_r(G^d/X, tau) <= wcol_2dr(G, sigma)",
                sum(r["lhs"] > r["rhs"] for r in rows),
                total,
            ),
            _assertion(
                "quotient-wreach-bound-tight-radius",
                "per-block bound at radius r*(d + 2*floor(d/2))",
                sum(r["tight_violations"] > 0 for r in rows),
                total,
            ),
            _assertion(
                "leader-in-common-wreach",
                "lead(A) lies in WReach_{floor(d/2)}[a] for every a in A",
                sum(r["leader_not_common"] > 0 for r in rows),
                total,
            ),
        ],
    }


# --------------------------------------------------------------------------
# subcolourings
# --------------------------------------------------------------------------


def _subcolor_job(job) -> list[dict]:
    seed, name, g, ds, small_n, chisub_limit = job
    rows = []
    for oname, order in instance_orderings(g, seed, name):
        profile = wcol_profile(g, order, [r for d in ds for r in (d, 2 * d)])
        for d in ds:
            gd = power(g, d)
            quo = subcolor_via_quotient(g, order, d)
            xi = xi_subcolor(g, order, d)
            lam = lambda_weak_coloring(g, order, d)
            row = {
                "instance": name,
                "ordering": oname,
                "n": g.n,
                "d": d,
                "quotient_palette": quo.palette,
                "xi_palette": xi.palette,
                "lambda_palette": len(set(lam)),
                "wcol_d": profile[d],
                "wcol_2d": profile[2 * d],
                "quotient_valid": validate_subcoloring(gd, quo).valid,
                "xi_valid": validate_subcoloring(gd, xi).valid,
                "chi_sub": None,
            }
            if d == 2 and g.n <= small_n:
                row["chi_sub"] = exact_subchromatic(gd, chisub_limit)
            rows.append(row)
    return rows


def suite_subcolor(seed: int, count: int, size: int, ds=(2, 3, 4), small_n: int = 12, chisub_limit: int = 14) -> dict:
    corpus = sparse_corpus(count, seed, size)
    jobs = [(seed, inst.name, inst.graph, tuple(ds), small_n, chisub_limit) for inst in corpus]
    rows = [row for chunk in _map(_subcolor_job, jobs) for row in chunk]
    exact = [r for r in rows if r["chi_sub"] is not None]
    return {
        "instances": rows,
        "assertions": [
            _assertion(
                "quotient-subcoloring-valid",
                "greedy colouring of the quotient is a subcolouring of G^d",
                sum(not r["quotient_valid"] for r in rows),
                len(rows),
            ),
            _assertion(
                "xi-subcoloring-valid",
                "signature colouring is a subcolouring of G^d",
                sum(not r["xi_valid"] for r in rows),
                len(rows),
            ),
            _assertion(
                "quotient-palette-le-wcol-2d",
                "chi_sub(G^d) <= wcol_2d(G, sigma) via the quotient",
                sum(r["quotient_palette"] > r["wcol_2d"] for r in rows),
                len(rows),
            ),
            _assertion(
                "weak-coloring-palette-le-wcol-d",
                "greedy weak d-colouring uses at most wcol_d(G, sigma) colours",
                sum(r["lambda_palette"] > r["wcol_d"] for r in rows),
                len(rows),
            ),
            _assertion(
                "exact-chisub-le-constructions",
                "exact chi_sub(G^2) <= both constructed palettes",
                sum(
                    r["chi_sub"] > min(r["quotient_palette"], r["xi_palette"]) for r in exact
                ),
                len(exact),
            ),
        ],
    }


# --------------------------------------------------------------------------
# colouring bounds
# --------------------------------------------------------------------------


def random_small_graph(rng: random.Random, n: int) -> Graph:
    kind = rng.randrange(3)
    if kind == 0:
        return random_tree(n, rng)
    if kind == 1:
        return random_sparse(n, rng.randint(n // 2, 2 * n), rng)
    return random_sparse(n, rng.randint(1, n * (n - 1) // 4 + 1), rng)


def random_power_subgraph(rng: random.Random, size: int, sub_n: int) -> tuple[Graph, dict]:
    n = rng.randint(max(3, sub_n), max(sub_n, size))
    base = random_tree(n, rng) if rng.random() < 0.5 else random_sparse(n, rng.randint(n // 2, 2 * n), rng)
    d = rng.choice([2, 3])
    k = rng.randint(1, min(sub_n, n))
    chosen = sorted(rng.sample(range(n), k))
    h, _ = induced_subgraph(power(base, d), chosen)
    return h, {"base_n": n, "d": d, "k": k}


def suite_bounds(seed: int, count: int, size: int, chi_limit: int = 18) -> dict:
    rng = random.Random(seed)
    general, sandwich = [], []
    for i in range(count):
        n = rng.randint(2, max(2, min(size, 14)))
        g = random_small_graph(rng, n)
        for d in (2, 3):
            if power(g, d).n <= chi_limit:
                rep = check_general_bounds(g, d, chi_limit)
                general.append({"id": i, "n": n, "m": g.m, **rep.as_dict()})
        h, meta = random_power_subgraph(rng, max(size, 16), 16)
        rep = check_sandwich(h, chi_limit)
        sandwich.append({"id": i, "n": h.n, **meta, **rep.as_dict()})
    return {
        "instances": {"general_bounds": general, "sandwich": sandwich},
        "assertions": [
            _assertion(
                "general-power-chi-bound",
                "chi(G^d) <= omega(G^d)^2 (d even), omega(G^d)^3 (d odd)",
                sum(not r["passed"] for r in general),
                len(general),
            ),
            _assertion(
                "omega-chi-col-sandwich",
                "omega(H) <= chi(H) <= col(H) on induced subgraphs of powers",
                sum(not r["passed"] for r in sandwich),
                len(sandwich),
            ),
        ],
    }


# --------------------------------------------------------------------------
# cliques
# --------------------------------------------------------------------------


def clique_corpus(seed: int, count: int, size: int) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    size = max(5, min(size, 30))
    out = [("C5", cycle_graph(5)), ("petersen", petersen_graph())]
    i = 0
    while len(out) < count:
        n = rng.randint(5, size)
        kind = i % 4
        if kind == 0:
            d = rng.choice([2, 3])
            out.append((f"{i:04d}-treepow{d}-{n}", power(random_tree(n, rng), d)))
        elif kind == 1:
            out.append((f"{i:04d}-sparse-{n}", random_sparse(n, rng.randint(n // 2, 2 * n), rng)))
        elif kind == 2:
            base = random_sparse(n, rng.randint(n // 2, n + 2), rng)
            out.append((f"{i:04d}-sparsepow2-{n}", power(base, 2)))
        else:
            h, _ = random_power_subgraph(rng, size, min(n, 18))
            out.append((f"{i:04d}-powsub-{h.n}", h))
        i += 1
    return out[:count]


def _enumeration_job(job) -> dict:
    name, h, ladder_limit, omega_limit = job
    ladder = semi_ladder_index(h, timeout=30.0)
    q = max(ladder.k, 1)
    enum = enumerate_maximal_cliques_semiladder(h, q)
    bk = bron_kerbosch(h)
    apx = apx_clique(h)
    omega = clique_number(h) if h.n <= omega_limit else None
    return {
        "instance": name,
        "n": h.n,
        "m": h.m,
        "semi_ladder_index": ladder.k,
        "index_complete": ladder.complete,
        "maximal_cliques": len(bk),
        "enumerated": len(enum.cliques),
        "enumeration_matches": enum.cliques == bk,
        "enumerated_all_maximal": all(is_maximal_clique(h, c) for c in enum.cliques),
        "examined_subsets": enum.examined,
        "skipped_subsets": enum.skipped,
        "apx_size": len(apx.clique),
        "apx_rounds": apx.rounds,
        "apx_is_clique": is_clique(h, apx.clique),
        "apx_witness_valid": apx.witness.is_valid(h) and len(apx.witness) == apx.rounds,
        "apx_rounds_le_index": (apx.rounds <= ladder.k) if ladder.complete and h.n <= ladder_limit else None,
        "omega": omega,
    }


def suite_enumeration(seed: int, count: int, size: int, ladder_limit: int = 18, omega_limit: int = 16) -> dict:
    jobs = [(name, h, ladder_limit, omega_limit) for name, h in clique_corpus(seed, count, size)]
    rows = _map(_enumeration_job, jobs)
    bounded = [r for r in rows if r["apx_rounds_le_index"] is not None]
    with_omega = [r for r in rows if r["omega"] is not None]
    return {
        "instances": rows,
        "assertions": [
            _assertion(
                "enumeration-equals-bron-kerbosch",
                "neighbourhood intersections over |A| <= semi-ladder index give all maximal cliques",
                sum(not r["enumeration_matches"] or not r["index_complete"] for r in rows),
                len(rows),
            ),
            _assertion(
                "enumeration-sound",
                "every enumerated set is a maximal clique",
                sum(not r["enumerated_all_maximal"] for r in rows),
                len(rows),
            ),
            _assertion(
                "apx-clique-is-clique",
                "ApxClique returns a clique",
                sum(not r["apx_is_clique"] for r in rows),
                len(rows),
            ),
            _assertion(
                "apx-witness-semi-ladder",
                "picked vertices and their non-neighbours form a semi-ladder of length rounds",
                sum(not r["apx_witness_valid"] for r in rows),
                len(rows),
            ),
            _assertion(
                "apx-rounds-le-semi-ladder-index",
                "ApxClique runs at most semi-ladder-index full rounds",
                sum(not r["apx_rounds_le_index"] for r in bounded),
                len(bounded),
            ),
            _assertion(
                "apx-nonempty",
                "|K| >= 1 whenever omega >= 1",
                sum(r["omega"] >= 1 and r["apx_size"] < 1 for r in with_omega),
                len(with_omega),
            ),
        ],
    }


# --------------------------------------------------------------------------
# gadgets
# --------------------------------------------------------------------------

POWER_CLIQUE_PARAMS = ((1, 1), (2, 2), (3, 2), (3, 3))
CLAIM_CHECK_PARAMS = ((2, 2), (3, 2))


def suite_gadgets(seed: int = 0, count: int = 0, size: int = 0) -> dict:
    rows = []
    for n, d in POWER_CLIQUE_PARAMS:
        out = gadget_power_cliques(n, d)
        row = {
            "n": n,
            "d": d,
            "vertices": out.graph.n,
            "formula": power_cliques_vertex_count(n, d),
            "certificate_valid": validate_elimination_forest(out.graph, out.certificate),
            "certificate_depth": out.certificate.depth,
            "partitions": len(out.partitions),
        }
        if (n, d) in CLAIM_CHECK_PARAMS:
            sq = power(out.graph, 2)
            claimed = list(claimed_cliques(out))
            row["claimed"] = len(claimed)
            row["claimed_distinct"] = len(set(claimed))
            row["claimed_all_maximal"] = all(is_maximal_clique(sq, c) for c in claimed)
            row["maximal_cliques_in_square"] = len(bron_kerbosch(sq))
            row["lower_bound"] = n ** len(out.partitions)
        rows.append(row)
    planar = []
    for b, h in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2)):
        out = planar_subchromatic_family(b, h)
        planar.append({"branching": b, "depth": h, "vertices": out.graph.n, "planar": out.planar})
    checked = [r for r in rows if "claimed" in r]
    return {
        "instances": {"power_cliques": rows, "planar5": planar},
        "assertions": [
            _assertion(
                "gadget-vertex-count",
                "G_{n,d} has (3/2) C(2d,d) n + 2d vertices",
                sum(r["vertices"] != r["formula"] for r in rows),
                len(rows),
            ),
            _assertion(
                "gadget-treedepth-certificate",
                "elimination forest valid with depth <= 2d + 2",
                sum(not r["certificate_valid"] or r["certificate_depth"] > 2 * r["d"] + 2 for r in rows),
                len(rows),
            ),
            _assertion(
                "gadget-claimed-cliques-maximal",
                "each f: Q -> [n] gives a maximal clique of the square",
                sum(not r["claimed_all_maximal"] or r["claimed_distinct"] != r["lower_bound"] for r in checked),
                len(checked),
            ),
            _assertion(
                "gadget-maximal-clique-count",
                "the square has at least n^|Q| maximal cliques",
                sum(r["maximal_cliques_in_square"] < r["lower_bound"] for r in checked),
                len(checked),
            ),
            _assertion(
                "planar-family-planar",
                "tree-plus-gadget family is planar",
                sum(not r["planar"] for r in planar),
                len(planar),
            ),
        ],
    }


def subdivision_identity(seed: int, count: int, max_n: int = 10) -> dict:
    rng = random.Random(seed)
    rows = []
    for i in range(count):
        n = rng.randint(1, max_n)
        h = random_sparse(n, rng.randint(0, n * (n - 1) // 2), rng)
        for d in (2, 3):
            sub, branch = subdivide(h, d - 1)
            back, _ = induced_subgraph(power(sub, d), list(branch))
            rows.append({"id": i, "n": n, "m": h.m, "d": d, "equal": back == h})
    return {
        "instances": rows,
        "assertions": [
            _assertion(
                "subdivision-power-identity",
                "H is induced in the d-th power of its (d-1)-subdivision",
                sum(not r["equal"] for r in rows),
                len(rows),
            )
        ],
    }


RUNNERS = {
    "clustering": suite_clustering,
    "subcolor": suite_subcolor,
    "bounds": suite_bounds,
    "enumeration": suite_enumeration,
    "gadgets": suite_gadgets,
}


def run_suite(suite: str, seed: int, count: int, size: int) -> dict:
    if suite not in RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return RUNNERS[suite](seed, count, size)
