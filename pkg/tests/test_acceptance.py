"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
Where the library computes something and then checks it, a second
implementation (networkx, brute force or the alternate library routine)
checks it again.
"""

import json
import random
import time
from math import comb

import brute
import networkx as nx
import pytest
from conftest import ACCEPTANCE_LINES

from sparse_powers import cli
from sparse_powers.cliques import (
    apx_clique,
    bron_kerbosch,
    clique_number,
    enumerate_maximal_cliques_semiladder,
    is_maximal_clique,
    semi_ladder_index,
)
from sparse_powers.clustering import build_clustering, quotient, quotient_ordering, verify_clustering_bound
from sparse_powers.corpus import random_sparse, sparse_corpus
from sparse_powers.gadgets import claimed_cliques, gadget_power_cliques
from sparse_powers.graph import cycle_graph, induced_subgraph, path_graph, petersen_graph, power, subdivide
from sparse_powers.oracles import check_general_bounds, check_sandwich, validate_elimination_forest
from sparse_powers.orderings import coloring_number_of, degeneracy_ordering, wcol_of_ordering, wreach
from sparse_powers.subcoloring import exact_subchromatic, subcolor_via_quotient, validate_subcoloring, xi_subcolor
from sparse_powers.verify import SUITES, clique_corpus, instance_orderings, random_power_subgraph, random_small_graph

SEED = 20240601
CORPUS_SIZE = 500
DS = (2, 3, 4)
RS = (1, 2)


def record(num, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  C{num:<2} {title}" + (f"  [{detail}]" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def to_nx(g):
    x = nx.Graph()
    x.add_nodes_from(range(g.n))
    x.add_edges_from(g.edges())
    return x


def is_cluster_graph(h, vertices):
    """Independent of the P3 search: every component of h[vertices] has k(k-1)/2 edges."""
    inside = set(vertices)
    seen = set()
    for s in vertices:
        if s in seen:
            continue
        comp, stack, deg_sum = [], [s], 0
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in h.adj[x]:
                if y in inside:
                    deg_sum += 1
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        k = len(comp)
        if deg_sum != k * (k - 1):
            return False
    return True


@pytest.fixture(scope="module")
def corpus():
    return sparse_corpus(CORPUS_SIZE, SEED, 300)


# --------------------------------------------------------------------------


def test_c1_clustering_blocks_and_bound(corpus):
    start = time.perf_counter()
    checked = clique_bad = bound_bad = 0
    families = {inst.name.split("-")[1] for inst in corpus}
    for inst in corpus:
        g = inst.graph
        for _, order in instance_orderings(g, SEED, inst.name):
            for d in DS:
                X = build_clustering(g, order, d)
                gd = power(g, d)
                for r in RS:
                    rep = verify_clustering_bound(g, order, d, r, X, gd)
                    checked += 1
                    bound_bad += bool(rep.per_block_violations) or rep.lhs > rep.rhs
    elapsed = time.perf_counter() - start

    # second pass: block cliqueness by networkx distances
    for inst in corpus:
        g = inst.graph
        nxg = to_nx(g)
        for _, order in instance_orderings(g, SEED, inst.name):
            for d in DS:
                for block in build_clustering(g, order, d, check=False).blocks:
                    if len(block) < 2:
                        continue
                    for u in block:
                        near = nx.single_source_shortest_path_length(nxg, u, cutoff=d)
                        if any(v not in near for v in block):
                            clique_bad += 1
                            break

    # third pass on the small instances: both sides by path enumeration
    small_bad = small = 0
    for inst in corpus:
        g = inst.graph
        if g.n > 9:
            continue
        for _, order in instance_orderings(g, SEED, inst.name):
            for d in DS:
                X = build_clustering(g, order, d)
                q = quotient(power(g, d), X).graph
                tau = quotient_ordering(X, order)
                for r in RS:
                    small += 1
                    for b, ld in enumerate(X.leader):
                        lhs = len(brute.wreach_by_paths(q, tau.sequence, b, r))
                        rhs = len(brute.wreach_by_paths(g, order.sequence, ld, 2 * d * r))
                        small_bad += lhs > rhs

    ok = (
        len(corpus) >= 500
        and families == {"tree", "grid", "sparse", "subclique"}
        and clique_bad == bound_bad == small_bad == 0
        and elapsed < 60
    )
    record(
        1,
        "clustering blocks are G^d cliques and per-block wreach bound holds",
        ok,
        f"{len(corpus)} graphs, {checked} (G,sigma,d,r) checks, cliques bad {clique_bad}, "
        f"bound bad {bound_bad}, brute re-check {small_bad}/{small}, {elapsed:.1f}s",
    )
    assert ok


def test_c2_leader_in_common_wreach(corpus):
    bad = blocks = 0
    for inst in corpus:
        g = inst.graph
        for _, order in instance_orderings(g, SEED, inst.name):
            for d in DS:
                X = build_clustering(g, order, d)
                rep = verify_clustering_bound(g, order, d, 1, X)
                bad += len(rep.leader_not_common)
                # independent: the per-vertex wreach routine
                for b, block in enumerate(X.blocks):
                    blocks += 1
                    ld = X.leader[b]
                    if not all(ld in wreach(g, order, a, d // 2) for a in block):
                        bad += 1
    ok = bad == 0
    record(2, "leader lies in the common WReach_{floor(d/2)} of its block", ok, f"{blocks} blocks, {bad} violations")
    assert ok


def test_c3_subcoloring_validity(corpus):
    bad_valid = bad_palette = bad_indep = checked = 0
    for inst in corpus:
        g = inst.graph
        for _, order in instance_orderings(g, SEED, inst.name):
            for d in DS:
                gd = power(g, d)
                quo = subcolor_via_quotient(g, order, d)
                xi = xi_subcolor(g, order, d)
                checked += 1
                bad_valid += not validate_subcoloring(gd, quo).valid
                bad_valid += not validate_subcoloring(gd, xi).valid
                bad_palette += quo.palette > wcol_of_ordering(g, order, 2 * d)
                for s in (quo, xi):
                    classes = {}
                    for v, c in enumerate(s.color):
                        classes.setdefault(c, []).append(v)
                    bad_indep += not all(is_cluster_graph(gd, cls) for cls in classes.values())
    ok = bad_valid == bad_palette == bad_indep == 0
    record(
        3,
        "quotient and xi colourings are subcolourings; quotient palette <= wcol_2d",
        ok,
        f"{checked} (G,sigma,d), invalid {bad_valid}, component re-check {bad_indep}, palette {bad_palette}",
    )
    assert ok


def test_c4_exact_chisub(corpus):
    checked = bad = 0
    for inst in corpus:
        g = inst.graph
        if g.n > 12:
            continue
        h = power(g, 2)
        k = exact_subchromatic(h)
        for _, order in instance_orderings(g, SEED, inst.name):
            checked += 1
            bad += k > subcolor_via_quotient(g, order, 2).palette or k > xi_subcolor(g, order, 2).palette
    p4, c5 = exact_subchromatic(path_graph(4)), exact_subchromatic(cycle_graph(5))
    brute_ok = brute.min_subchromatic(path_graph(4)) == 2 and brute.min_subchromatic(cycle_graph(5)) == 2
    ok = checked > 0 and bad == 0 and p4 == 2 and c5 == 2 and brute_ok
    record(4, "exact chi_sub(G^2) <= both palettes; chi_sub(P4)=chi_sub(C5)=2", ok, f"{checked} checks, {bad} violations")
    assert ok


def test_c5_sandwich():
    rng = random.Random(SEED + 5)
    bad = 0
    ratios = []
    for _ in range(200):
        h, _ = random_power_subgraph(rng, 40, 16)
        assert h.n <= 16
        rep = check_sandwich(h)
        nx_omega = max((len(c) for c in nx.find_cliques(to_nx(h))), default=0)
        order, _ = degeneracy_ordering(h)
        bad += not rep.passed or rep.omega != nx_omega or rep.col != coloring_number_of(h, order)
        ratios.append(rep.ratio)
    ok = bad == 0
    record(
        5,
        "omega <= chi <= col on induced subgraphs of powers",
        ok,
        f"200 instances, {bad} violations, col/omega max {max(ratios):.2f} mean {sum(ratios) / len(ratios):.2f}",
    )
    assert ok


def test_c6_general_bounds():
    rng = random.Random(SEED + 6)
    bad = checked = 0
    for _ in range(200):
        g = random_small_graph(rng, rng.randint(2, 14))
        for d in (2, 3):
            rep = check_general_bounds(g, d)
            checked += 1
            bad += not rep.passed or rep.chi > rep.omega ** (2 if d == 2 else 3)
    c5 = check_general_bounds(cycle_graph(5), 2)
    pet = check_general_bounds(petersen_graph(), 2)
    fixtures = (c5.chi, c5.omega) == (5, 5) and (pet.chi, pet.omega) == (10, 10)
    ok = bad == 0 and fixtures
    record(6, "chi(G^2) <= omega^2, chi(G^3) <= omega^3; C5 and Petersen fixtures", ok, f"{checked} checks, {bad} violations")
    assert ok


def test_c7_apx_clique():
    corpus = clique_corpus(SEED + 7, 100, 30)
    not_clique = bad_witness = bad_rounds = bad_nonempty = bounded = 0
    sizes = []
    for _, h in corpus:
        rep = apx_clique(h)
        nxg = to_nx(h)
        not_clique += any(not nxg.has_edge(a, b) for i, a in enumerate(rep.clique) for b in rep.clique[i + 1:])
        bad_witness += not rep.witness.is_valid(h) or len(rep.witness) != rep.rounds
        if h.n <= 18:
            ladder = semi_ladder_index(h, timeout=30.0)
            if ladder.complete:
                bounded += 1
                bad_rounds += rep.rounds > ladder.k
        if h.n <= 16:
            w = clique_number(h)
            sizes.append((len(rep.clique), w))
            bad_nonempty += w >= 1 and len(rep.clique) < 1
    ok = not_clique == bad_witness == bad_rounds == bad_nonempty == 0
    hit = sum(k == w for k, w in sizes)
    record(
        7,
        "ApxClique returns a clique; rounds = witness length <= semi-ladder index",
        ok,
        f"{len(corpus)} graphs, round bound on {bounded}, |K|=omega on {hit}/{len(sizes)}",
    )
    assert ok


def test_c8_enumeration():
    corpus = clique_corpus(SEED + 8, 100, 30)
    names = [name for name, _ in corpus]
    start = time.perf_counter()
    bad = incomplete = 0
    for _, h in corpus:
        ladder = semi_ladder_index(h)
        incomplete += not ladder.complete
        found = enumerate_maximal_cliques_semiladder(h, max(ladder.k, 1)).cliques
        bk = bron_kerbosch(h)
        nx_cliques = {frozenset(c) for c in nx.find_cliques(to_nx(h))}
        bad += found != bk or bk != nx_cliques or not all(is_maximal_clique(h, c) for c in found)
    elapsed = time.perf_counter() - start
    has_required = "C5" in names and "petersen" in names and any("treepow" in n for n in names)
    ok = bad == 0 and incomplete == 0 and elapsed < 120 and has_required and max(h.n for _, h in corpus) <= 30
    record(8, "semi-ladder enumeration equals Bron-Kerbosch", ok, f"100 graphs, {bad} discrepancies, {elapsed:.1f}s")
    assert ok


def test_c9_gadgets():
    problems = []
    for n, d in ((1, 1), (2, 2), (3, 2), (3, 3)):
        out = gadget_power_cliques(n, d)
        if 2 * out.graph.n != 3 * comb(2 * d, d) * n + 4 * d:
            problems.append(f"count {n},{d}")
        if not validate_elimination_forest(out.graph, out.certificate) or out.certificate.depth > 2 * d + 2:
            problems.append(f"certificate {n},{d}")
    for n, d, claims in ((2, 2, 8), (3, 2, 27)):
        out = gadget_power_cliques(n, d)
        sq = power(out.graph, 2)
        sets = set(claimed_cliques(out))
        if len(sets) != claims or not all(is_maximal_clique(sq, s) for s in sets):
            problems.append(f"claimed {n},{d}")
        if len(bron_kerbosch(sq)) < n ** len(out.partitions):
            problems.append(f"total {n},{d}")
    ok = not problems
    record(9, "G_{n,d} counts, depth <= 2d+2 certificates, claimed maximal cliques", ok, ", ".join(problems))
    assert ok


def test_c10_subdivision_identity():
    rng = random.Random(SEED + 10)
    bad = 0
    for _ in range(50):
        n = rng.randint(1, 10)
        h = random_sparse(n, rng.randint(0, n * (n - 1) // 2), rng)
        for d in (2, 3):
            s, branch = subdivide(h, d - 1)
            back, _ = induced_subgraph(power(s, d), list(branch))
            bad += back.edges() != h.edges() or back.n != h.n
    ok = bad == 0
    record(10, "H is the branch-induced subgraph of power(subdivide(H, d-1), d)", ok, f"100 checks, {bad} violations")
    assert ok


def test_c11_determinism(capsys):
    differing = []
    for suite in SUITES:
        argv = ["verify", "--suite", suite, "--seed", "7", "--count", "12", "--size", "40"]
        outs = []
        for _ in range(2):
            code = cli.main(argv)
            outs.append(capsys.readouterr().out)
        json.loads(outs[0])
        if outs[0] != outs[1] or code != 0:
            differing.append(suite)
    ok = not differing
    with capsys.disabled():
        record(11, "repeated verify runs give byte-identical reports", ok, ", ".join(differing) or "5 suites")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
