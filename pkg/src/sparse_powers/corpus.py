"""Seeded generators for the sparse test corpus: trees, grids, sparse random
graphs, bounded-degree graphs and subdivided cliques."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, complete_graph, grid_graph, subdivide


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree via a Pruefer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_sparse(n: int, m: int, rng: random.Random) -> Graph:
    """``m`` distinct edges sampled uniformly (rejection on repeats)."""
    m = min(m, n * (n - 1) // 2)
    edges: set[tuple[int, int]] = set()
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def random_bounded_degree(n: int, max_deg: int, m: int, rng: random.Random, tries: int = 50) -> Graph:
    """Edges sampled one at a time, rejected when an endpoint is saturated."""
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    misses = 0
    while len(edges) < m and misses < tries * max(m, 1):
        u, v = rng.randrange(n), rng.randrange(n)
        e = (min(u, v), max(u, v))
        if u == v or e in edges or deg[u] >= max_deg or deg[v] >= max_deg:
            misses += 1
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph.from_edges(n, edges)


def subdivided_clique(k: int, s: int) -> Graph:
    return subdivide(complete_graph(k), s)[0]


def sparse_corpus(count: int, seed: int, max_n: int = 300) -> list[Instance]:
    """Cycle through the four families, scaling size with the instance index.

    Roughly a third of the instances stay at 12 vertices or fewer so that
    exact oracles apply to them.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        small = i % 3 == 0
        family = (i // 3) % 4 if not small else i % 4
        if family == 0:
            n = rng.randint(3, 12) if small else rng.randint(13, max_n)
            out.append(Instance(f"{i:04d}-tree-{n}", random_tree(n, rng)))
        elif family == 1:
            side = min(15, max(2, int(max_n**0.5)))
            r, c = (rng.randint(2, 3), rng.randint(2, 4)) if small else (rng.randint(2, side), rng.randint(2, side))
            out.append(Instance(f"{i:04d}-grid-{r}x{c}", grid_graph(r, c)))
        elif family == 2:
            n = rng.randint(4, 12) if small else rng.randint(13, max_n)
            m = rng.randint(n // 2, 2 * n)
            out.append(Instance(f"{i:04d}-sparse-{n}-{m}", random_sparse(n, m, rng)))
        else:
            if small:
                k, s = rng.choice([(3, 1), (3, 2), (4, 1), (3, 3)])
            else:
                k = rng.randint(4, 8)
                s = rng.randint(1, 3)
                while k + s * k * (k - 1) // 2 > max_n and k > 4:
                    k -= 1
            out.append(Instance(f"{i:04d}-subclique-{k}-{s}", subdivided_clique(k, s)))
    return out
