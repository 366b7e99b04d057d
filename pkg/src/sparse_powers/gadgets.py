"""Explicit constructions: the many-maximal-cliques family and the planar
subchromatic lower-bound family."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Iterator

import networkx as nx

from .errors import DomainError
from .graph import Graph
from .oracles import ROOT, EliminationForest

DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class GadgetOutput:
    graph: Graph
    labels: tuple[str, ...]
    params: dict
    certificate: EliminationForest | None = None
    partitions: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()
    # vertex ids of v^i_I, v^i_{I,J}, v^i_J indexed [partition][copy]
    triples: tuple[tuple[tuple[int, int, int], ...], ...] = field(default=(), repr=False)
    planar: bool | None = None

    def format_labels(self) -> str:
        return "".join(f"{v} {lab}\n" for v, lab in enumerate(self.labels))


def power_cliques_vertex_count(n: int, d: int) -> int:
    return 3 * comb(2 * d, d) * n // 2 + 2 * d


def balanced_partitions(d: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Unordered splits of ``0..2d-1`` into two halves; ``I`` always holds 0."""
    everything = set(range(2 * d))
    out = []
    for rest in combinations(range(1, 2 * d), d - 1):
        i_side = (0, *rest)
        out.append((i_side, tuple(sorted(everything - set(i_side)))))
    return out


def _set_label(side: tuple[int, ...]) -> str:
    return ",".join(str(a + 1) for a in side)


def gadget_power_cliques(n: int, d: int, budget: int = DEFAULT_BUDGET) -> GadgetOutput:
    """Independent set ``u_1..u_2d`` plus, per balanced partition and copy, a
    path ``v_I - v_IJ - v_J`` with ``v_I`` joined to ``I`` and ``v_J`` to ``J``.

    The certificate hangs ``A`` as a root path and every 3-path below its end,
    middle vertex first, giving depth ``2d + 2``.
    """
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    total = power_cliques_vertex_count(n, d)
    if total > budget:
        raise DomainError(f"G_(n={n}, d={d}) has {total} vertices, budget is {budget}")
    parts = balanced_partitions(d)
    labels = [f"u_{a + 1}" for a in range(2 * d)]
    parent = [ROOT] + list(range(2 * d - 1))
    edges = []
    triples = []
    nxt = 2 * d
    for i_side, j_side in parts:
        row = []
        for copy in range(1, n + 1):
            vi, vij, vj = nxt, nxt + 1, nxt + 2
            nxt += 3
            edges.extend((vi, a) for a in i_side)
            edges.extend((vj, a) for a in j_side)
            edges += [(vi, vij), (vij, vj)]
            il, jl = _set_label(i_side), _set_label(j_side)
            labels += [f"v^{copy}_{{{il}}}", f"v^{copy}_{{{il}|{jl}}}", f"v^{copy}_{{{jl}}}"]
            parent += [vij, 2 * d - 1, vij]
            row.append((vi, vij, vj))
        triples.append(tuple(row))
    g = Graph.from_edges(nxt, edges)
    assert g.n == total
    return GadgetOutput(
        graph=g,
        labels=tuple(labels),
        params={"kind": "power-cliques", "n": n, "d": d},
        certificate=EliminationForest(tuple(parent)),
        partitions=tuple(parts),
        triples=tuple(triples),
    )


def claimed_cliques(out: GadgetOutput) -> Iterator[frozenset[int]]:
    """One set per function from partitions to copies, in lexicographic order."""
    n = out.params["n"]
    for f in product(range(n), repeat=len(out.partitions)):
        members = []
        for q, copy in enumerate(f):
            vi, _, vj = out.triples[q][copy]
            members += [vi, vj]
        yield frozenset(members)


def planar_subchromatic_family(branching: int, depth: int, budget: int = DEFAULT_BUDGET) -> GadgetOutput:
    """Complete ``branching``-ary tree of the given depth with the nine-vertex
    gadget hung on every tree edge ``uv`` (edge ``uv`` itself kept)."""
    if branching < 1 or depth < 1:
        raise DomainError(f"need branching >= 1 and depth >= 1, got {branching}, {depth}")
    tree_n = sum(branching**k for k in range(depth + 1))
    total = tree_n + 9 * (tree_n - 1)
    if total > budget:
        raise DomainError(f"planar family has {total} vertices, budget is {budget}")
    labels = [f"t_{i}" for i in range(tree_n)]
    tree_edges = [((i - 1) // branching, i) for i in range(1, tree_n)]
    edges = list(tree_edges)
    nxt = tree_n
    for e, (u, v) in enumerate(tree_edges):
        a = [nxt, nxt + 1, nxt + 2]
        c = [nxt + 3, nxt + 4, nxt + 5]
        b = [nxt + 6, nxt + 7, nxt + 8]
        nxt += 9
        for k in range(3):
            edges += [(a[k], c[k]), (b[k], c[k]), (u, a[k]), (v, b[k])]
        edges += [(c[0], c[1]), (c[1], c[2])]
        labels += [f"{s}_{k + 1}@{u}-{v}" for s in "acb" for k in range(3)]
    g = Graph.from_edges(nxt, edges)
    return GadgetOutput(
        graph=g,
        labels=tuple(labels),
        params={"kind": "planar5", "branching": branching, "depth": depth},
        planar=is_planar(g),
    )


def is_planar(g: Graph) -> bool:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.check_planarity(nxg)[0]
