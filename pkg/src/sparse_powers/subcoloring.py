"""Subcolourings of graph powers and an exact subchromatic oracle.

A subcolouring assigns colours so that every colour class induces a cluster
graph (a disjoint union of cliques), i.e. no monochromatic induced ``P3``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .clustering import build_clustering, quotient
from .errors import DomainError, SizeLimitError
from .graph import Graph, power
from .orderings import (
    VertexOrdering,
    degeneracy_ordering,
    greedy_color,
    wreach_distances,
)

EXACT_SUBCHROMATIC_LIMIT = 14


@dataclass(frozen=True)
class SubColoring:
    color: tuple[int, ...]
    method: str

    @property
    def palette(self) -> int:
        return len(set(self.color))

    def format(self) -> str:
        return "".join(f"{v} {c}\n" for v, c in enumerate(self.color))


@dataclass(frozen=True)
class XiTriple:
    """Per-vertex signature whose classes form a subcolouring of ``G^d``.

    For ``X = WReach_{d//2}[u] = x_1 < ... < x_p``: ``alpha`` holds the weak
    colours of the ``x_i``, ``beta`` the least radius at which each ``x_i`` is
    weakly reached, and ``gamma`` (row-major over ``i < j``) the 0-based index
    of ``x_i`` inside the sorted ``WReach_d[x_j]``.
    """

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.alpha)

    def key(self) -> tuple:
        return (self.p, self.alpha, self.beta, self.gamma)


@dataclass
class ValidationReport:
    valid: bool
    classes: int
    witness: tuple[int, int, int] | None = None
    color: int | None = None

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "classes": self.classes,
            "witness_p3": list(self.witness) if self.witness else None,
            "witness_color": self.color,
        }


def subcolor_via_quotient(g: Graph, order: VertexOrdering, d: int) -> SubColoring:
    """Colour the quotient of the leader clustering greedily; blocks share a colour."""
    if g.n == 0:
        return SubColoring((), "quotient")
    clustering = build_clustering(g, order, d)
    q = quotient(power(g, d), clustering).graph
    q_order, _ = degeneracy_ordering(q)
    qcol = greedy_color(q, q_order).color
    return SubColoring(tuple(qcol[clustering.block_of[v]] for v in range(g.n)), "quotient")


def lambda_weak_coloring(
    g: Graph, order: VertexOrdering, d: int, reach: list[dict[int, int]] | None = None
) -> list[int]:
    """Greedy colouring in which ``u`` avoids every colour on ``WReach_d[u] - {u}``."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if reach is None:
        reach = wreach_distances(g, order, d)
    lam = [-1] * g.n
    for u in order.sequence:
        taken = {lam[v] for v in reach[u] if v != u}
        c = 0
        while c in taken:
            c += 1
        lam[u] = c
    return lam


def xi_triples(g: Graph, order: VertexOrdering, d: int) -> list[XiTriple]:
    reach_d = wreach_distances(g, order, d)
    lam = lambda_weak_coloring(g, order, d, reach_d)
    half = d // 2
    pos = order.position
    index_in = [
        {v: i for i, v in enumerate(order.sort(reach_d[x]))} for x in range(g.n)
    ]
    out = []
    for u in range(g.n):
        xs = order.sort(v for v, r in reach_d[u].items() if r <= half)
        alpha = tuple(lam[x] for x in xs)
        beta = tuple(reach_d[u][x] for x in xs)
        gamma = tuple(index_in[xs[j]][xs[i]] for i in range(len(xs)) for j in range(i + 1, len(xs)))
        out.append(XiTriple(alpha, beta, gamma))
        assert xs[-1] == u and all(pos[a] < pos[b] for a, b in zip(xs, xs[1:]))
    return out


def xi_subcolor(g: Graph, order: VertexOrdering, d: int) -> SubColoring:
    """Subcolouring of ``G^d`` whose palette depends only on ``wcol_d`` and ``d``."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if d == 1:
        return SubColoring(tuple(lambda_weak_coloring(g, order, 1)), "xi")
    triples = xi_triples(g, order, d)
    ids: dict[tuple, int] = {}
    color = [0] * g.n
    for u in order.sequence:
        color[u] = ids.setdefault(triples[u].key(), len(ids))
    return SubColoring(tuple(color), "xi")


def validate_subcoloring(h: Graph, color: SubColoring | Sequence[int]) -> ValidationReport:
    """Check every colour class is a cluster graph; on failure return an induced P3."""
    col = color.color if isinstance(color, SubColoring) else tuple(color)
    if len(col) != h.n:
        raise DomainError(f"colouring covers {len(col)} of {h.n} vertices")
    seen = [False] * h.n
    for s in range(h.n):
        if seen[s]:
            continue
        c = col[s]
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in h.adj[x]:
                if not seen[y] and col[y] == c:
                    seen[y] = True
                    queue.append(y)
        bad = _non_clique_pair(h, comp)
        if bad is not None:
            return ValidationReport(False, len(set(col)), _p3_between(h, col, *bad), c)
    return ValidationReport(True, len(set(col)))


def _non_clique_pair(h: Graph, comp: list[int]) -> tuple[int, int] | None:
    members = set(comp)
    k = len(comp)
    for u in sorted(comp):
        if len(h.nbrs[u] & members) != k - 1:
            for v in sorted(members - h.nbrs[u] - {u}):
                return u, v
    return None


def _p3_between(h: Graph, col: Sequence[int], u: int, w: int) -> tuple[int, int, int]:
    # first three vertices of a shortest monochromatic u-w path form an induced P3
    c = col[u]
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            break
        for y in h.adj[x]:
            if y not in parent and col[y] == c:
                parent[y] = x
                queue.append(y)
    path = [w]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path[0], path[1], path[2]


def exact_subchromatic(h: Graph, limit: int = EXACT_SUBCHROMATIC_LIMIT) -> int:
    """Least number of colours whose classes all induce cluster graphs."""
    if h.n > limit:
        raise SizeLimitError("exact_subchromatic", h.n, limit)
    if h.n == 0:
        return 0
    best = exact_subcoloring(h, limit)
    return len(set(best))


def exact_subcoloring(h: Graph, limit: int = EXACT_SUBCHROMATIC_LIMIT) -> list[int]:
    """An optimal subcolouring found by iterative deepening on the palette size."""
    if h.n > limit:
        raise SizeLimitError("exact_subcoloring", h.n, limit)
    if h.n == 0:
        return []
    seq = list(degeneracy_ordering(h)[0].sequence)
    nb = h.nbrs
    col = [-1] * h.n

    def fits(v: int, c: int) -> bool:
        same = [u for u in nb[v] if col[u] == c]
        for i, a in enumerate(same):
            for b in same[i + 1:]:
                if b not in nb[a]:
                    return False
            for w in nb[a]:
                if w != v and col[w] == c and w not in nb[v]:
                    return False
        return True

    def search(i: int, used: int, k: int) -> bool:
        if i == len(seq):
            return True
        v = seq[i]
        for c in range(min(used + 1, k)):
            if fits(v, c):
                col[v] = c
                if search(i + 1, max(used, c + 1), k):
                    return True
                col[v] = -1
        return False

    k = 1
    while not search(0, 0, k):
        k += 1
    return col
