"""Vertex orderings, greedy colouring and weak coloring numbers."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, FormatError, SizeLimitError
from .graph import Graph, bfs_distances

EXACT_WCOL_LIMIT = 9


@dataclass(frozen=True)
class VertexOrdering:
    """A linear order on ``0..n-1``.

    ``sequence[i]`` is the vertex at rank ``i``; ``position`` is its inverse.
    """

    sequence: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> VertexOrdering:
        seq = tuple(seq)
        n = len(seq)
        pos = [-1] * n
        for i, v in enumerate(seq):
            if not 0 <= v < n or pos[v] != -1:
                raise DomainError(f"ordering is not a permutation of 0..{n - 1}")
            pos[v] = i
        return cls(seq, tuple(pos))

    @classmethod
    def identity(cls, n: int) -> VertexOrdering:
        r = tuple(range(n))
        return cls(r, r)

    def __len__(self) -> int:
        return len(self.sequence)

    def rank(self, v: int) -> int:
        return self.position[v]

    def sort(self, vertices: Iterable[int]) -> list[int]:
        return sorted(vertices, key=self.position.__getitem__)

    def check(self, g: Graph) -> None:
        if len(self.sequence) != g.n:
            raise DomainError(f"ordering has {len(self.sequence)} entries for n={g.n}")


def parse_ordering(text: str) -> VertexOrdering:
    seq = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            seq.append(int(line))
        except ValueError:
            raise FormatError(f"ordering line {lineno}: {line!r} is not a vertex id") from None
    return VertexOrdering.from_sequence(seq)


def format_ordering(order: VertexOrdering) -> str:
    return "".join(f"{v}\n" for v in order.sequence)


@dataclass(frozen=True)
class ProperColoring:
    color: tuple[int, ...]

    @property
    def palette(self) -> int:
        return 1 + max(self.color, default=-1)

    def is_proper(self, g: Graph) -> bool:
        return all(self.color[u] != self.color[v] for u, v in g.edges())


# --------------------------------------------------------------------------
# degeneracy and greedy colouring
# --------------------------------------------------------------------------


def degeneracy_ordering(g: Graph) -> tuple[VertexOrdering, int]:
    """Smallest-last ordering together with its coloring number ``col(G)``.

    Repeatedly removes a minimum-degree vertex (smallest id on ties) and puts
    it in front of everything removed before.
    """
    if g.n == 0:
        raise DomainError("degeneracy ordering of the empty graph")
    deg = [len(r) for r in g.adj]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    extracted = []
    worst = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        extracted.append(v)
        worst = max(worst, dv)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    extracted.reverse()
    return VertexOrdering.from_sequence(extracted), worst + 1


def coloring_number(g: Graph) -> int:
    return degeneracy_ordering(g)[1] if g.n else 0


def back_degrees(g: Graph, order: VertexOrdering) -> list[int]:
    pos = order.position
    return [sum(1 for w in g.adj[u] if pos[w] < pos[u]) for u in range(g.n)]


def coloring_number_of(g: Graph, order: VertexOrdering) -> int:
    order.check(g)
    return 1 + max(back_degrees(g, order), default=0)


def greedy_color(g: Graph, order: VertexOrdering) -> ProperColoring:
    order.check(g)
    color = [-1] * g.n
    for u in order.sequence:
        taken = {color[w] for w in g.adj[u] if color[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        color[u] = c
    return ProperColoring(tuple(color))


# --------------------------------------------------------------------------
# weak reachability
# --------------------------------------------------------------------------


def _restricted_bfs(g: Graph, pos: Sequence[int], target: int, radius: int) -> dict[int, int]:
    """Distances from ``target`` inside the vertices ranked at or after it."""
    floor = pos[target]
    dist = {target: 0}
    queue = deque([target])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if dx == radius:
            continue
        for y in g.adj[x]:
            if y not in dist and pos[y] > floor:
                dist[y] = dx + 1
                queue.append(y)
    return dist


def wreach_distances(g: Graph, order: VertexOrdering, radius: int) -> list[dict[int, int]]:
    """For every ``u``, map each ``v`` in ``WReach_radius[u]`` to the least ``r`` with
    ``v`` in ``WReach_r[u]``.

    Thresholding the returned distances gives the sets for every smaller radius.
    """
    order.check(g)
    if radius < 0:
        raise DomainError(f"radius must be >= 0, got {radius}")
    out: list[dict[int, int]] = [{} for _ in range(g.n)]
    for v in order.sequence:
        for u, du in _restricted_bfs(g, order.position, v, radius).items():
            out[u][v] = du
    return out


def wreach(g: Graph, order: VertexOrdering, u: int, r: int) -> list[int]:
    """``WReach_r[G, order, u]`` sorted by the ordering."""
    order.check(g)
    g.check_vertex(u)
    if r < 0:
        raise DomainError(f"radius must be >= 0, got {r}")
    pos = order.position
    # candidates: earlier vertices within plain distance r
    cand = bfs_distances(g, u, r)
    hits = [v for v in cand if pos[v] <= pos[u] and u in _restricted_bfs(g, pos, v, r)]
    return order.sort(hits)


def wreach_sets(g: Graph, order: VertexOrdering, r: int) -> list[list[int]]:
    """All ``WReach_r`` sets, each sorted by the ordering."""
    dists = wreach_distances(g, order, r)
    return [order.sort(dv) for dv in dists]


def wcol_of_ordering(g: Graph, order: VertexOrdering, r: int) -> int:
    return max((len(s) for s in wreach_distances(g, order, r)), default=0)


def wcol_profile(g: Graph, order: VertexOrdering, radii: Iterable[int]) -> dict[int, int]:
    """``wcol_r(G, order)`` for several radii from a single sweep."""
    radii = sorted(set(radii))
    if not radii:
        return {}
    dists = wreach_distances(g, order, radii[-1])
    return {
        r: max((sum(1 for x in dv.values() if x <= r) for dv in dists), default=0) for r in radii
    }


# --------------------------------------------------------------------------
# exhaustive optimum
# --------------------------------------------------------------------------


def exact_wcol(g: Graph, r: int, limit: int = EXACT_WCOL_LIMIT) -> tuple[int, VertexOrdering]:
    """Minimum ``wcol_r`` over all orderings, with the lexicographically first witness.

    Builds orderings front to back. Placing ``v`` next fixes exactly which
    later vertices weakly reach it (a bounded BFS inside ``v`` plus the
    still-unplaced vertices), so reach counts only grow and the running
    maximum is a valid lower bound for pruning.
    """
    if g.n > limit:
        raise SizeLimitError("exact_wcol", g.n, limit)
    if r < 0:
        raise DomainError(f"radius must be >= 0, got {r}")
    if g.n == 0:
        return 0, VertexOrdering.identity(0)
    if r == 0 or g.m == 0:
        return 1, VertexOrdering.identity(g.n)

    deg_order, col = degeneracy_ordering(g)
    floor = col  # wcol_r >= wcol_1 = col
    best = wcol_of_ordering(g, deg_order, r) + 1
    witness: list[int] | None = None
    counts = [0] * g.n
    placed = [False] * g.n
    prefix: list[int] = []
    adj = g.adj

    def reach_of(v: int) -> list[int]:
        dist = {v: 0}
        frontier = [v]
        for _ in range(r):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if not placed[y] and y not in dist:
                        dist[y] = 1
                        nxt.append(y)
            frontier = nxt
        return list(dist)

    def search(current_max: int) -> bool:
        nonlocal best, witness
        if len(prefix) == g.n:
            best = current_max
            witness = list(prefix)
            return best <= floor
        for v in range(g.n):
            if placed[v]:
                continue
            hit = reach_of(v)
            placed[v] = True
            new_max = current_max
            for u in hit:
                counts[u] += 1
                if counts[u] > new_max:
                    new_max = counts[u]
            if new_max < best:
                prefix.append(v)
                done = search(new_max)
                prefix.pop()
            else:
                done = False
            for u in hit:
                counts[u] -= 1
            placed[v] = False
            if done:
                return True
        return False

    search(0)
    if witness is None:
        return best - 1, deg_order
    return best, VertexOrdering.from_sequence(witness)
