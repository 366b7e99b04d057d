"""Immutable simple graphs and the primitives everything else builds on.

Vertices are the dense integers ``0..n-1``. ``Graph`` values never change
after construction; derived views (neighbour sets, bitmasks) are cached.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DomainError, FormatError


@dataclass(frozen=True, eq=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise DomainError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, row in enumerate(self.adj):
            prev = -1
            for v in row:
                if not 0 <= v < self.n:
                    raise DomainError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise DomainError(f"self-loop at {u}")
                if v <= prev:
                    raise DomainError(f"adjacency row {u} not strictly increasing")
                prev = v
        for u, row in enumerate(self.adj):
            for v in row:
                if u not in self.nbrs[v]:
                    raise DomainError(f"asymmetric adjacency: {u}->{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(r)) for r in rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    @cached_property
    def nbrs(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as integer bitsets."""
        out = []
        for row in self.adj:
            m = 0
            for v in row:
                m |= 1 << v
            out.append(m)
        return tuple(out)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def max_degree(self) -> int:
        return max((len(r) for r in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def closed_nbrs(self, u: int) -> frozenset[int]:
        return self.nbrs[u] | {u}

    def check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise DomainError(f"vertex {u} not in 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# --------------------------------------------------------------------------
# edge-list I/O
# --------------------------------------------------------------------------


def parse_graph_with_stats(text: str) -> tuple[Graph, int]:
    """Parse an edge list; also return how many duplicate edges were dropped."""
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        top = max(top, u, v)
    return Graph.from_edges(top + 1, seen), duplicates


def parse_graph(text: str) -> Graph:
    return parse_graph_with_stats(text)[0]


def format_graph(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


# --------------------------------------------------------------------------
# distances and powers
# --------------------------------------------------------------------------


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> dict[int, int]:
    """Distances from ``source`` to every vertex within ``limit`` hops."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if limit is not None and dx == limit:
            continue
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dx + 1
                queue.append(y)
    return dist


def power(g: Graph, d: int) -> Graph:
    """The graph joining every pair of vertices at distance between 1 and ``d``."""
    if d < 1:
        raise DomainError(f"power requires d >= 1, got {d}")
    if d == 1:
        return g
    rows = []
    for u in range(g.n):
        ball = bfs_distances(g, u, d)
        del ball[u]
        rows.append(tuple(sorted(ball)))
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``vertices``, relabelled ``0..k-1`` in the given order.

    Returns the graph and the map from new labels back to original ids.
    """
    index: dict[int, int] = {}
    for i, v in enumerate(vertices):
        g.check_vertex(v)
        if v in index:
            raise DomainError(f"vertex {v} repeated in vertex set")
        index[v] = i
    rows = []
    for v in vertices:
        rows.append(tuple(sorted(index[w] for w in g.adj[v] if w in index)))
    return Graph(len(index), tuple(rows)), tuple(vertices)


def subdivide(g: Graph, k: int) -> tuple[Graph, tuple[int, ...]]:
    """Replace every edge by a path with ``k`` fresh internal vertices.

    Original vertices keep their ids; new vertices are appended edge by edge.
    The second return value maps each original vertex to its id in the result.
    """
    if k < 0:
        raise DomainError(f"subdivision count must be >= 0, got {k}")
    branch = tuple(range(g.n))
    if k == 0:
        return g, branch
    edges = []
    nxt = g.n
    for u, v in g.edges():
        chain = [u, *range(nxt, nxt + k), v]
        nxt += k
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(nxt, edges), branch


def universal_vertices(g: Graph) -> list[int]:
    return [u for u in range(g.n) if len(g.adj[u]) == g.n - 1]


def complement_pairs(g: Graph, vertices: Iterable[int]) -> list[tuple[int, int]]:
    """Non-adjacent pairs ``u < v`` inside ``vertices``."""
    vs = sorted(vertices)
    return [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if v not in g.nbrs[u]]


# --------------------------------------------------------------------------
# small named graphs used in tests, fixtures and the CLI corpus
# --------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star ``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
