"""Slow, obviously-correct reference computations for tiny graphs.

Deliberately written over plain edge sets with no reuse of the library's
search code.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def edge_set(g) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def all_pairs_distances(g) -> list[list[float]]:
    n = g.n
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def power_edges(g, d) -> set[frozenset[int]]:
    dist = all_pairs_distances(g)
    return {frozenset((i, j)) for i in range(g.n) for j in range(i + 1, g.n) if dist[i][j] <= d}


def simple_paths_from(g, u, max_len):
    """Every simple path starting at u with at most max_len edges."""
    out = []

    def walk(path):
        out.append(list(path))
        if len(path) - 1 == max_len:
            return
        for w in g.adj[path[-1]]:
            if w not in path:
                path.append(w)
                walk(path)
                path.pop()

    walk([u])
    return out


def wreach_by_paths(g, seq, u, r) -> set[int]:
    pos = {v: i for i, v in enumerate(seq)}
    hits = set()
    for path in simple_paths_from(g, u, r):
        v = path[-1]
        if pos[v] <= pos[u] and all(pos[w] >= pos[v] for w in path):
            hits.add(v)
    return hits


def wcol_by_paths(g, seq, r) -> int:
    return max((len(wreach_by_paths(g, seq, u, r)) for u in range(g.n)), default=0)


def min_wcol_by_permutations(g, r) -> int:
    return min(wcol_by_paths(g, list(p), r) for p in permutations(range(g.n)))


def is_cluster_class(edges, cls) -> bool:
    for a, b, c in permutations(cls, 3):
        if frozenset((a, b)) in edges and frozenset((b, c)) in edges and frozenset((a, c)) not in edges:
            return False
    return True


def is_subcoloring(g, color) -> bool:
    edges = edge_set(g)
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(color):
        groups.setdefault(c, []).append(v)
    return all(is_cluster_class(edges, cls) for cls in groups.values())


def min_subchromatic(g) -> int:
    for k in range(1, g.n + 1):
        for color in product(range(k), repeat=g.n):
            if is_subcoloring(g, color):
                return k
    return 0


def chromatic(g) -> int:
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        for color in product(range(k), repeat=g.n):
            if all(color[u] != color[v] for u, v in edges):
                return k
    return g.n


def clique_sets(g):
    edges = edge_set(g)
    for k in range(1, g.n + 1):
        for vs in combinations(range(g.n), k):
            if all(frozenset(p) in edges for p in combinations(vs, 2)):
                yield frozenset(vs)


def maximal_cliques(g) -> set[frozenset[int]]:
    cl = list(clique_sets(g))
    return {c for c in cl if not any(c < o for o in cl)}


def omega(g) -> int:
    return max((len(c) for c in clique_sets(g)), default=0)


def semi_ladder_index(g) -> int:
    """Longest pair sequence (x_i, y_i), x_i != y_i, x_i y_i non-edge,
    x_i y_j edge for i < j, by plain DFS over pair sequences."""
    edges = edge_set(g)
    pairs = [(x, y) for x in range(g.n) for y in range(g.n) if x != y and frozenset((x, y)) not in edges]
    best = 0

    def extend(xs, ys):
        nonlocal best
        best = max(best, len(xs))
        for x, y in pairs:
            if all(frozenset((xi, y)) in edges for xi in xs):
                extend(xs + [x], ys + [y])

    extend([], [])
    return best


def intersection_cliques_all_subsets(g, q) -> set[frozenset[int]]:
    maxi = maximal_cliques(g)
    closed = [set(g.adj[v]) | {v} for v in range(g.n)]
    out = set()
    for k in range(1, q + 1):
        for A in combinations(range(g.n), k):
            inter = frozenset(set.intersection(*(closed[a] for a in A)))
            if inter in maxi:
                out.add(inter)
    return out


def col_by_permutations(g) -> int:
    best = g.n
    for p in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(p)}
        c = 1 + max((sum(1 for w in g.adj[u] if pos[w] < pos[u]) for u in range(g.n)), default=0)
        best = min(best, c)
    return best
