"""Clustering a graph power into cliques via the leader map.

Every vertex ``u`` gets as leader the earliest vertex (in the ordering) that
it weakly reaches within radius ``d // 2``. Vertices with a common leader are
within distance ``d`` of each other, so the fibres of the leader map are
cliques of ``G^d``. Ordering the blocks by their leaders keeps the quotient
about as sparse as ``G`` itself at radius ``2dr``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, ValidationError
from .graph import Graph, bfs_distances, power
from .orderings import VertexOrdering, wreach, wreach_distances


@dataclass(frozen=True)
class Clustering:
    d: int
    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    leader: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.blocks)

    def validate(self, gd: Graph) -> None:
        """Raise ``ValidationError`` unless this is a clustering of ``gd``."""
        n = len(self.block_of)
        if gd.n != n:
            raise ValidationError(f"clustering covers {n} vertices, graph has {gd.n}")
        seen = [False] * n
        for b, block in enumerate(self.blocks):
            if not block:
                raise ValidationError(f"block {b} is empty")
            for v in block:
                if seen[v] or self.block_of[v] != b:
                    raise ValidationError(f"vertex {v} misassigned")
                seen[v] = True
            for i, u in enumerate(block):
                for v in block[i + 1:]:
                    if v not in gd.nbrs[u]:
                        raise ValidationError(f"block {b} is not a clique: {u},{v} non-adjacent")
        if not all(seen):
            raise ValidationError("blocks do not cover every vertex")
        if len(set(self.leader)) != len(self.leader):
            raise ValidationError("two blocks share a leader")

    def format(self) -> str:
        return "".join(
            f"{ld}: {' '.join(map(str, blk))}\n" for ld, blk in zip(self.leader, self.blocks)
        )


@dataclass(frozen=True)
class QuotientGraph:
    graph: Graph
    clustering: Clustering = field(repr=False)


def leaders(g: Graph, order: VertexOrdering, d: int) -> list[int]:
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    dists = wreach_distances(g, order, d // 2)
    pos = order.position
    return [min(dv, key=pos.__getitem__) for dv in dists]


def leader(g: Graph, order: VertexOrdering, u: int, d: int) -> int:
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    return wreach(g, order, u, d // 2)[0]


def _check_block_distances(g: Graph, blocks, d: int) -> None:
    for b, block in enumerate(blocks):
        if len(block) < 2:
            continue
        members = set(block)
        for u in block:
            ball = bfs_distances(g, u, d)
            if not members.issubset(ball):
                raise ValidationError(f"block {b} has a pair at distance > {d}")


def build_clustering(g: Graph, order: VertexOrdering, d: int, check: bool = True) -> Clustering:
    """Fibres of the leader map; block ids follow the ordering of their leaders."""
    lead = leaders(g, order, d)
    pos = order.position
    distinct = sorted(set(lead), key=pos.__getitem__)
    bid = {ld: i for i, ld in enumerate(distinct)}
    members: list[list[int]] = [[] for _ in distinct]
    for u in range(g.n):
        members[bid[lead[u]]].append(u)
    blocks = tuple(tuple(m) for m in members)
    if check:
        _check_block_distances(g, blocks, d)
    return Clustering(
        d=d,
        block_of=tuple(bid[lead[u]] for u in range(g.n)),
        blocks=blocks,
        leader=tuple(distinct),
    )


def quotient(gd: Graph, clustering: Clustering) -> QuotientGraph:
    clustering.validate(gd)
    bo = clustering.block_of
    edges = set()
    for u, v in gd.edges():
        a, b = bo[u], bo[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return QuotientGraph(Graph.from_edges(clustering.size, edges), clustering)


def quotient_ordering(clustering: Clustering, order: VertexOrdering) -> VertexOrdering:
    """Blocks ordered by the rank of their leaders."""
    pos = order.position
    seq = sorted(range(clustering.size), key=lambda b: pos[clustering.leader[b]])
    return VertexOrdering.from_sequence(seq)


@dataclass
class BoundReport:
    d: int
    r: int
    blocks: int
    lhs: int
    rhs: int
    rhs_tight: int
    radius: int
    tight_radius: int
    per_block_violations: list[int]
    tight_violations: list[int]
    leader_not_common: list[int]

    @property
    def passed(self) -> bool:
        return (
            self.lhs <= self.rhs
            and not self.per_block_violations
            and not self.tight_violations
            and not self.leader_not_common
        )

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "r": self.r,
            "blocks": self.blocks,
            "lhs_quotient_wcol": self.lhs,
            "rhs_wcol": self.rhs,
            "rhs_radius": self.radius,
            "rhs_tight_wcol": self.rhs_tight,
            "rhs_tight_radius": self.tight_radius,
            "per_block_violations": self.per_block_violations,
            "tight_violations": self.tight_violations,
            "leader_not_common": self.leader_not_common,
            "passed": self.passed,
        }


def verify_clustering_bound(
    g: Graph,
    order: VertexOrdering,
    d: int,
    r: int,
    clustering: Clustering | None = None,
    gd: Graph | None = None,
) -> BoundReport:
    """Check the quotient's weak reachability against ``G`` at radius ``2dr``.

    Per block ``A``: ``|WReach_r[G^d/X, tau, A]| <= |WReach_2dr[G, sigma, lead(A)]|``.
    The same test is repeated at the sharper radius ``r * (d + 2*(d//2))``,
    which is the longest walk the argument actually builds.
    """
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if clustering is None:
        clustering = build_clustering(g, order, d)
    if gd is None:
        gd = power(g, d)
    q = quotient(gd, clustering)
    tau = quotient_ordering(clustering, order)
    q_reach = wreach_distances(q.graph, tau, r)

    radius = 2 * d * r
    tight = r * (d + 2 * (d // 2))
    g_reach = wreach_distances(g, order, radius)
    size_at = [len(dv) for dv in g_reach]
    size_tight = [sum(1 for x in dv.values() if x <= tight) for dv in g_reach]

    per_block, tight_bad = [], []
    for b, lead in enumerate(clustering.leader):
        k = len(q_reach[b])
        if k > size_at[lead]:
            per_block.append(b)
        if k > size_tight[lead]:
            tight_bad.append(b)

    half = d // 2
    half_reach = g_reach if half <= radius else wreach_distances(g, order, half)
    not_common = []
    for b, block in enumerate(clustering.blocks):
        lead = clustering.leader[b]
        if not all(half_reach[a].get(lead, half + 1) <= half for a in block):
            not_common.append(b)

    return BoundReport(
        d=d,
        r=r,
        blocks=clustering.size,
        lhs=max((len(s) for s in q_reach), default=0),
        rhs=max(size_at, default=0),
        rhs_tight=max(size_tight, default=0),
        radius=radius,
        tight_radius=tight,
        per_block_violations=per_block,
        tight_violations=tight_bad,
        leader_not_common=not_common,
    )
