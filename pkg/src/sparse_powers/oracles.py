"""Brute-force ground truth used to cross-check the constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cliques import clique_number, max_clique_exact
from .errors import DomainError, FormatError, SizeLimitError
from .graph import Graph, power
from .orderings import degeneracy_ordering

EXACT_CHROMATIC_LIMIT = 18
ROOT = -1


def exact_chromatic(h: Graph, limit: int = EXACT_CHROMATIC_LIMIT) -> int:
    """Chromatic number by iterative deepening from the clique number upward."""
    if h.n > limit:
        raise SizeLimitError("exact_chromatic", h.n, limit)
    if h.n == 0:
        return 0
    order, col = degeneracy_ordering(h)
    seq = list(order.sequence)
    nb = h.adj
    color = [-1] * h.n

    def search(i: int, used: int, k: int) -> bool:
        if i == len(seq):
            return True
        v = seq[i]
        taken = {color[w] for w in nb[v]}
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if search(i + 1, max(used, c + 1), k):
                    return True
                color[v] = -1
        return False

    k = max(1, clique_number(h))
    while k < col and not search(0, 0, k):
        k += 1
    return k


@dataclass
class SandwichReport:
    omega: int
    chi: int
    col: int

    @property
    def passed(self) -> bool:
        return self.omega <= self.chi <= self.col

    @property
    def ratio(self) -> float:
        return self.col / self.omega if self.omega else 0.0

    def as_dict(self) -> dict:
        return {
            "omega": self.omega,
            "chi": self.chi,
            "col": self.col,
            "col_over_omega": round(self.ratio, 6),
            "passed": self.passed,
        }


def check_sandwich(h: Graph, limit: int = EXACT_CHROMATIC_LIMIT) -> SandwichReport:
    chi = exact_chromatic(h, limit)
    col = degeneracy_ordering(h)[1] if h.n else 0
    return SandwichReport(clique_number(h), chi, col)


@dataclass
class GeneralBoundsReport:
    d: int
    chi: int
    omega: int
    exponent: int

    @property
    def bound(self) -> int:
        return self.omega**self.exponent

    @property
    def passed(self) -> bool:
        return self.chi <= self.bound

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "chi": self.chi,
            "omega": self.omega,
            "exponent": self.exponent,
            "bound": self.bound,
            "passed": self.passed,
        }


def check_general_bounds(g: Graph, d: int, limit: int = EXACT_CHROMATIC_LIMIT) -> GeneralBoundsReport:
    """``chi(G^d) <= omega(G^d)^2`` for even ``d`` and ``^3`` for odd ``d``."""
    if d < 2:
        raise DomainError(f"general bounds need d >= 2, got {d}")
    h = power(g, d)
    return GeneralBoundsReport(d, exact_chromatic(h, limit), clique_number(h), 2 if d % 2 == 0 else 3)


# --------------------------------------------------------------------------
# elimination forests
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class EliminationForest:
    """Rooted forest given by parent pointers; roots have parent ``ROOT``."""

    parent: tuple[int, ...]

    def __post_init__(self):
        n = len(self.parent)
        for v, p in enumerate(self.parent):
            if p != ROOT and not 0 <= p < n:
                raise FormatError(f"parent {p} of {v} out of range")
            if p == v:
                raise FormatError(f"vertex {v} is its own parent")
        # every parent chain must end at a root
        state = [0] * n  # 0 unseen, 1 on stack, 2 done
        for s in range(n):
            chain = []
            v = s
            while v != ROOT and state[v] == 0:
                state[v] = 1
                chain.append(v)
                v = self.parent[v]
            if v != ROOT and state[v] == 1:
                raise FormatError(f"cycle through vertex {v}")
            for c in chain:
                state[c] = 2

    @property
    def depths(self) -> list[int]:
        """Number of vertices on the path from each vertex up to its root."""
        n = len(self.parent)
        depth = [0] * n
        for s in range(n):
            chain = []
            v = s
            while v != ROOT and depth[v] == 0:
                chain.append(v)
                v = self.parent[v]
            base = 0 if v == ROOT else depth[v]
            for c in reversed(chain):
                base += 1
                depth[c] = base
        return depth

    @property
    def depth(self) -> int:
        return max(self.depths, default=0)

    def ancestors(self, v: int) -> list[int]:
        out = []
        v = self.parent[v]
        while v != ROOT:
            out.append(v)
            v = self.parent[v]
        return out

    def format(self) -> str:
        return "".join(f"{v} {p}\n" for v, p in enumerate(self.parent))


def parse_forest(text: str) -> EliminationForest:
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v, p = map(int, line.split())
        except ValueError:
            raise FormatError(f"forest line {lineno}: expected 'vertex parent'") from None
        pairs[v] = p
    if sorted(pairs) != list(range(len(pairs))):
        raise FormatError("forest must list every vertex 0..n-1 once")
    return EliminationForest(tuple(pairs[v] for v in range(len(pairs))))


def validate_elimination_forest(h: Graph, forest: EliminationForest) -> bool:
    """True iff every edge of ``h`` joins an ancestor-descendant pair.

    Uses Euler-tour intervals; ``forest_edges_ok_naive`` is the pointer-chasing
    reference it is tested against.
    """
    n = len(forest.parent)
    if n != h.n:
        raise FormatError(f"forest has {n} vertices, graph has {h.n}")
    children: list[list[int]] = [[] for _ in range(n)]
    roots = []
    for v, p in enumerate(forest.parent):
        (roots if p == ROOT else children[p]).append(v)
    tin = [0] * n
    tout = [0] * n
    clock = 0
    for r in roots:
        stack = [(r, False)]
        while stack:
            v, leaving = stack.pop()
            if leaving:
                tout[v] = clock
                clock += 1
                continue
            tin[v] = clock
            clock += 1
            stack.append((v, True))
            stack.extend((c, False) for c in children[v])

    def related(a: int, b: int) -> bool:
        return (tin[a] <= tin[b] and tout[b] <= tout[a]) or (tin[b] <= tin[a] and tout[a] <= tout[b])

    return all(related(u, v) for u, v in h.edges())


def forest_edges_ok_naive(h: Graph, parent: Sequence[int]) -> bool:
    anc = []
    for v in range(len(parent)):
        s = set()
        p = parent[v]
        while p != ROOT:
            s.add(p)
            p = parent[p]
        anc.append(s)
    return all(u in anc[v] or v in anc[u] for u, v in h.edges())


__all__ = [
    "EliminationForest",
    "GeneralBoundsReport",
    "SandwichReport",
    "check_general_bounds",
    "check_sandwich",
    "exact_chromatic",
    "forest_edges_ok_naive",
    "max_clique_exact",
    "parse_forest",
    "validate_elimination_forest",
]
