"""Clique approximation, semi-ladders, and maximal clique enumeration.

Vertex sets inside the search routines are integer bitsets over the host
graph's vertex ids.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, induced_subgraph
from .orderings import degeneracy_ordering

SEMI_LADDER_AUTO_LIMIT = 18


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def is_clique(h: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    for i, u in enumerate(vs):
        h.check_vertex(u)
        for v in vs[i + 1:]:
            if v == u or v not in h.nbrs[u]:
                return False
    return True


def is_maximal_clique(h: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not is_clique(h, vs):
        return False
    if not vs:
        return h.n == 0
    common = set.intersection(*(set(h.nbrs[v]) for v in vs)) - vs
    return not common


@dataclass(frozen=True)
class SemiLadder:
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.xs)

    def is_valid(self, h: Graph) -> bool:
        if len(self.xs) != len(self.ys):
            return False
        for i, (x, y) in enumerate(zip(self.xs, self.ys)):
            if x == y or y in h.nbrs[x]:
                return False
            for yj in self.ys[i + 1:]:
                if yj not in h.nbrs[x]:
                    return False
        return True


@dataclass
class CliqueReport:
    clique: list[int]
    algorithm: str
    rounds: int
    witness: SemiLadder
    omega: int | None = None
    trace: list[dict] = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {
            "clique": self.clique,
            "size": len(self.clique),
            "algorithm": self.algorithm,
            "rounds": self.rounds,
            "witness_xs": list(self.witness.xs),
            "witness_ys": list(self.witness.ys),
            "omega": self.omega,
        }


# --------------------------------------------------------------------------
# approximate clique by iterated self-reduction
# --------------------------------------------------------------------------


def _col_of_mask(h: Graph, mask: int) -> int:
    vs = _bits(mask)
    if not vs:
        return 0
    sub, _ = induced_subgraph(h, vs)
    return degeneracy_ordering(sub)[1]


def apx_clique(h: Graph, trace: bool = False) -> CliqueReport:
    """Grow a clique by absorbing universal vertices and then moving into the
    neighbourhood of a vertex whose closed neighbourhood has the largest
    coloring number.

    Ties go to the smallest id; the recorded non-neighbour of each picked
    vertex is its smallest non-neighbour in the current graph, so the picks
    and non-neighbours form a semi-ladder.
    """
    masks = h.masks
    J = (1 << h.n) - 1
    K: list[int] = []
    xs: list[int] = []
    ys: list[int] = []
    steps: list[dict] = []
    while J:
        start = J
        universal = [u for u in _bits(J) if (masks[u] | (1 << u)) & J == J]
        for u in universal:
            J &= ~(1 << u)
        K.extend(universal)
        if not J:
            if trace:
                steps.append({"start": _bits(start), "universal": universal, "pick": None})
            break
        scores = {u: _col_of_mask(h, (masks[u] | (1 << u)) & J) for u in _bits(J)}
        best = max(scores.values())
        v = min(u for u, s in scores.items() if s == best)
        non = J & ~masks[v] & ~(1 << v)
        u_low = (non & -non).bit_length() - 1
        xs.append(v)
        ys.append(u_low)
        K.append(v)
        reduced = J
        J &= masks[v]
        if trace:
            steps.append(
                {
                    "start": _bits(start),
                    "universal": universal,
                    "reduced": _bits(reduced),
                    "scores": scores,
                    "pick": v,
                    "non_neighbour": u_low,
                    "clique": list(K),
                    "remaining": _bits(J),
                }
            )
    return CliqueReport(sorted(K), "apx_clique", len(xs), SemiLadder(tuple(xs), tuple(ys)), trace=steps)


# --------------------------------------------------------------------------
# semi-ladder index
# --------------------------------------------------------------------------


@dataclass
class SemiLadderResult:
    k: int
    witness: SemiLadder
    complete: bool


class _Timeout(Exception):
    pass


def semi_ladder_index(h: Graph, cap: int | None = None, timeout: float | None = None) -> SemiLadderResult:
    """Longest semi-ladder with ``x_i != y_i`` (exhaustive, memoised).

    Only the ``x`` sequence matters: ``y_j`` just has to exist in
    ``C_j = common neighbourhood of x_1..x_{j-1}`` outside ``N[x_j]``. The best
    continuation depends on ``C_j`` alone, and ``C`` shrinks strictly each
    step, so memoising on ``C`` gives an exact search.
    """
    n = h.n
    if cap is None:
        cap = n
    masks = h.masks
    closed = [masks[v] | (1 << v) for v in range(n)]
    memo: dict[int, tuple[int, int, int]] = {}
    deadline = None if timeout is None else time.monotonic() + timeout
    best_seen = [0, ()]
    calls = [0]

    def f(C: int, depth: int, path: tuple) -> int:
        # best extension length from candidate set C, memoised with the chosen x
        if depth > best_seen[0]:
            best_seen[0] = depth
            best_seen[1] = path
        budget = cap - depth
        if budget <= 0:
            return 0
        hit = memo.get(C)
        if hit is not None:
            val, _, stored_budget = hit
            if val < stored_budget or budget <= stored_budget:
                return min(val, budget)
        calls[0] += 1
        if deadline is not None and calls[0] % 256 == 0 and time.monotonic() > deadline:
            raise _Timeout
        upper = min(bin(C).count("1"), budget)
        best, choice = 0, -1
        tried: set[int] = set()
        for x in range(n):
            if not C & ~closed[x]:
                continue
            child = C & masks[x]
            if child in tried:
                continue
            tried.add(child)
            val = 1 + f(child, depth + 1, path + (x,))
            if val > best:
                best, choice = val, x
                if best >= upper:
                    break
        memo[C] = (best, choice, budget)
        return best

    full = (1 << n) - 1
    try:
        k = f(full, 0, ())
        complete = True
        xs = []
        C = full
        while len(xs) < k:
            x = memo[C][1]
            xs.append(x)
            C &= masks[x]
    except _Timeout:
        complete = False
        k = best_seen[0]
        xs = list(best_seen[1])
    return SemiLadderResult(k, _ladder_from_xs(h, xs), complete)


def _ladder_from_xs(h: Graph, xs: list[int]) -> SemiLadder:
    masks = h.masks
    C = (1 << h.n) - 1
    ys = []
    for x in xs:
        cand = C & ~(masks[x] | (1 << x))
        ys.append((cand & -cand).bit_length() - 1)
        C &= masks[x]
    return SemiLadder(tuple(xs), tuple(ys))


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------


@dataclass
class EnumerationResult:
    cliques: set[frozenset[int]]
    q: int
    examined: int
    skipped: int


def enumerate_maximal_cliques_semiladder(h: Graph, q: int) -> EnumerationResult:
    """Maximal cliques of the form ``intersection of N[a] over a in A``, ``|A| <= q``.

    Subsets are grown in increasing id order with a running intersection.
    Extensions are cut when the intersection is empty or already a clique:
    every further intersection is then a subset of it, hence either the same
    set or not maximal.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    n = h.n
    masks = h.masks
    closed = [masks[v] | (1 << v) for v in range(n)]
    found: set[frozenset[int]] = set()
    examined = skipped = 0

    def clique_mask(m: int) -> bool:
        rest = m
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if m & ~closed[v]:
                return False
            rest ^= low
        return True

    def maximal_mask(m: int) -> bool:
        common = (1 << n) - 1
        rest = m
        while rest:
            low = rest & -rest
            common &= closed[low.bit_length() - 1]
            rest ^= low
        return common == m

    stack = [(v, closed[v], 1) for v in range(n - 1, -1, -1)]
    while stack:
        last, inter, size = stack.pop()
        examined += 1
        if inter == 0:
            skipped += 1
            continue
        if clique_mask(inter):
            if maximal_mask(inter):
                found.add(frozenset(_bits(inter)))
            else:
                skipped += 1
            continue
        skipped += 1
        if size < q:
            for a in range(n - 1, last, -1):
                stack.append((a, inter & closed[a], size + 1))
    return EnumerationResult(found, q, examined, skipped)


def bron_kerbosch(h: Graph) -> set[frozenset[int]]:
    """All maximal cliques (Tomita pivoting)."""
    if h.n == 0:
        return set()
    masks = h.masks
    out: set[frozenset[int]] = set()

    def expand(R: list[int], P: int, X: int) -> None:
        if not P and not X:
            out.add(frozenset(R))
            return
        PX = P | X
        pivot = max(_bits(PX), key=lambda u: bin(P & masks[u]).count("1"))
        for v in _bits(P & ~masks[pivot]):
            R.append(v)
            expand(R, P & masks[v], X & masks[v])
            R.pop()
            P &= ~(1 << v)
            X |= 1 << v

    expand([], (1 << h.n) - 1, 0)
    return out


def max_clique_exact(h: Graph) -> list[int]:
    """A maximum clique by branch and bound over the pivoting search tree."""
    masks = h.masks
    best: list[int] = []

    def expand(R: list[int], P: int, X: int) -> None:
        if not P:
            if len(R) > len(best):
                best[:] = R
            return
        pivot = max(_bits(P | X), key=lambda u: bin(P & masks[u]).count("1"))
        for v in _bits(P & ~masks[pivot]):
            if len(R) + bin(P).count("1") <= len(best):
                return
            R.append(v)
            expand(R, P & masks[v], X & masks[v])
            R.pop()
            P &= ~(1 << v)
            X |= 1 << v

    if h.n:
        expand([], (1 << h.n) - 1, 0)
    return sorted(best)


def clique_number(h: Graph) -> int:
    return len(max_clique_exact(h))
