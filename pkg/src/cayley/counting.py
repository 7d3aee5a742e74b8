"""Exact tree counts: closed form, the sum over branch sets, and spanning-tree oracles.

Everything here is integer arithmetic; nothing touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .errors import CayleyError, SizeLimitExceeded
from .tree import SimpleGraph

MAX_TRACE_SUM_N = 26
MAX_BRUTE_FORCE_EDGES = 20


@dataclass(frozen=True)
class BranchSet:
    """Sizes ``k`` (``2 <= k <= n - 1``) at which a new path was started."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        if self.n < 2:
            raise CayleyError(f"branch sets need n >= 2, got {self.n}")
        bad = [k for k in members if not 2 <= k <= self.n - 1]
        if bad:
            raise CayleyError(f"branch sizes {sorted(bad)} not within 2..{self.n - 1}")


def closed_form(n: int) -> int:
    """``n ** (n - 2)``; ``n = 1`` gives 1 by convention."""
    if n < 1:
        raise CayleyError(f"vertex count must be at least 1, got {n}")
    return n ** (n - 2) if n >= 2 else 1


def factor(n: int, s: int, is_branch: bool) -> int:
    # Position s contributes s + 1 attachment choices when k = s + 1 is a
    # branch size, otherwise n - s - 1 choices of intermediate label.
    return s + 1 if is_branch else n - s - 1


def branch_set_weight(b: BranchSet) -> int:
    n = b.n
    return math.prod(factor(n, s, (s + 1) in b.members) for s in range(1, n - 1))


def iter_branch_sets(n: int) -> Iterator[BranchSet]:
    for choice in product((False, True), repeat=max(n - 2, 0)):
        yield BranchSet(n, frozenset(s + 1 for s, on in enumerate(choice, 1) if on))


def _partial_weights(n: int, positions: range) -> list[int]:
    weights = [1]
    for s in positions:
        on, off = factor(n, s, True), factor(n, s, False)
        weights = [w * on for w in weights] + [w * off for w in weights]
    return weights


def sum_over_traces(n: int) -> int:
    """Sum of the weights of all ``2 ** (n - 2)`` branch sets, one term per set.

    Subsets are split into a low and a high half of positions; every pair of
    halves is multiplied out individually, so no term is merged before it is
    added.
    """
    if n < 2:
        raise CayleyError(f"vertex count must be at least 2, got {n}")
    if n > MAX_TRACE_SUM_N:
        raise SizeLimitExceeded(f"explicit enumeration limited to n <= {MAX_TRACE_SUM_N}")
    mid = 1 + (n - 2) // 2
    low = _partial_weights(n, range(1, mid))
    high = _partial_weights(n, range(mid, n - 1))
    total = 0
    for w in low:
        total += sum(map(w.__mul__, high))
    return total


def telescoped_product(n: int) -> int:
    if n < 2:
        raise CayleyError(f"vertex count must be at least 2, got {n}")
    return math.prod((s + 1) + (n - s - 1) for s in range(1, n - 1))


def laplacian(g: SimpleGraph) -> list[list[int]]:
    m = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        i, j = u - 1, v - 1
        m[i][i] += 1
        m[j][j] += 1
        m[i][j] -= 1
        m[j][i] -= 1
    return m


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def matrix_tree_count(g: SimpleGraph) -> int:
    """Spanning trees of ``g``: determinant of the Laplacian without vertex 1."""
    lap = laplacian(g)
    minor = [row[1:] for row in lap[1:]]
    return bareiss_determinant(minor)


def brute_force_spanning_trees(g: SimpleGraph) -> int:
    if len(g.edges) > MAX_BRUTE_FORCE_EDGES:
        raise SizeLimitExceeded(f"subset enumeration limited to {MAX_BRUTE_FORCE_EDGES} edges")
    count = 0
    for subset in combinations(g.edges, g.n - 1):
        if _acyclic(g.n, subset):
            count += 1
    return count


def _acyclic(n: int, edges) -> bool:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple(combinations(range(1, n + 1), 2)))


def cycle_graph(n: int) -> SimpleGraph:
    edges = [(i, i + 1) for i in range(1, n)]
    if n >= 3:
        edges.append((1, n))
    return SimpleGraph(n, tuple(sorted(edges)))
