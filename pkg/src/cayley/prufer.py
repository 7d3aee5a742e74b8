"""Classical Pruefer codec (smallest-leaf removal), kept independent of the path codec."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import MalformedSequence
from .tree import LabeledTree, degrees, trusted_tree


@dataclass(frozen=True)
class PruferSequence:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if self.n < 2:
            raise MalformedSequence(f"Pruefer sequences need n >= 2, got {self.n}")
        if len(values) != self.n - 2:
            raise MalformedSequence(f"expected {self.n - 2} values for n={self.n}, got {len(values)}")
        for v in values:
            if not isinstance(v, int) or not 1 <= v <= self.n:
                raise MalformedSequence(f"label {v!r} not within 1..{self.n}")


def prufer_encode(t: LabeledTree) -> PruferSequence:
    """Remove the smallest leaf ``n - 2`` times, recording its neighbour each time."""
    n = t.n
    if n < 2:
        raise MalformedSequence("Pruefer sequences need n >= 2")
    adj = [set(a) for a in t.adjacency()]
    leaves = [v for v in range(1, n + 1) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    out = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        out.append(nb)
        adj[nb].discard(leaf)
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return PruferSequence(n, tuple(out))


def prufer_decode(p: PruferSequence) -> LabeledTree:
    n = p.n
    deg = [1] * (n + 1)
    for v in p.values:
        deg[v] += 1
    leaves = [v for v in range(1, n + 1) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in p.values:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return trusted_tree(n, edges)


def degree_law_holds(t: LabeledTree) -> bool:
    """Each label appears ``degree - 1`` times in the tree's sequence."""
    deg = degrees(t)
    counts = [0] * (t.n + 1)
    for v in prufer_encode(t).values:
        counts[v] += 1
    return all(counts[v] == deg[v] - 1 for v in range(1, t.n + 1))
