"""Labeled trees and simple graphs on vertices 1..n.

Both types store their edges normalized to ``(min, max)`` and sorted, so
dataclass equality and hashing coincide with edge-set equality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeOutOfRange,
    InvalidTree,
    SelfLoop,
    VertexOutOfRange,
    WrongEdgeCount,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[Edge, ...]

    def adjacency(self) -> list[list[int]]:
        return _adjacency(self.n, self.edges)


@dataclass(frozen=True)
class LabeledTree:
    """A tree on vertices ``1..n``; build one with :func:`validate_tree`."""

    n: int
    edges: tuple[Edge, ...]

    def adjacency(self) -> list[list[int]]:
        return _adjacency(self.n, self.edges)

    def as_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges)

    def __str__(self) -> str:
        return " ".join(f"{u}-{v}" for u, v in self.edges)


def _adjacency(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _normalize(n: int, edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    seen: set[Edge] = set()
    for edge in edges:
        u, v = edge
        if not (1 <= u <= n and 1 <= v <= n):
            raise EdgeOutOfRange(f"edge ({u}, {v}) not within 1..{n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed more than once")
        seen.add(e)
    return tuple(sorted(seen))


def validate_graph(n: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
    if n < 1:
        raise InvalidTree(f"vertex count must be at least 1, got {n}")
    return SimpleGraph(n, _normalize(n, edges))


def validate_tree(n: int, edges: Iterable[Sequence[int]]) -> LabeledTree:
    """Check that ``edges`` form a tree on ``1..n`` and return it normalized.

    Raises EdgeOutOfRange, SelfLoop, DuplicateEdge, WrongEdgeCount or
    Disconnected, checked in that order.
    """
    g = validate_graph(n, edges)
    if len(g.edges) != n - 1:
        raise WrongEdgeCount(f"a tree on {n} vertices has {n - 1} edges, got {len(g.edges)}")
    if _reachable_count(g.adjacency(), 1) != n:
        raise Disconnected("edge set does not connect all vertices")
    return LabeledTree(n, g.edges)


def _reachable_count(adj: list[list[int]], start: int) -> int:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen)


def trusted_tree(n: int, edges: Iterable[Edge]) -> LabeledTree:
    # For internal producers (decoders) whose output is a tree by construction.
    return LabeledTree(n, tuple(sorted((u, v) if u < v else (v, u) for u, v in edges)))


def _check_vertex(t: LabeledTree | SimpleGraph, v: int) -> None:
    if not 1 <= v <= t.n:
        raise VertexOutOfRange(f"vertex {v} not within 1..{t.n}")


def path_between(t: LabeledTree, u: int, v: int) -> list[int]:
    """The unique simple path from ``u`` to ``v``, both ends included."""
    _check_vertex(t, u)
    _check_vertex(t, v)
    if u == v:
        return [u]
    adj = t.adjacency()
    parent = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in adj[x]:
            if w not in parent:
                parent[w] = x
                queue.append(w)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def degree(t: LabeledTree, v: int) -> int:
    _check_vertex(t, v)
    return sum((v == a) + (v == b) for a, b in t.edges)


def degrees(t: LabeledTree) -> list[int]:
    """Degree of every vertex, indexed by label (index 0 unused)."""
    deg = [0] * (t.n + 1)
    for a, b in t.edges:
        deg[a] += 1
        deg[b] += 1
    return deg


def parents_from_root(t: LabeledTree, root: int = 1) -> list[int]:
    """Parent of each vertex when the tree hangs from ``root`` (0 for the root)."""
    adj = t.adjacency()
    parent = [0] * (t.n + 1)
    seen = bytearray(t.n + 1)
    seen[root] = 1
    stack = [root]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if not seen[w]:
                seen[w] = 1
                parent[w] = x
                stack.append(w)
    return parent
