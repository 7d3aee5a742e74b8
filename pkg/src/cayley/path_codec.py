"""Path-construction codec between labeled trees and codes in ``[0, n)^(n-2)``.

A tree is grown from vertex 1.  The first path runs from 1 to 2; every later
path starts at an already drawn vertex and ends at the smallest label not yet
drawn (the *reserved terminal*).  Each of the ``n - 2`` code positions records
one step of that process:

* ``v_s <= s``: a **branch** step.  The open path is closed at the reserved
  terminal, and the next path starts at the ``(v_s + 1)``-th drawn vertex.
  Exactly ``s + 1`` vertices are drawn at that moment.
* ``v_s > s``: a **label** step.  The open path is extended by the vertex of
  rank ``v_s - s`` among the labels that are neither drawn nor reserved.
  There are ``n - s - 1`` of them.

So position ``s`` offers ``s + 1`` branch choices and ``n - s - 1`` label
choices, ``n`` in total, and every word over ``[0, n)`` is a valid code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import MalformedCode, MalformedTrace, RankOutOfRange
from .tree import LabeledTree, parents_from_root, trusted_tree


@dataclass(frozen=True)
class Code:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise MalformedCode(f"vertex count must be at least 1, got {self.n}")
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != max(self.n - 2, 0):
            raise MalformedCode(
                f"a code for n={self.n} has {max(self.n - 2, 0)} values, got {len(values)}"
            )
        for s, v in enumerate(values, 1):
            if not isinstance(v, int) or not 0 <= v < self.n:
                raise MalformedCode(f"value {v!r} at position {s} not within [0, {self.n})")

    def branch_positions(self) -> list[int]:
        return [s for s, v in enumerate(self.values, 1) if v <= s]

    def branch_set(self) -> frozenset[int]:
        """The branch sizes ``k = s + 1`` implied by this code's branch steps."""
        return frozenset(s + 1 for s in self.branch_positions())


@dataclass(frozen=True)
class Branch:
    attach_index: int  # 1-based position in draw order


@dataclass(frozen=True)
class Label:
    label: int


Step = Union[Branch, Label]


@dataclass(frozen=True)
class ConstructionTrace:
    n: int
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


class _Fenwick:
    """Binary indexed tree over 0/1 flags at positions ``1..size``, all set."""

    __slots__ = ("size", "tree", "top")

    def __init__(self, size: int):
        self.size = size
        self.tree = [i & -i for i in range(size + 1)]
        self.top = 1 << size.bit_length() if size else 0

    def clear(self, i: int) -> None:
        tree, size = self.tree, self.size
        while i <= size:
            tree[i] -= 1
            i += i & -i

    def prefix(self, i: int) -> int:
        tree = self.tree
        total = 0
        while i > 0:
            total += tree[i]
            i -= i & -i
        return total

    def kth(self, k: int) -> int:
        """Position of the ``k``-th set flag (1-based)."""
        tree, size = self.tree, self.size
        pos = 0
        step = self.top
        while step:
            nxt = pos + step
            if nxt <= size and tree[nxt] < k:
                pos = nxt
                k -= tree[nxt]
            step >>= 1
        return pos + 1


class DecoderState:
    """Mutable state of one construction run.

    ``drawn`` is the draw order, ``reserved`` the terminal of the open path and
    ``tip`` its last drawn vertex.  A label is *free* when it is neither drawn
    nor reserved.
    """

    def __init__(self, n: int):
        self.n = n
        self.drawn = [1]
        self.position = [0] * (n + 1)  # 1-based index in draw order, 0 if undrawn
        self.position[1] = 1
        self.reserved = 2
        self.tip = 1
        self.edges: list[tuple[int, int]] = []
        self._free = _Fenwick(n)
        self._free.clear(1)
        self._free.clear(2)
        self.low = 2  # smallest undrawn label

    @property
    def step(self) -> int:
        """1-based index of the next step; equals the number of drawn vertices."""
        return len(self.drawn)

    def _draw(self, v: int) -> None:
        self.drawn.append(v)
        self.position[v] = len(self.drawn)

    def free_label(self, rank: int) -> int:
        return self._free.kth(rank)

    def free_rank(self, label: int) -> int:
        return self._free.prefix(label)

    def is_free(self, label: int) -> bool:
        return 1 <= label <= self.n and not self.position[label] and label != self.reserved

    def label(self, v: int) -> None:
        self.edges.append((self.tip, v))
        self._draw(v)
        self._free.clear(v)
        self.tip = v

    def branch(self, attach_index: int) -> None:
        self.close()
        self._draw(self.reserved)
        self.tip = self.drawn[attach_index - 1]
        low, position = self.low, self.position
        while position[low]:
            low += 1
        self.low = low
        self.reserved = low
        self._free.clear(low)

    def close(self) -> None:
        self.edges.append((self.tip, self.reserved))


def _small_tree(n: int) -> LabeledTree:
    return trusted_tree(n, [(1, 2)] if n == 2 else [])


def decode(code: Code) -> LabeledTree:
    n = code.n
    if n <= 2:
        return _small_tree(n)
    # DecoderState inlined; this loop dominates enumeration and sampling.
    drawn = [1]
    is_drawn = bytearray(n + 2)
    is_drawn[1] = 1
    is_drawn[n + 1] = 1
    free = _Fenwick(n)
    free.clear(1)
    free.clear(2)
    tree, top = free.tree, free.top
    reserved = low = 2
    tip = 1
    edges = []
    s = 0
    for v in code.values:
        s += 1
        if v <= s:
            edges.append((tip, reserved))
            drawn.append(reserved)
            is_drawn[reserved] = 1
            tip = drawn[v]
            while is_drawn[low]:
                low += 1
            reserved = low
            i = low
        else:
            k = v - s
            pos = 0
            step = top
            while step:
                nxt = pos + step
                if nxt <= n and tree[nxt] < k:
                    pos = nxt
                    k -= tree[nxt]
                step >>= 1
            w = pos + 1
            edges.append((tip, w))
            drawn.append(w)
            is_drawn[w] = 1
            tip = w
            i = w
        while i <= n:
            tree[i] -= 1
            i += i & -i
    edges.append((tip, reserved))
    return trusted_tree(n, edges)


def encode(t: LabeledTree) -> Code:
    n = t.n
    if n <= 2:
        return Code(n, ())
    parent = parents_from_root(t, 1)
    st = DecoderState(n)
    values: list[int] = []
    pending = _interior(parent, st.position, 2)
    while True:
        for w in pending:
            s = st.step
            values.append(s + st.free_rank(w))
            st.label(w)
        if len(values) == n - 2:
            break
        # Closing draws the reserved terminal; the next one is the smallest
        # label still undrawn.
        x = st.low + 1
        while st.position[x] or x == st.reserved:
            x += 1
        pending = _interior(parent, st.position, x, closing=st.reserved)
        attach = parent[pending[0]] if pending else parent[x]
        attach_index = st.position[attach] or st.step + 1
        values.append(attach_index - 1)
        st.branch(attach_index)
        assert st.reserved == x
    return Code(n, tuple(values))


def _interior(parent: list[int], position: list[int], x: int, closing: int = 0) -> list[int]:
    """Undrawn vertices strictly between the drawn subtree and ``x``, root side first.

    ``closing`` is treated as drawn; it is about to be.
    """
    chain = []
    w = parent[x]
    while not position[w] and w != closing:
        chain.append(w)
        w = parent[w]
    chain.reverse()
    return chain


def trace_of_code(code: Code) -> ConstructionTrace:
    n = code.n
    if n <= 2:
        return ConstructionTrace(n, ())
    st = DecoderState(n)
    steps: list[Step] = []
    for s, v in enumerate(code.values, 1):
        if v <= s:
            steps.append(Branch(v + 1))
            st.branch(v + 1)
        else:
            w = st.free_label(v - s)
            steps.append(Label(w))
            st.label(w)
    return ConstructionTrace(n, tuple(steps))


def code_of_trace(tr: ConstructionTrace) -> Code:
    n = tr.n
    if n < 1:
        raise MalformedTrace(f"vertex count must be at least 1, got {n}")
    if len(tr.steps) != max(n - 2, 0):
        raise MalformedTrace(f"a trace for n={n} has {max(n - 2, 0)} steps, got {len(tr.steps)}")
    if n <= 2:
        return Code(n, ())
    st = DecoderState(n)
    values = []
    for s, step in enumerate(tr.steps, 1):
        if isinstance(step, Branch):
            if not 1 <= step.attach_index <= s + 1:
                raise MalformedTrace(f"attach index {step.attach_index} at step {s} not within 1..{s + 1}")
            values.append(step.attach_index - 1)
            st.branch(step.attach_index)
        elif isinstance(step, Label):
            if not st.is_free(step.label):
                raise MalformedTrace(f"label {step.label} at step {s} is drawn, reserved or out of range")
            values.append(s + st.free_rank(step.label))
            st.label(step.label)
        else:
            raise MalformedTrace(f"unknown step {step!r}")
    return Code(n, tuple(values))


def code_space_size(n: int) -> int:
    return n ** (n - 2) if n >= 2 else 1


def code_rank(code: Code) -> int:
    """Big-endian base-``n`` reading of the code values."""
    r = 0
    n = code.n
    for v in code.values:
        r = r * n + v
    return r


def code_unrank(n: int, r: int) -> Code:
    if n < 1:
        raise RankOutOfRange(f"vertex count must be at least 1, got {n}")
    if not 0 <= r < code_space_size(n):
        raise RankOutOfRange(f"rank {r} not within [0, {n}^{n - 2})")
    length = max(n - 2, 0)
    values = [0] * length
    for i in range(length - 1, -1, -1):
        r, values[i] = divmod(r, n)
    return Code(n, tuple(values))


def rank(t: LabeledTree) -> int:
    return code_rank(encode(t))


def unrank(n: int, r: int) -> LabeledTree:
    return decode(code_unrank(n, r))

