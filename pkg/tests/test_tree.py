import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayley.errors import (
    Disconnected,
    DuplicateEdge,
    EdgeOutOfRange,
    SelfLoop,
    VertexOutOfRange,
    WrongEdgeCount,
)
from cayley.prufer import PruferSequence, prufer_decode
from cayley.tree import LabeledTree, degree, path_between, validate_graph, validate_tree


@st.composite
def trees(draw, min_n=1, max_n=30):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return validate_tree(1, [])
    seq = draw(st.lists(st.integers(1, n), min_size=n - 2, max_size=n - 2))
    return prufer_decode(PruferSequence(n, tuple(seq)))


def test_unique_tree_on_two_vertices():
    t = validate_tree(2, [(1, 2)])
    assert t == LabeledTree(2, ((1, 2),))
    assert validate_tree(2, [(2, 1)]) == t


def test_edges_normalized_and_sorted():
    t = validate_tree(4, [(4, 2), (3, 1), (2, 1)])
    assert t.edges == ((1, 2), (1, 3), (2, 4))


@pytest.mark.parametrize(
    "n, edges, error",
    [
        (4, [(1, 2), (3, 4), (1, 2)], DuplicateEdge),
        (4, [(1, 2), (3, 4), (2, 1)], DuplicateEdge),
        (3, [(1, 2), (2, 4)], EdgeOutOfRange),
        (3, [(0, 1), (1, 2)], EdgeOutOfRange),
        (3, [(1, 1), (1, 2)], SelfLoop),
        (4, [(1, 2), (2, 3)], WrongEdgeCount),
        (3, [(1, 2), (2, 3), (1, 3)], WrongEdgeCount),
        (4, [(1, 2), (2, 3), (1, 3)], Disconnected),
        (1, [(1, 2)], EdgeOutOfRange),
    ],
)
def test_validate_rejects(n, edges, error):
    with pytest.raises(error):
        validate_tree(n, edges)


def test_single_vertex_tree():
    t = validate_tree(1, [])
    assert t.edges == ()
    assert degree(t, 1) == 0
    assert path_between(t, 1, 1) == [1]


@pytest.mark.parametrize(
    "n, edges, u, v, path",
    [
        (3, [(1, 3), (2, 3)], 1, 2, [1, 3, 2]),
        (2, [(1, 2)], 1, 2, [1, 2]),
        (4, [(1, 2), (2, 3), (2, 4)], 3, 4, [3, 2, 4]),
        (4, [(1, 2), (2, 3), (2, 4)], 4, 4, [4]),
    ],
)
def test_path_between(n, edges, u, v, path):
    assert path_between(validate_tree(n, edges), u, v) == path


def test_degree_of_star():
    star = validate_tree(4, [(1, 2), (1, 3), (1, 4)])
    assert degree(star, 1) == 3
    assert degree(star, 2) == 1


@pytest.mark.parametrize("v", [0, 5, -1])
def test_vertex_out_of_range(v):
    star = validate_tree(4, [(1, 2), (1, 3), (1, 4)])
    with pytest.raises(VertexOutOfRange):
        degree(star, v)
    with pytest.raises(VertexOutOfRange):
        path_between(star, 1, v)


def test_graph_allows_disconnected_but_not_loops():
    g = validate_graph(4, [(3, 4)])
    assert g.edges == ((3, 4),)
    with pytest.raises(SelfLoop):
        validate_graph(2, [(2, 2)])
    with pytest.raises(DuplicateEdge):
        validate_graph(3, [(1, 2), (2, 1)])


@given(trees())
def test_normalization_idempotent(t):
    assert validate_tree(t.n, list(t.edges)) == t
    assert validate_tree(t.n, [(v, u) for u, v in reversed(t.edges)]) == t


@given(trees(), st.data())
@settings(max_examples=60)
def test_paths_are_simple_and_follow_edges(t, data):
    u = data.draw(st.integers(1, t.n))
    v = data.draw(st.integers(1, t.n))
    path = path_between(t, u, v)
    assert path[0] == u and path[-1] == v
    assert len(set(path)) == len(path)
    edges = set(t.edges)
    assert all((min(a, b), max(a, b)) in edges for a, b in zip(path, path[1:]))


@given(trees())
def test_degree_sum(t):
    assert sum(degree(t, v) for v in range(1, t.n + 1)) == 2 * (t.n - 1)
