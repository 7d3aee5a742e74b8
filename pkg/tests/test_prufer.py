from itertools import product

import pytest

from cayley.errors import MalformedSequence
from cayley.path_codec import Code, decode
from cayley.prufer import PruferSequence, degree_law_holds, prufer_decode, prufer_encode
from cayley.tree import degree, validate_tree
from oracles import brute_force_trees


@pytest.mark.parametrize(
    "n, edges, seq",
    [
        (4, [(1, 2), (2, 3), (2, 4)], (2, 2)),
        (4, [(1, 2), (1, 3), (1, 4)], (1, 1)),
        (4, [(1, 2), (2, 3), (3, 4)], (2, 3)),
        (2, [(1, 2)], ()),
    ],
)
def test_examples_both_ways(n, edges, seq):
    t = validate_tree(n, edges)
    assert prufer_encode(t).values == seq
    assert prufer_decode(PruferSequence(n, seq)) == t


@pytest.mark.parametrize("n, values", [(4, (2,)), (4, (0, 1)), (4, (5, 1)), (1, ()), (3, (1, 1))])
def test_malformed(n, values):
    with pytest.raises(MalformedSequence):
        PruferSequence(n, values)


@pytest.mark.parametrize("n", range(2, 8))
def test_round_trips_and_degree_law(n):
    for values in product(range(1, n + 1), repeat=n - 2):
        p = PruferSequence(n, values)
        t = prufer_decode(p)
        assert prufer_encode(t) == p
        assert degree_law_holds(t)
        for v in range(1, n + 1):
            assert values.count(v) == degree(t, v) - 1


@pytest.mark.parametrize("n", range(2, 7))
def test_decodes_every_tree(n):
    trees = {prufer_decode(PruferSequence(n, v)).edges for v in product(range(1, n + 1), repeat=n - 2)}
    assert trees == brute_force_trees(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_same_tree_set_as_path_codec(n):
    path = {decode(Code(n, v)) for v in product(range(n), repeat=n - 2)}
    prufer = {prufer_decode(PruferSequence(n, v)) for v in product(range(1, n + 1), repeat=n - 2)}
    assert path == prufer
    assert len(path) == n ** (n - 2)
