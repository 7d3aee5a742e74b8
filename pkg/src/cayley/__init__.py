"""Labeled trees on n vertices: a path-construction codec, counts and sampling."""

from .counting import (
    BranchSet,
    branch_set_weight,
    brute_force_spanning_trees,
    closed_form,
    matrix_tree_count,
    sum_over_traces,
    telescoped_product,
)
from .errors import *  # noqa: F401,F403
from .path_codec import (
    Branch,
    Code,
    ConstructionTrace,
    Label,
    code_of_trace,
    decode,
    encode,
    rank,
    trace_of_code,
    unrank,
)
from .prufer import PruferSequence, prufer_decode, prufer_encode
from .sampling import (
    SamplerConfig,
    SplitMix64,
    TreeSampler,
    chi_square_uniformity,
    degree_histogram,
    enumerate_trees,
    sample_uniform,
)
from .tree import LabeledTree, SimpleGraph, degree, path_between, validate_graph, validate_tree
