"""Self-contained consistency checks behind ``cayley verify``."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import product

from . import counting
from .path_codec import Code, decode, encode
from .prufer import PruferSequence, degree_law_holds, prufer_decode, prufer_encode
from .sampling import enumerate_trees
from .tree import validate_tree

RANDOM_CASES = 200


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def exhaustive_checks(m: int) -> list[Check]:
    checks = []
    trees = set()
    histogram: Counter = Counter()
    valid = round_trip = True
    for _, code, t in enumerate_trees(m):
        try:
            validate_tree(m, t.edges)
        except ValueError:
            valid = False
        round_trip &= encode(t) == code
        trees.add(t)
        if m >= 2:
            histogram[code.branch_set()] += 1
    expected = counting.closed_form(m)
    checks.append(Check(f"n={m} decoded trees valid", valid))
    checks.append(Check(f"n={m} distinct trees = {expected}", len(trees) == expected, f"got {len(trees)}"))
    checks.append(Check(f"n={m} encode(decode(c)) = c", round_trip))
    if m >= 2:
        hist_ok = all(
            histogram[b.members] == counting.branch_set_weight(b) for b in counting.iter_branch_sets(m)
        ) and sum(histogram.values()) == expected
        checks.append(Check(f"n={m} branch-set histogram = weights", hist_ok))
        prufer_trees = {prufer_decode(p) for p in _all_prufer(m)}
        checks.append(Check(f"n={m} path-codec trees = Pruefer trees", prufer_trees == trees))
        law = True
        for p in _all_prufer(m):
            t = prufer_decode(p)
            law &= prufer_encode(t) == p and degree_law_holds(t)
        checks.append(Check(f"n={m} Pruefer round trip and degree law", law))
    return checks


def _all_prufer(m: int):
    for vals in product(range(1, m + 1), repeat=m - 2):
        yield PruferSequence(m, vals)


def random_round_trips(n: int, cases: int, seed: int = 0) -> Check:
    rng = random.Random(seed)
    failures = 0
    for _ in range(cases):
        t = prufer_decode(PruferSequence(n, tuple(rng.randint(1, n) for _ in range(n - 2))))
        c = Code(n, tuple(rng.randrange(n) for _ in range(n - 2)))
        failures += decode(encode(t)) != t
        failures += encode(decode(c)) != c
    return Check(f"n={n} random round trips x{cases}", failures == 0, f"{failures} failures")


def run(n: int, max_n: int = 7) -> list[Check]:
    checks = []
    for m in range(2, min(n, counting.MAX_TRACE_SUM_N) + 1):
        a, b, c = counting.sum_over_traces(m), counting.telescoped_product(m), counting.closed_form(m)
        checks.append(Check(f"n={m} trace sum = telescoped product = n^(n-2)", a == b == c, f"{a}, {b}, {c}"))
    for m in range(1, min(n, max_n) + 1):
        checks.extend(exhaustive_checks(m))
    for m in range(1, min(n, 30) + 1):
        got = counting.matrix_tree_count(counting.complete_graph(m))
        checks.append(Check(f"n={m} matrix-tree count of K_n", got == counting.closed_form(m), str(got)))
    if n > max_n:
        checks.append(random_round_trips(n, RANDOM_CASES))
    return checks
