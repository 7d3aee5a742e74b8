"""Enumeration of all trees through the path codec, seeded uniform sampling,
and the statistics used to check the sampler.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import CayleyError, SizeLimitExceeded
from .path_codec import Code, code_space_size, code_unrank, decode
from .tree import LabeledTree, degree

MASK64 = (1 << 64) - 1
MAX_ENUMERATION = 9**7
MAX_CHI2_N = 6

# Critical values of Pearson's statistic, keyed by degrees of freedom.
# 124 dof (n=5, 125 trees): 186.0 is the 0.99973 quantile of chi2(124), from
# scipy.stats.chi2.cdf(186.0, 124) = 0.999734; chi2.ppf(0.9997, 124) = 185.32.
CHI2_CRITICAL = {124: 186.0}


class SplitMix64:
    """Steele, Lea and Flood's SplitMix64 generator.

    state += 0x9E3779B97F4A7C15, then the output is mixed with
    z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9; z = (z ^ z >> 27) * 0x94D049BB133111EB;
    z ^ z >> 31, all modulo 2**64.
    """

    GAMMA = 0x9E3779B97F4A7C15
    MUL1 = 0xBF58476D1CE4E5B9
    MUL2 = 0x94D049BB133111EB

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise CayleyError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + self.GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * self.MUL1) & MASK64
        z = ((z ^ (z >> 27)) * self.MUL2) & MASK64
        return z ^ (z >> 31)

    def _peek_block(self, count: int) -> np.ndarray:
        # The next `count` outputs, without advancing the state.
        steps = np.arange(1, count + 1, dtype=np.uint64)
        z = steps * np.uint64(self.GAMMA) + np.uint64(self.state)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(self.MUL1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(self.MUL2)
        return z ^ (z >> np.uint64(31))

    def _skip(self, count: int) -> None:
        self.state = (self.state + count * self.GAMMA) & MASK64

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``; draws above the largest multiple of ``n`` are rejected."""
        limit = (1 << 64) // n * n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def below_many(self, n: int, count: int) -> np.ndarray:
        """Same stream as ``count`` calls to :meth:`below`, vectorized."""
        if n >= 1 << 63:
            # Limit or outputs would not fit 64-bit numpy types.
            return np.array([self.below(n) for _ in range(count)], dtype=object)
        limit = (1 << 64) // n * n
        out = np.empty(count, dtype=np.int64)
        filled = 0
        while filled < count:
            need = count - filled
            raw = self._peek_block(need + need // 64 + 16)
            if limit > MASK64:  # n is a power of two; nothing is rejected
                accepted = np.arange(raw.size)
            else:
                accepted = np.flatnonzero(raw < np.uint64(limit))
            take = accepted[:need]
            out[filled:filled + take.size] = (raw[take] % np.uint64(n)).astype(np.int64)
            filled += take.size
            self._skip(int(take[-1]) + 1 if take.size == need else raw.size)
        return out


@dataclass(frozen=True)
class SamplerConfig:
    n: int
    seed: int


class TreeSampler:
    """Uniform labeled trees: uniform codes pushed through the bijective decoder.

    Not safe to share between threads; each instance owns its generator.
    """

    def __init__(self, config: SamplerConfig):
        if config.n < 1:
            raise CayleyError(f"vertex count must be at least 1, got {config.n}")
        self.config = config
        self.rng = SplitMix64(config.seed)

    @property
    def n(self) -> int:
        return self.config.n

    def sample_code(self) -> Code:
        n = self.n
        return Code(n, tuple(self.rng.below(n) for _ in range(max(n - 2, 0))))

    def sample_codes(self, count: int) -> np.ndarray:
        """``count`` codes as rows; consumes the stream exactly like repeated :meth:`sample_code`."""
        length = max(self.n - 2, 0)
        if length == 0:
            return np.zeros((count, 0), dtype=np.int64)
        return self.rng.below_many(self.n, count * length).reshape(count, length)

    def sample(self) -> LabeledTree:
        return decode(self.sample_code())

    def samples(self, count: int) -> Iterator[LabeledTree]:
        n = self.n
        for row in self.sample_codes(count).tolist():
            yield decode(Code(n, tuple(row)))


def sample_uniform(config: SamplerConfig, count: int = 1) -> list[LabeledTree]:
    return list(TreeSampler(config).samples(count))


def enumerate_trees(n: int, lo: int = 0, hi: int | None = None) -> Iterator[tuple[int, Code, LabeledTree]]:
    """Yield ``(rank, code, tree)`` for ranks in ``[lo, hi)``, ascending."""
    if n < 1:
        raise CayleyError(f"vertex count must be at least 1, got {n}")
    total = code_space_size(n)
    if hi is None:
        hi = total
    if not 0 <= lo <= hi <= total:
        raise CayleyError(f"rank range [{lo}, {hi}) not within [0, {total}]")
    if hi - lo > MAX_ENUMERATION:
        raise SizeLimitExceeded(f"enumeration of {hi - lo} trees exceeds the limit of {MAX_ENUMERATION}")
    if lo == hi:
        return
    digits = list(code_unrank(n, lo).values)
    for r in range(lo, hi):
        code = Code(n, tuple(digits))
        yield r, code, decode(code)
        i = len(digits) - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < n:
                break
            digits[i] = 0
            i -= 1


def degree_histogram(trees: Iterable[LabeledTree], v: int) -> dict[int, int]:
    counts = Counter(degree(t, v) for t in trees)
    return dict(sorted(counts.items()))


def pearson_statistic(observed: Iterable[int], expected: float | None = None) -> float:
    """Pearson's statistic against a uniform expectation (the mean, by default)."""
    obs = np.asarray(list(observed), dtype=np.float64)
    if expected is None:
        expected = obs.sum() / obs.size
    return float(((obs - expected) ** 2).sum() / expected)


def tree_frequencies(codes: np.ndarray, n: int) -> Counter:
    """Sampled count of every tree, given codes as rows."""
    length = codes.shape[1]
    weights = np.array([n ** (length - 1 - i) for i in range(length)], dtype=np.int64)
    ranks = codes @ weights if length else np.zeros(codes.shape[0], dtype=np.int64)
    per_rank = np.bincount(ranks, minlength=code_space_size(n))
    freq: Counter = Counter()
    for r, c in enumerate(per_rank.tolist()):
        if c:
            freq[decode(code_unrank(n, r))] += c
    return freq


def chi_square_uniformity(n: int, samples: int, seed: int, critical: float | None = None) -> tuple[float, bool]:
    """Pearson test of sampled tree frequencies against uniform over all ``n**(n-2)`` trees.

    Cells are the trees produced by exhaustive enumeration; a sampled tree
    outside that set is a failure in itself.
    """
    if n > MAX_CHI2_N:
        raise SizeLimitExceeded(f"chi-square test needs every tree as a cell; n <= {MAX_CHI2_N}")
    cells = code_space_size(n)
    if samples < 100 * cells:
        raise CayleyError(f"need at least {100 * cells} samples for n={n}, got {samples}")
    if critical is None:
        critical = critical_value(cells - 1)
    freq = tree_frequencies(TreeSampler(SamplerConfig(n, seed)).sample_codes(samples), n)
    population = [t for _, _, t in enumerate_trees(n)]
    if set(freq) - set(population):
        return float("inf"), False
    stat = pearson_statistic((freq.get(t, 0) for t in population), samples / cells)
    return stat, stat < critical


def critical_value(dof: int) -> float:
    try:
        return CHI2_CRITICAL[dof]
    except KeyError:
        raise CayleyError(f"no configured critical value for {dof} degrees of freedom") from None
