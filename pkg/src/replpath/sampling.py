"""Algorithm constants and the random landmark / center families.

Each vertex joins level ``k`` independently with probability
``min(1, c_sample * 2**-k * sqrt(sigma / n))``.  The uniform draws come from a
Philox stream keyed by ``(seed, stream, k)``, so the sets do not depend on the
order in which levels are sampled and landmarks never share draws with centers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph import Graph

LANDMARK_STREAM = 1
CENTER_STREAM = 2


def log2_ceil(x: float) -> int:
    """``ceil(log2(x))`` clamped to at least 1."""
    if x <= 2:
        return 1
    return max(1, math.ceil(math.log2(x)))


@dataclass(frozen=True)
class AlgoConfig:
    seed: int = 0
    c_sample: float = 4.0
    near_multiplier: float = 2.0
    aux_span_constant: float = 2.0
    threshold_override: float | None = None

    def __post_init__(self) -> None:
        if self.c_sample < 1:
            raise ValueError("c_sample must be >= 1")
        if self.aux_span_constant < 2:
            raise ValueError("aux_span_constant must be >= 2")
        if self.near_multiplier < 1:
            raise ValueError("near_multiplier must be >= 1")
        if self.threshold_override is not None and self.threshold_override <= 0:
            raise ValueError("threshold_override must be positive")


@dataclass(frozen=True)
class Scale:
    """Derived distance scales for an ``(n, sigma)`` instance.

    ``x`` is the base unit sqrt(n/sigma)*log n (at least 1), ``near`` the
    near/far boundary and ``k_max`` the top level index.
    """

    n: int
    sigma: int
    log_n: int
    x: float
    near: float
    k_max: int

    @classmethod
    def of(cls, n: int, sigma: int, cfg: AlgoConfig) -> "Scale":
        sigma = max(1, sigma)
        log_n = log2_ceil(n)
        x = max(1.0, math.sqrt(n / sigma) * log_n)
        near = cfg.near_multiplier * x
        if cfg.threshold_override is not None:
            x = near = float(cfg.threshold_override)
        k_max = max(0, math.ceil(math.log2(math.sqrt(n * sigma)))) if n * sigma > 1 else 0
        return cls(n=n, sigma=sigma, log_n=log_n, x=x, near=near, k_max=k_max)

    def far_level(self, d: int) -> int:
        """Level ``k`` of a far edge ``d`` hops before the target (``d >= near``)."""
        ratio = d / self.x
        if ratio < 4:
            return 0
        k = int(math.floor(math.log2(ratio))) - 1
        # float log2 can be off by one at exact powers of two
        while k > 0 and d < (2 ** (k + 1)) * self.x:
            k -= 1
        while d >= (2 ** (k + 2)) * self.x:
            k += 1
        return min(k, self.k_max)

    def far_levels(self, d: np.ndarray) -> np.ndarray:
        return np.fromiter((self.far_level(int(v)) for v in d), dtype=np.int64, count=len(d))

    def span(self, priority: int, cfg: AlgoConfig) -> float:
        """Number of leading path edges kept for a hub of the given priority."""
        return cfg.aux_span_constant * (2 ** max(priority, 0)) * self.x


def level_probability(k: int, n: int, sigma: int, c_sample: float) -> float:
    return min(1.0, c_sample * 2.0 ** (-k) * math.sqrt(sigma / n))


def _draws(seed: int, stream: int, k: int, n: int) -> np.ndarray:
    bitgen = np.random.Philox(np.random.SeedSequence([seed & ((1 << 64) - 1), stream, k]))
    return np.random.Generator(bitgen).random(n)


def _sample_levels(n: int, sources: np.ndarray, cfg: AlgoConfig, stream: int) -> np.ndarray:
    sigma = len(sources)
    k_max = Scale.of(n, sigma, cfg).k_max
    member = np.zeros((k_max + 1, n), dtype=bool)
    for k in range(k_max + 1):
        p = level_probability(k, n, sigma, cfg.c_sample)
        member[k] = _draws(cfg.seed, stream, k, n) < p
    return member


def _check_sources(g: Graph, sources: Iterable[int]) -> np.ndarray:
    src = np.unique(np.asarray(list(sources), dtype=np.int64))
    if src.size == 0:
        raise ValueError("at least one source is required")
    if src[0] < 0 or src[-1] >= g.n:
        raise ValueError("source out of range")
    return src


@dataclass(eq=False)
class LandmarkSets:
    member: np.ndarray  # (K+1, n) bool
    sources: np.ndarray
    union: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        self.union = np.flatnonzero(self.member.any(axis=0))

    @property
    def k_max(self) -> int:
        return self.member.shape[0] - 1

    def level(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.member[k])


@dataclass(eq=False)
class CenterSets:
    member: np.ndarray
    sources: np.ndarray
    priority: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        k_count = self.member.shape[0]
        levels = np.arange(k_count)[:, None]
        self.priority = np.where(self.member, levels, -1).max(axis=0)

    @property
    def k_max(self) -> int:
        return self.member.shape[0] - 1

    @property
    def centers(self) -> np.ndarray:
        return np.flatnonzero(self.priority >= 0)

    def level(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.member[k])


def sample_landmarks(g: Graph, sources: Iterable[int], cfg: AlgoConfig) -> LandmarkSets:
    src = _check_sources(g, sources)
    member = _sample_levels(g.n, src, cfg, LANDMARK_STREAM)
    member[:, src] = True
    return LandmarkSets(member=member, sources=src)


def sample_centers(g: Graph, sources: Iterable[int], cfg: AlgoConfig) -> CenterSets:
    src = _check_sources(g, sources)
    member = _sample_levels(g.n, src, cfg, CENTER_STREAM)
    member[0, src] = True
    return CenterSets(member=member, sources=src)
