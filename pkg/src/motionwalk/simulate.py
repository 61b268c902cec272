"""Monte Carlo sampling of the random walk and empirical decay to uniform.

Exact dyadic convolution is always available as ground truth; the sampler
exists to exercise the probabilistic path and as an independent
statistical check on the spectral classifiers. Trials draw from a
counter-based generator, so a fixed seed reproduces the histogram bit for
bit and trials could be split across workers without shared state.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import MotionGroup
from .measures import GroupMeasure, convolve, delta, from_weights, require_probability

__all__ = [
    "WalkConfig",
    "sample_path",
    "empirical_distribution",
    "exact_power",
    "tv_to_uniform",
]


@dataclass(frozen=True)
class WalkConfig:
    steps: int
    trials: int
    seed: int

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"need trials >= 1, got {self.trials}")
        if self.steps < 0:
            raise ValueError(f"need steps >= 0, got {self.steps}")


def sample_path(g: MotionGroup, mu: GroupMeasure, cfg: WalkConfig) -> np.ndarray:
    """Final position index of X_n = xi_1 xi_2 ... xi_n per trial, with
    increments drawn i.i.d. by inverse CDF over the canonical element
    enumeration."""
    require_probability(mu)
    rng = np.random.Generator(np.random.Philox(key=cfg.seed))
    uniforms = rng.random((cfg.trials, cfg.steps))
    cdf = np.cumsum(np.real(mu.weights))
    cdf[-1] = 1.0  # seal the top against cumsum roundoff
    increments = np.searchsorted(cdf, uniforms, side="right")
    table = g.mult_table()
    x = np.zeros(cfg.trials, dtype=np.int64)
    for step in range(cfg.steps):
        x = table[x, increments[:, step]]
    return x


def empirical_distribution(g: MotionGroup, mu: GroupMeasure, n: int,
                           trials: int, seed: int) -> GroupMeasure:
    """Histogram of sample_path endpoints, normalized to a probability."""
    final = sample_path(g, mu, WalkConfig(steps=n, trials=trials, seed=seed))
    counts = np.bincount(final, minlength=g.size)
    return from_weights(g, counts / trials)


def exact_power(mu: GroupMeasure, n: int) -> GroupMeasure:
    """mu^n by square-and-multiply convolution; n = 0 gives the point
    mass at the identity."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    result = delta(mu.group, mu.group.identity())
    base = mu
    e = n
    while e:
        if e & 1:
            result = convolve(result, base)
        e >>= 1
        if e:
            base = convolve(base, base)
    return result


def tv_to_uniform(dist: GroupMeasure) -> float:
    require_probability(dist)
    flat = 1.0 / dist.group.size
    return float(0.5 * np.abs(dist.weights - flat).sum())
