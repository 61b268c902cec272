"""Sampler determinism, exactness checks, and concentration envelopes."""
import numpy as np
import pytest

from motionwalk.errors import NotProbability
from motionwalk.groups import GElem, multiply
from motionwalk.measures import delta, from_weights, tv_norm, uniform
from motionwalk.simulate import (
    WalkConfig,
    empirical_distribution,
    exact_power,
    sample_path,
    tv_to_uniform,
)
from motionwalk.suite import fast_mixer

from conftest import negation_group, trivial_group


def two_atom_walk(g):
    return 0.5 * delta(g, GElem((1,), 0)) + 0.5 * delta(g, GElem((0,), 1))


def test_point_mass_paths_are_powers(order10):
    x = GElem((1,), 1)
    mu = delta(order10, x)
    cfg = WalkConfig(steps=5, trials=64, seed=9)
    final = sample_path(order10, mu, cfg)
    acc = order10.identity()
    for _ in range(5):
        acc = multiply(order10, acc, x)
    assert np.all(final == order10.index(acc))


def test_fixed_seed_is_bit_identical(order10):
    mu = two_atom_walk(order10)
    a = empirical_distribution(order10, mu, 16, 2000, seed=42)
    b = empirical_distribution(order10, mu, 16, 2000, seed=42)
    assert np.array_equal(a.weights, b.weights)
    c = empirical_distribution(order10, mu, 16, 2000, seed=43)
    assert not np.array_equal(a.weights, c.weights)


def test_single_trial_is_point_mass(order10):
    mu = two_atom_walk(order10)
    d = empirical_distribution(order10, mu, 8, trials=1, seed=1)
    assert np.isclose(d.weights.sum().real, 1.0)
    assert (np.abs(d.weights) > 0).sum() == 1


def test_uniform_one_step_within_multinomial_bands(order16):
    trials = 40000
    d = empirical_distribution(order16, uniform(order16), 1, trials, seed=7)
    p = 1.0 / order16.size
    sigma = np.sqrt(p * (1 - p) / trials)
    assert np.all(np.abs(d.weights.real - p) < 3.5 * sigma)


def test_empirical_matches_exact_within_envelope(order10, order21):
    trials = 20000
    for g, mu, n in [
        (order10, two_atom_walk(order10), 16),
        (order10, uniform(order10), 4),
        (order21, fast_mixer(order21, 0.3, delta(order21, GElem((1,), 1))), 8),
    ]:
        emp = empirical_distribution(g, mu, n, trials, seed=11)
        ex = exact_power(mu, n)
        gap = 0.5 * tv_norm(emp - ex)
        assert gap <= 4.0 * np.sqrt(g.size / trials)


def test_walk_reaches_uniform_when_radii_contract(order10):
    # spectral radii 0.309/0.809: 64 steps sit deep in the tail
    mu = two_atom_walk(order10)
    emp = empirical_distribution(order10, mu, 64, 100000, seed=3)
    assert tv_to_uniform(emp) < 0.05


def test_exact_power_basics(order10):
    mu = two_atom_walk(order10)
    p0 = exact_power(mu, 0)
    assert np.isclose(p0.weights[order10.index(order10.identity())], 1.0)
    p3 = exact_power(mu, 3)
    from motionwalk.measures import convolve

    ref = convolve(convolve(mu, mu), mu)
    assert np.allclose(p3.weights, ref.weights, atol=1e-15)


def test_tv_to_uniform_values(order10):
    assert tv_to_uniform(uniform(order10)) == 0.0
    point = delta(order10, order10.identity())
    assert tv_to_uniform(point) == pytest.approx(1.0 - 1.0 / order10.size)


def test_probability_is_enforced(order10):
    bad = from_weights(order10, np.full(order10.size, 0.3))
    with pytest.raises(NotProbability):
        sample_path(order10, bad, WalkConfig(4, 10, 0))
    with pytest.raises(NotProbability):
        tv_to_uniform(bad)


def test_walk_config_validation():
    with pytest.raises(ValueError):
        WalkConfig(steps=4, trials=0, seed=1)
    with pytest.raises(ValueError):
        WalkConfig(steps=-1, trials=5, seed=1)
