"""Complex measures on a finite motion group.

On a finite group every measure is a dense weight vector over the canonical
element enumeration, convolution is the algebra product of M(G), and the
total-variation norm is the l1 norm of the weights.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Set, Tuple

import numpy as np

from .errors import ContainsZeroCharacter, GroupMismatch, NotOrbitClosed, NotProbability
from .groups import Character, GElem, MotionGroup, dual_action

__all__ = [
    "GroupMeasure",
    "KMeasure",
    "convolve",
    "tv_norm",
    "push_k",
    "central_measure",
    "mean_zero_basis",
    "delta",
    "uniform",
    "uniform_on",
    "from_weights",
    "is_probability",
    "require_probability",
]

PROBABILITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class GroupMeasure:
    """Finitely supported complex measure, dense over the element enumeration."""

    group: MotionGroup
    weights: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=np.complex128)
        if w.shape != (self.group.size,):
            raise ValueError(f"weights must have length {self.group.size}, got {w.shape}")
        w = w.copy()
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    def __add__(self, other: "GroupMeasure") -> "GroupMeasure":
        _same_group(self, other)
        return GroupMeasure(self.group, self.weights + other.weights)

    def __sub__(self, other: "GroupMeasure") -> "GroupMeasure":
        _same_group(self, other)
        return GroupMeasure(self.group, self.weights - other.weights)

    def __mul__(self, scalar: complex) -> "GroupMeasure":
        return GroupMeasure(self.group, self.weights * scalar)

    __rmul__ = __mul__

    def conjugate(self) -> "GroupMeasure":
        return GroupMeasure(self.group, np.conj(self.weights))

    def support(self) -> np.ndarray:
        return np.nonzero(self.weights)[0]

    def total_mass(self) -> complex:
        return complex(self.weights.sum())


@dataclass(frozen=True, eq=False)
class KMeasure:
    """Complex measure on the K factor alone."""

    group: MotionGroup
    weights: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=np.complex128)
        if w.shape != (self.group.k.order,):
            raise ValueError(f"weights must have length {self.group.k.order}")
        w = w.copy()
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)


def _same_group(mu: GroupMeasure, nu) -> None:
    if mu.group is not nu.group:
        raise GroupMismatch("measures live on different groups")


def delta(g: MotionGroup, x: GElem) -> GroupMeasure:
    w = np.zeros(g.size, dtype=np.complex128)
    w[g.index(x)] = 1.0
    return GroupMeasure(g, w)


def uniform(g: MotionGroup) -> GroupMeasure:
    return GroupMeasure(g, np.full(g.size, 1.0 / g.size, dtype=np.complex128))


def uniform_on(g: MotionGroup, elems: Iterable[GElem]) -> GroupMeasure:
    idxs = [g.index(x) for x in elems]
    if not idxs:
        raise ValueError("uniform_on needs a nonempty element collection")
    w = np.zeros(g.size, dtype=np.complex128)
    w[idxs] = 1.0 / len(idxs)
    return GroupMeasure(g, w)


def from_weights(g: MotionGroup, weights: Sequence[complex]) -> GroupMeasure:
    return GroupMeasure(g, np.asarray(weights, dtype=np.complex128))


def is_probability(mu: GroupMeasure, tol: float = PROBABILITY_TOL) -> bool:
    w = mu.weights
    if np.abs(w.imag).max(initial=0.0) > tol:
        return False
    if w.real.min(initial=0.0) < -tol:
        return False
    return abs(w.real.sum() - 1.0) <= tol


def require_probability(mu: GroupMeasure, tol: float = PROBABILITY_TOL) -> None:
    if not is_probability(mu, tol):
        raise NotProbability("weights must be real, nonnegative and sum to 1")


def tv_norm(mu: GroupMeasure) -> float:
    """Total variation: sum of |weights| against counting Haar measure."""
    return float(np.abs(mu.weights).sum())


def convolve(mu: GroupMeasure, nu: GroupMeasure) -> GroupMeasure:
    """(mu * nu)(x) = sum_y mu(y) nu(y^{-1} x).

    Scatters over the sparser factor; each row/column of the multiplication
    table is a permutation, so in-place fancy updates are safe.  Dense
    factors fall back to a single gather-matmul.
    """
    _same_group(mu, nu)
    g = mu.group
    table = g.mult_table()
    a, b = mu.weights, nu.weights
    supp_a = np.nonzero(a)[0]
    supp_b = np.nonzero(b)[0]
    out = np.zeros(g.size, dtype=np.complex128)
    dense_cutoff = max(8, g.size // 4)
    if min(len(supp_a), len(supp_b)) > dense_cutoff:
        gathered = b[table[g.inv_perm(), :]]      # row y: nu(y^{-1} x)
        out = a @ gathered
    elif len(supp_a) <= len(supp_b):
        for i in supp_a:
            out[table[i, :]] += a[i] * b
    else:
        for j in supp_b:
            out[table[:, j]] += b[j] * a
    return GroupMeasure(g, out)


def push_k(mu: GroupMeasure) -> KMeasure:
    """Pushforward to K: pi_K(mu)(k) = sum_a mu(a, k)."""
    g = mu.group
    w = mu.weights.reshape(g.abelian.size, g.k.order).sum(axis=0)
    return KMeasure(g, w)


def _orbit_closure_check(g: MotionGroup, s: Set[Character]) -> None:
    for ch in s:
        if ch.is_trivial():
            raise ContainsZeroCharacter("support set must not contain the zero character")
    for ch in s:
        for k in range(g.k.order):
            if dual_action(g, k, ch) not in s:
                raise NotOrbitClosed(f"{ch} leaves the set under the action of k={k}")


def central_measure(g: MotionGroup, s: Iterable[Character]) -> GroupMeasure:
    """Central measure nu = (h dlambda_A) x delta_{identity of K}, where h is
    the inverse A-Fourier transform of the indicator of s.

    nu commutes with every measure on G, and its Fourier block at alpha is
    the identity when alpha lies in s and zero otherwise.  s must be a union
    of nontrivial dual orbits.
    """
    sset = set(s)
    _orbit_closure_check(g, sset)
    ab = g.abelian
    n = ab.modulus
    w = np.zeros(g.size, dtype=np.complex128)
    if sset:
        alphas = np.array([ch.alpha for ch in sorted(sset, key=lambda c: c.alpha)])
        for a_idx in range(ab.size):
            avec = np.asarray(ab.vector(a_idx), dtype=np.int64)
            exps = (alphas @ avec) % n
            h = np.exp(2j * np.pi * exps / n).sum() / ab.size
            w[a_idx * g.k.order + 0] = h
    return GroupMeasure(g, w)


def mean_zero_basis(g: MotionGroup) -> List[GroupMeasure]:
    """Basis f_x = delta_x - delta_e of the mean-zero functions, x != e."""
    e = g.identity()
    de = delta(g, e)
    out = []
    for idx in range(g.size):
        x = g.element(idx)
        if x == e:
            continue
        out.append(delta(g, x) - de)
    return out
