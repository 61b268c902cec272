"""Induced representations on l2(K) and Fourier transforms of measures.

For a character alpha of A, the induced representation of G acts by

    [Lambda_alpha(a, k) phi](k') = <a, phi_{k'}(alpha)> phi(k^{-1} k'),

realized here as dense |K| x |K| unitary matrices in the delta-function
basis of l2(K).  Spectral conditions are always evaluated on these blocks,
one per dual orbit, plus the complement-of-constants compression of the
block at the trivial character.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .groups import Character, GElem, MotionGroup, dual_action, dual_orbits
from .measures import GroupMeasure, push_k

__all__ = [
    "RepMatrix",
    "FourierBlock",
    "lambda_elem",
    "fourier",
    "rep_of_measure",
    "lambda0_complement_block",
    "left_regular_k",
    "right_regular_k",
    "complement_basis",
    "orbit_conjugation_check",
    "pik_consistency",
]


@dataclass(frozen=True)
class RepMatrix:
    alpha: Character
    matrix: np.ndarray


@dataclass(frozen=True)
class FourierBlock:
    alpha: Character
    matrix: np.ndarray


def _dual_orbit_row(g: MotionGroup, alpha: Character) -> np.ndarray:
    """Stack phi_{k'}(alpha) for every k' as rows of an integer matrix."""
    return np.array([dual_action(g, kp, alpha).alpha for kp in range(g.k.order)],
                    dtype=np.int64)


def lambda_elem(g: MotionGroup, alpha: Character, x: GElem) -> RepMatrix:
    """Matrix of the induced representation at the group element x."""
    nk = g.k.order
    n = g.abelian.modulus
    duals = _dual_orbit_row(g, alpha)                     # row k': phi_{k'}(alpha)
    exps = (duals @ np.asarray(x.a, dtype=np.int64)) % n
    phases = np.exp(2j * np.pi * exps / n)
    cols = g.k.table[g.k.inv(x.k), :]                     # k'' = k^{-1} k'
    m = np.zeros((nk, nk), dtype=np.complex128)
    m[np.arange(nk), cols] = phases
    return RepMatrix(alpha, m)


def left_regular_k(g: MotionGroup, k: int) -> np.ndarray:
    """Permutation matrix of [L_K(k) phi](k') = phi(k^{-1} k')."""
    nk = g.k.order
    m = np.zeros((nk, nk))
    m[np.arange(nk), g.k.table[g.k.inv(k), :]] = 1.0
    return m


def right_regular_k(g: MotionGroup, k: int) -> np.ndarray:
    """Permutation matrix of [R_K(k) phi](k') = phi(k' k)."""
    nk = g.k.order
    m = np.zeros((nk, nk))
    m[np.arange(nk), g.k.table[:, k]] = 1.0
    return m


def _measure_block(mu: GroupMeasure, alpha: Character, invert: bool) -> np.ndarray:
    """Sum of mu(x) Lambda_alpha(x) (or of x^{-1}), grouped by K part so the
    phase sums vectorize over the translation part."""
    g = mu.group
    n = g.abelian.modulus
    nk = g.k.order
    duals = _dual_orbit_row(g, alpha)
    acc = np.zeros((nk, nk), dtype=np.complex128)
    supp = mu.support()
    if len(supp) == 0:
        return acc
    a_idx, k_idx = np.divmod(supp, nk)
    avecs = np.array([g.abelian.vector(int(i)) for i in a_idx], dtype=np.int64)
    rows = np.arange(nk)
    for kk in np.unique(k_idx):
        sel = k_idx == kk
        w = mu.weights[supp[sel]]
        vecs = avecs[sel]
        if invert:
            kinv = g.k.inv(int(kk))
            vecs = (-vecs) @ g.k.action[kinv].T   # phi_{k^{-1}}(-a), row form
            cols = g.k.table[int(kk), :]          # inverse element has K part k^{-1}
        else:
            cols = g.k.table[g.k.inv(int(kk)), :]
        exps = (duals @ (vecs.T % n)) % n
        acc[rows, cols] += np.exp(2j * np.pi * exps / n) @ w
    return acc


def fourier(mu: GroupMeasure, alpha: Character) -> FourierBlock:
    """Fourier transform mu_hat(Lambda_alpha) = sum_x mu(x) Lambda_alpha(x^{-1}).

    Linear in mu and reverses convolution order: (mu * nu)^ = nu^ mu^.
    """
    return FourierBlock(alpha, _measure_block(mu, alpha, invert=True))


def rep_of_measure(mu: GroupMeasure, alpha: Character) -> FourierBlock:
    """Lambda_alpha(mu) = sum_x mu(x) Lambda_alpha(x); satisfies
    mu_hat(Lambda_alpha) = Lambda_alpha(conj(mu))^*."""
    return FourierBlock(alpha, _measure_block(mu, alpha, invert=False))


def complement_basis(g: MotionGroup) -> np.ndarray:
    """Fixed orthonormal basis of the orthocomplement of constants in l2(K),
    returned as the columns of a |K| x (|K|-1) matrix.

    Built from the Householder reflector sending e_0 to the normalized
    constant vector, so the basis is deterministic across runs.
    """
    nk = g.k.order
    if nk == 1:
        return np.zeros((1, 0))
    u = np.full(nk, 1.0 / np.sqrt(nk))
    v = u.copy()
    v[0] -= 1.0
    v /= np.linalg.norm(v)
    q = np.eye(nk) - 2.0 * np.outer(v, v)    # q[:, 0] == u up to rounding
    return q[:, 1:]


def lambda0_complement_block(mu: GroupMeasure) -> np.ndarray:
    """mu_hat at the trivial character, compressed to the complement of the
    constant functions.  Well defined because every Lambda_0(x) fixes the
    constants line."""
    g = mu.group
    block = fourier(mu, Character((0,) * g.abelian.rank)).matrix
    basis = complement_basis(g)
    return basis.conj().T @ block @ basis


def orbit_conjugation_check(g: MotionGroup, alpha: Character, kprime: int) -> float:
    """Max deviation of Lambda_{phi_{k'}(alpha)}(x) from
    R_K(k') Lambda_alpha(x) R_K(k')^{-1} over a spanning set of x."""
    moved = dual_action(g, kprime, alpha)
    r = right_regular_k(g, kprime)
    rinv = right_regular_k(g, g.k.inv(kprime))
    worst = 0.0
    for idx in range(g.size):
        x = g.element(idx)
        lhs = lambda_elem(g, moved, x).matrix
        rhs = r @ lambda_elem(g, alpha, x).matrix @ rinv
        worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst


def pik_consistency(mu: GroupMeasure) -> float:
    """Deviation of mu_hat(Lambda_0) from the K-pushforward reconstruction
    sum_k pi_K(mu)(k) L_K(k^{-1})."""
    g = mu.group
    lhs = fourier(mu, Character((0,) * g.abelian.rank)).matrix
    kw = push_k(mu).weights
    rhs = np.zeros_like(lhs)
    for k in range(g.k.order):
        rhs += kw[k] * left_regular_k(g, g.k.inv(k))
    return float(np.abs(lhs - rhs).max())


def all_fourier_blocks(mu: GroupMeasure,
                       reps: Optional[List[Character]] = None) -> List[FourierBlock]:
    """Fourier blocks at orbit representatives (all orbits when reps is None)."""
    if reps is None:
        reps = [o.representative for o in dual_orbits(mu.group)]
    return [fourier(mu, alpha) for alpha in reps]
