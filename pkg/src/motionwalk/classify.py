"""Classify probability measures on finite motion groups.

Six conditions on a probability measure mu:

  (SR)  every nontrivial dual block of the Fourier transform has
        spectral radius < 1 (equivalent to mixing),
  (S)   1 is not in the spectrum of any nontrivial block (ergodicity),
  (A)   the support generates the whole group (adapted),
  (ASA) the support is not contained in a coset of a proper normal
        subgroup (strictly aperiodic),
  (M)   empirical mixing: sup over the mean-zero basis of
        tv_norm(f * mu^n) along dyadic n,
  (E)   empirical ergodicity: the same for Cesaro averages of powers.

"Nontrivial blocks" means all nonzero dual-orbit blocks plus the
complement of the constants line inside the zero-orbit block; the
trivial representation lives exactly on that line and is excluded.

Spectral verdicts are tri-state. Strict inequalities cannot be
certified at the boundary, so values inside a guard band around the
decision threshold come back INDETERMINATE instead of being forced.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import EmptySupport
from .groups import Character, MotionGroup, dual_orbits
from .measures import GroupMeasure, convolve, require_probability
from .reps import (
    all_fourier_blocks,
    complement_basis,
    lambda0_complement_block,
    lambda_elem,
    rep_of_measure,
)
from .spectral import one_in_spectrum, spectral_radius

__all__ = [
    "TriState",
    "BlockRecord",
    "ConditionCheck",
    "AdaptedResult",
    "AperiodicResult",
    "DecayCurve",
    "Verdict",
    "check_sr",
    "check_s",
    "adapted",
    "strictly_aperiodic_check",
    "empirical_mixing",
    "empirical_ergodic",
    "empirical_weak_mixing",
    "cross_check",
]

# fraction of tol separating FAILS from INDETERMINATE
GUARD_FRACTION = 8.0


class TriState(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class BlockRecord:
    """One nontrivial block with the quantity the condition tests."""
    representative: Character
    is_complement: bool
    value: float

    def to_dict(self) -> dict:
        return {
            "representative": list(self.representative.alpha),
            "is_complement": self.is_complement,
            "value": self.value,
        }


@dataclass(frozen=True)
class ConditionCheck:
    condition: str
    verdict: TriState
    records: Tuple[BlockRecord, ...]
    witness: Optional[BlockRecord]
    tol: float

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "verdict": self.verdict.value,
            "records": [r.to_dict() for r in self.records],
            "witness": self.witness.to_dict() if self.witness else None,
            "tol": self.tol,
        }


@dataclass(frozen=True)
class AdaptedResult:
    adapted: bool
    subgroup_size: int

    def to_dict(self) -> dict:
        return {"adapted": self.adapted, "subgroup_size": self.subgroup_size}


@dataclass(frozen=True)
class AperiodicResult:
    strictly_aperiodic: bool
    closure_size: int

    def to_dict(self) -> dict:
        return {"strictly_aperiodic": self.strictly_aperiodic,
                "closure_size": self.closure_size}


@dataclass(frozen=True)
class DecayCurve:
    """An empirical decay quantity sampled at dyadic times."""
    points: Tuple[Tuple[int, float], ...]
    threshold: float
    verdict: str
    decays: Optional[bool]

    @property
    def conclusive(self) -> bool:
        return self.decays is not None

    def to_dict(self) -> dict:
        return {
            "points": [[n, v] for n, v in self.points],
            "threshold": self.threshold,
            "verdict": self.verdict,
            "decays": self.decays,
        }


@dataclass(frozen=True)
class Verdict:
    sr: ConditionCheck
    s: ConditionCheck
    adapted: AdaptedResult
    strictly_aperiodic: AperiodicResult
    empirical_mixing: DecayCurve
    empirical_ergodic: DecayCurve
    weak_mixing_empirical: DecayCurve
    consistency: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "sr": self.sr.to_dict(),
            "s": self.s.to_dict(),
            "adapted": self.adapted.to_dict(),
            "strictly_aperiodic": self.strictly_aperiodic.to_dict(),
            "empirical_mixing": self.empirical_mixing.to_dict(),
            "empirical_ergodic": self.empirical_ergodic.to_dict(),
            "weak_mixing_empirical": self.weak_mixing_empirical.to_dict(),
            "consistency": list(self.consistency),
        }


# ---------------------------------------------------------------- spectral

def _nontrivial_blocks(mu: GroupMeasure) -> List[Tuple[Character, bool, np.ndarray]]:
    """All nonzero-orbit Fourier blocks plus the zero-orbit complement."""
    g = mu.group
    orbits = dual_orbits(g)
    out = []
    for orb, block in zip(orbits, all_fourier_blocks(mu)):
        if not orb.representative.is_trivial():
            out.append((orb.representative, False, block.matrix))
    zero = orbits[0].representative
    out.append((zero, True, lambda0_complement_block(mu)))
    return out


def check_sr(mu: GroupMeasure, tol: float = 1e-8) -> ConditionCheck:
    """Spectral radius < 1 on every nontrivial block, tri-state."""
    require_probability(mu)
    records = tuple(
        BlockRecord(alpha, comp, spectral_radius(m))
        for alpha, comp, m in _nontrivial_blocks(mu))
    worst = max(records, key=lambda r: r.value, default=None)
    if worst is None or worst.value < 1.0 - tol:
        verdict, witness = TriState.HOLDS, worst
    elif worst.value >= 1.0 - tol + tol / GUARD_FRACTION:
        verdict, witness = TriState.FAILS, worst
    else:
        verdict, witness = TriState.INDETERMINATE, worst
    return ConditionCheck("SR", verdict, records, witness, tol)


def check_s(mu: GroupMeasure, tol: float = 1e-8) -> ConditionCheck:
    """1 not in the spectrum of any nontrivial block, by singular-value margin."""
    require_probability(mu)
    records = tuple(
        BlockRecord(alpha, comp, one_in_spectrum(m, tol=tol).margin)
        for alpha, comp, m in _nontrivial_blocks(mu))
    worst = min(records, key=lambda r: r.value, default=None)
    if worst is None or worst.value > tol:
        verdict, witness = TriState.HOLDS, worst
    elif worst.value <= tol / GUARD_FRACTION:
        verdict, witness = TriState.FAILS, worst
    else:
        verdict, witness = TriState.INDETERMINATE, worst
    return ConditionCheck("S", verdict, records, witness, tol)


# -------------------------------------------------------------- structural

def _semigroup_closure(g: MotionGroup, seed: Sequence[int]) -> np.ndarray:
    """Indices of the subgroup generated by seed (finite, so the
    multiplicative closure already contains inverses)."""
    table = g.mult_table()
    gens = np.unique(np.asarray(list(seed), dtype=np.int64))
    member = np.zeros(g.size, dtype=bool)
    member[gens] = True
    frontier = gens
    while frontier.size:
        prods = np.unique(table[np.ix_(frontier, gens)])
        fresh = prods[~member[prods]]
        member[fresh] = True
        frontier = fresh
    return np.flatnonzero(member)


def adapted(mu: GroupMeasure) -> AdaptedResult:
    """Does the support generate the whole group?"""
    require_probability(mu)
    closure = _semigroup_closure(mu.group, mu.support())
    return AdaptedResult(closure.size == mu.group.size, int(closure.size))


def strictly_aperiodic_check(mu: GroupMeasure) -> AperiodicResult:
    """Is the support outside every coset of a proper normal subgroup?

    With s0 in the support, the support lies in a coset of a proper
    normal subgroup exactly when the normal closure of
    {s0^{-1} s : s in supp} is proper. Validates only that the support
    is nonempty, so it can probe non-probability weight vectors too.
    """
    g = mu.group
    supp = mu.support()
    if supp.size == 0:
        raise EmptySupport("measure has empty support")
    table = g.mult_table()
    inv = g.inv_perm()
    s0_inv = inv[supp[0]]
    diffs = table[s0_inv, supp]
    # conjugating the generating set first keeps the generated subgroup normal
    conj = table[table[:, diffs], inv[:, None]]
    closure = _semigroup_closure(g, np.unique(conj))
    return AperiodicResult(closure.size == g.size, int(closure.size))


# --------------------------------------------------------------- empirical

def _dyadic_checkpoints(n_max: int) -> List[int]:
    if n_max < 1 or n_max & (n_max - 1):
        raise ValueError(f"n_max must be a power of two, got {n_max}")
    out = [1]
    while out[-1] < n_max:
        out.append(out[-1] * 2)
    return out


def _translate_gap(g: MotionGroup, w: np.ndarray) -> float:
    """max over x of tv_norm(delta_x * w - w): the mean-zero basis sweep."""
    shifted = w[g.mult_table()[g.inv_perm(), :]]
    return float(np.abs(shifted - w[None, :]).sum(axis=1).max())


def _decide(points: List[Tuple[int, float]], threshold: float,
            pos: str, neg: str) -> Tuple[str, Optional[bool]]:
    """Positive when the final value is below threshold; negative only on a
    stable floor: the last three dyadic samples sit well above the
    threshold and are flat to near machine precision. Anything flatter
    than a true constant floor but still decaying (a spectral radius
    extremely close to 1) stays INCONCLUSIVE rather than risking a verdict
    the spectral checks would contradict."""
    final = points[-1][1]
    if final < threshold:
        return pos, True
    tail = [v for _, v in points[-3:]]
    if len(points) >= 3 and min(tail) > 10.0 * threshold \
            and max(tail) <= min(tail) * (1.0 + 1e-9):
        return neg, False
    return "INCONCLUSIVE", None


def _right_convolution_matrix(mu: GroupMeasure) -> np.ndarray:
    """Matrix M with (p convolved with mu) = p @ M."""
    g = mu.group
    return mu.weights[g.mult_table()[g.inv_perm(), :]]


def empirical_mixing(mu: GroupMeasure, n_max: int = 1024,
                     threshold: float = 1e-6) -> DecayCurve:
    """sup_x tv_norm(f_x * mu^n) at dyadic n via repeated squaring."""
    require_probability(mu)
    g = mu.group
    checkpoints = _dyadic_checkpoints(n_max)
    cur = mu
    points = [(1, _translate_gap(g, cur.weights))]
    for n in checkpoints[1:]:
        cur = convolve(cur, cur)
        points.append((n, _translate_gap(g, cur.weights)))
    verdict, decays = _decide(points, threshold, "MIXING", "NOT_MIXING")
    return DecayCurve(tuple(points), threshold, verdict, decays)


def empirical_ergodic(mu: GroupMeasure, n_max: int = 512,
                      threshold: float = 0.02) -> DecayCurve:
    """sup_x tv_norm(f_x * S_n) for S_n = (1/n) sum_{k=1..n} mu^k, dyadic n.

    The k = 0 term is left out: it contributes a fixed tv_norm(f_x)/n
    that says nothing about mu and would dominate every average (the
    uniform measure must come out exactly 0).
    """
    require_probability(mu)
    g = mu.group
    checkpoints = set(_dyadic_checkpoints(n_max))
    m = _right_convolution_matrix(mu)
    p = np.zeros(g.size, dtype=np.complex128)
    p[g.index(g.identity())] = 1.0
    acc = np.zeros_like(p)
    points = []
    for count in range(1, n_max + 1):
        p = p @ m
        acc += p
        if count in checkpoints:
            points.append((count, _translate_gap(g, acc / count)))
    verdict, decays = _decide(points, threshold, "ERGODIC", "NOT_ERGODIC")
    return DecayCurve(tuple(points), threshold, verdict, decays)


def _stacked_lambda_gaps(g: MotionGroup,
                         reps: List[Character]) -> List[np.ndarray]:
    """Per orbit: (|G|*nk) x nk stack of Lambda_alpha(x) - I over all x."""
    nk = g.k.order
    out = []
    for alpha in reps:
        s = np.empty((g.size * nk, nk), dtype=np.complex128)
        for i, x in enumerate(g.elements()):
            s[i * nk:(i + 1) * nk] = lambda_elem(g, alpha, x).matrix
            s[i * nk:(i + 1) * nk] -= np.eye(nk)
        out.append(s)
    return out


def empirical_weak_mixing(mu: GroupMeasure, n_max: int = 512,
                          threshold: float = 0.01,
                          test_functions: Optional[Sequence[np.ndarray]] = None,
                          n_random: int = 3, seed: int = 7) -> DecayCurve:
    """Cesaro averages of |<f_x * mu^k, h>| over test functions h.

    By default h ranges over every matrix coefficient of every induced
    block plus a few seeded random bounded functions; the block part is
    evaluated exactly through matrix powers of the represented measure.
    """
    require_probability(mu)
    g = mu.group
    checkpoints = set(_dyadic_checkpoints(n_max))
    nk = g.k.order

    use_blocks = test_functions is None
    extra: List[np.ndarray] = []
    if test_functions is not None:
        extra = [np.asarray(h, dtype=np.complex128) for h in test_functions]
        for h in extra:
            if h.shape != (g.size,):
                raise ValueError(f"test function has shape {h.shape}, "
                                 f"expected ({g.size},)")
    elif n_random > 0:
        rng = np.random.default_rng(seed)
        for _ in range(n_random):
            h = rng.uniform(-1, 1, g.size) + 1j * rng.uniform(-1, 1, g.size)
            extra.append(h / max(1.0, np.abs(h).max()))

    if use_blocks:
        reps = [o.representative for o in dual_orbits(g)]
        gaps = _stacked_lambda_gaps(g, reps)               # (|G|nk, nk) each
        cstack = np.stack([rep_of_measure(mu, a).matrix for a in reps])
        powers = np.broadcast_to(np.eye(nk), cstack.shape).copy()
        gap_stack = np.stack(gaps)                         # (orb, |G|nk, nk)
        block_acc = np.zeros(gap_stack.shape, dtype=np.float64)

    if extra:
        table = g.mult_table()
        hmats = np.stack([h[table] for h in extra])        # (nh, |G|, |G|)
        hvecs = np.stack(extra)
        nu = np.zeros(g.size, dtype=np.complex128)
        nu[g.index(g.identity())] = 1.0
        m = _right_convolution_matrix(mu)
        rand_acc = np.zeros((len(extra), g.size), dtype=np.float64)

    # averages run over k = 1..n: the k = 0 term is n-independent and would
    # mask the decay (uniform mu must come out exactly 0)
    points = []
    for count in range(1, n_max + 1):
        if use_blocks:
            powers = powers @ cstack
            block_acc += np.abs(gap_stack @ powers)
        if extra:
            nu = nu @ m
            base = hvecs @ nu
            rand_acc += np.abs(hmats @ nu - base[:, None])
        if count in checkpoints:
            best = 0.0
            if use_blocks:
                best = float(block_acc.max()) / count
            if extra:
                best = max(best, float(rand_acc.max()) / count)
            points.append((count, best))
    verdict, decays = _decide(points, threshold, "WEAK_MIXING",
                              "NOT_WEAK_MIXING")
    return DecayCurve(tuple(points), threshold, verdict, decays)


# ------------------------------------------------------------- cross-check

def _grid_violations(sr: ConditionCheck, s: ConditionCheck,
                     ad: AdaptedResult, sa: AperiodicResult,
                     mix: DecayCurve, erg: DecayCurve,
                     wm: DecayCurve) -> List[str]:
    out = []
    if sr.verdict == TriState.HOLDS and s.verdict == TriState.FAILS:
        out.append("SR holds but S fails")
    struct_sr = ad.adapted and sa.strictly_aperiodic
    if sr.verdict == TriState.HOLDS and not struct_sr:
        out.append("SR holds but not (adapted and strictly aperiodic)")
    if sr.verdict == TriState.FAILS and struct_sr:
        out.append("SR fails but adapted and strictly aperiodic")
    if s.verdict == TriState.HOLDS and not ad.adapted:
        out.append("S holds but not adapted")
    if s.verdict == TriState.FAILS and ad.adapted:
        out.append("S fails but adapted")
    if mix.conclusive and sr.verdict != TriState.INDETERMINATE:
        if mix.decays != (sr.verdict == TriState.HOLDS):
            out.append("empirical mixing disagrees with SR")
    if erg.conclusive and s.verdict != TriState.INDETERMINATE:
        if erg.decays != (s.verdict == TriState.HOLDS):
            out.append("empirical ergodicity disagrees with S")
    if wm.conclusive and mix.conclusive and wm.decays != mix.decays:
        out.append("weak mixing disagrees with mixing")
    if erg.decays is True and not ad.adapted:
        out.append("empirically ergodic but not adapted")
    if mix.decays is True and not sa.strictly_aperiodic:
        out.append("empirically mixing but not strictly aperiodic")
    return out


def cross_check(mu: GroupMeasure, tol: float = 1e-8,
                mixing_n_max: int = 1024, ergodic_n_max: int = 512) -> Verdict:
    """Evaluate all six conditions and list violated implications."""
    require_probability(mu)
    sr = check_sr(mu, tol)
    s = check_s(mu, tol)
    ad = adapted(mu)
    sa = strictly_aperiodic_check(mu)
    mix = empirical_mixing(mu, n_max=mixing_n_max)
    erg = empirical_ergodic(mu, n_max=ergodic_n_max)
    wm = empirical_weak_mixing(mu, n_max=ergodic_n_max)
    violations = _grid_violations(sr, s, ad, sa, mix, erg, wm)
    return Verdict(sr, s, ad, sa, mix, erg, wm, tuple(violations))
