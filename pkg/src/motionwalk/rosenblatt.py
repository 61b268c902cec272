"""The lattice counterexample on G = Z^2 x| Z: an aperiodic walk that is
neither mixing nor ergodic, certified by an explicit approximate
eigenvector.

Z acts on Z^2 by powers of the unimodular matrix Gamma = [[1,2],[2,3]],
row vectors on the left: phi_k(n) = n*Gamma^k. The walk takes four atoms
with weight 1/4 each. Under the family of unitary representations
Lambda_t on l^2(Z), parametrized by t in the 2-torus, the walk operator
has 1 in its approximate point spectrum when t is chosen along the
contracting eigenvector of Gamma^{-1}. Everything here runs in exact
arithmetic over Q(sqrt 5); floats appear only inside complex
exponentials.

Entries of Gamma^{-m} grow like (2+sqrt5)^m, and the eigen-phase
lambda^m * (t.v) is the difference of two such giants, so the mod-1
reduction uses an integer square root carried to an adaptive precision a
little past the coefficient size.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import BudgetExceeded

__all__ = [
    "ZElem",
    "QSqrt5",
    "WindowVector",
    "GAMMA",
    "GAMMA_INV",
    "z_identity",
    "z_multiply",
    "z_inverse",
    "gamma_power",
    "rosenblatt_measure",
    "eigen_parameter",
    "phase_exponent",
    "lambda_apply",
    "measure_apply",
    "apply_lambda_mu",
    "phi_window",
    "defect_norm",
    "DefectResult",
    "aperiodicity_witness",
]

GAMMA: Tuple[Tuple[int, int], Tuple[int, int]] = ((1, 2), (2, 3))
GAMMA_INV: Tuple[Tuple[int, int], Tuple[int, int]] = ((-3, 2), (2, -1))

Mat2 = Tuple[Tuple[int, int], Tuple[int, int]]
_IDENTITY2: Mat2 = ((1, 0), (0, 1))


@dataclass(frozen=True)
class ZElem:
    """Group element (n1, n2, k) of Z^2 x| Z."""

    n1: int
    n2: int
    k: int


@dataclass(frozen=True)
class QSqrt5:
    """Exact scalar x + y*sqrt(5) with rational coefficients."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "QSqrt5") -> "QSqrt5":
        return QSqrt5(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "QSqrt5") -> "QSqrt5":
        return QSqrt5(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "QSqrt5":
        return QSqrt5(-self.x, -self.y)

    def __mul__(self, other: "QSqrt5") -> "QSqrt5":
        return QSqrt5(
            self.x * other.x + 5 * self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    def scale(self, c: int) -> "QSqrt5":
        return QSqrt5(self.x * c, self.y * c)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


Q_ZERO = QSqrt5(Fraction(0), Fraction(0))
Q_ONE = QSqrt5(Fraction(1), Fraction(0))


def _mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def gamma_power(k: int) -> Mat2:
    """Gamma^k for any integer k, exact (Gamma is unimodular)."""
    base = GAMMA if k >= 0 else GAMMA_INV
    e = abs(k)
    out = _IDENTITY2
    acc = base
    while e:
        if e & 1:
            out = _mat_mul(out, acc)
        acc = _mat_mul(acc, acc)
        e >>= 1
    return out


def z_identity() -> ZElem:
    return ZElem(0, 0, 0)


def z_multiply(x: ZElem, y: ZElem) -> ZElem:
    """(n, k)(m, l) = (n + m*Gamma^k, k + l), rows on the left."""
    g = gamma_power(x.k)
    return ZElem(
        x.n1 + y.n1 * g[0][0] + y.n2 * g[1][0],
        x.n2 + y.n1 * g[0][1] + y.n2 * g[1][1],
        x.k + y.k,
    )


def z_inverse(x: ZElem) -> ZElem:
    g = gamma_power(-x.k)
    return ZElem(
        -(x.n1 * g[0][0] + x.n2 * g[1][0]),
        -(x.n1 * g[0][1] + x.n2 * g[1][1]),
        -x.k,
    )


def rosenblatt_measure() -> List[Tuple[ZElem, Fraction]]:
    """Four atoms of weight 1/4: a, b, b*c, c*c with a=(0,0,1),
    b=(1,2,1), c=(2,3,1); the products are computed, not transcribed."""
    a = ZElem(0, 0, 1)
    b = ZElem(1, 2, 1)
    c = ZElem(2, 3, 1)
    w = Fraction(1, 4)
    return [(a, w), (b, w), (z_multiply(b, c), w), (z_multiply(c, c), w)]


def eigen_parameter() -> Tuple[Tuple[QSqrt5, QSqrt5], QSqrt5]:
    """The contracting left eigenpair of Gamma^{-1}: lambda = sqrt5 - 2
    and t = (1, (1+sqrt5)/2), normalized to t1 = 1."""
    lam = QSqrt5(Fraction(-2), Fraction(1))
    t = (Q_ONE, QSqrt5(Fraction(1, 2), Fraction(1, 2)))
    return t, lam


@lru_cache(maxsize=None)
def _sqrt5_fraction(prec: int) -> Fraction:
    # floor(sqrt(5*4^prec)) / 2^prec, within 2^-prec of sqrt 5
    return Fraction(isqrt(5 << (2 * prec)), 1 << prec)


def _fractional_part(q: QSqrt5) -> float:
    if q.y == 0:
        return float(q.x % 1)
    mag = q.y.numerator.bit_length() - q.y.denominator.bit_length()
    prec = max(mag, 0) + 128
    prec += -prec % 256  # quantize so the cached root is reused
    approx = q.x + q.y * _sqrt5_fraction(prec)
    return float(approx % 1)


def _phase(q: QSqrt5) -> complex:
    return complex(np.exp(2j * np.pi * _fractional_part(q)))


def phase_exponent(t: Sequence[QSqrt5], m: int, v: Tuple[int, int]) -> QSqrt5:
    """t * Gamma^{-m} * v' as an exact scalar."""
    g = gamma_power(-m)
    u0 = g[0][0] * v[0] + g[0][1] * v[1]
    u1 = g[1][0] * v[0] + g[1][1] * v[1]
    return t[0].scale(u0) + t[1].scale(u1)


class WindowVector:
    """Vector on Z supported on [offset, offset + len(values))."""

    def __init__(self, offset: int, values: np.ndarray) -> None:
        self.offset = int(offset)
        self.values = np.asarray(values, dtype=complex)

    def at(self, m: int) -> complex:
        i = m - self.offset
        if 0 <= i < len(self.values):
            return complex(self.values[i])
        return 0.0

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def sub(self, other: "WindowVector") -> "WindowVector":
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.values), other.offset + len(other.values))
        out = np.zeros(hi - lo, dtype=complex)
        out[self.offset - lo:self.offset - lo + len(self.values)] += self.values
        out[other.offset - lo:other.offset - lo + len(other.values)] -= other.values
        return WindowVector(lo, out)


def phi_window(n: int) -> WindowVector:
    """Normalized indicator of [0, n): the approximate eigenvector family."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return WindowVector(0, np.full(n, 1.0 / np.sqrt(n), dtype=complex))


def _exponent_sweep(t: Sequence[QSqrt5], lo: int, hi: int,
                    vs: Sequence[Tuple[int, int]]) -> Dict[int, List[QSqrt5]]:
    """Exact exponents t*Gamma^{-m}*v' for m in [lo, hi), one incremental
    Gamma^{-1} multiply per step."""
    out: Dict[int, List[QSqrt5]] = {}
    g = gamma_power(-lo)
    for m in range(lo, hi):
        row = []
        for v in vs:
            u0 = g[0][0] * v[0] + g[0][1] * v[1]
            u1 = g[1][0] * v[0] + g[1][1] * v[1]
            row.append(t[0].scale(u0) + t[1].scale(u1))
        out[m] = row
        g = _mat_mul(g, GAMMA_INV)
    return out


def lambda_apply(t: Sequence[QSqrt5], x: ZElem, phi: WindowVector) -> WindowVector:
    """[Lambda_t(x) phi](m) = exp(2 pi i t Gamma^{-m} (n1,n2)') phi(m - k)."""
    lo = phi.offset + min(x.k, 0)
    hi = phi.offset + len(phi.values) + max(x.k, 0)
    sweep = _exponent_sweep(t, lo, hi, [(x.n1, x.n2)])
    vals = np.array([_phase(sweep[m][0]) * phi.at(m - x.k) for m in range(lo, hi)])
    return WindowVector(lo, vals)


def measure_apply(t: Sequence[QSqrt5], phi: WindowVector) -> WindowVector:
    """Direct operator: sum of atom weights times unitary actions. Kept
    independent of apply_lambda_mu as its oracle."""
    atoms = rosenblatt_measure()
    lo = phi.offset
    hi = phi.offset + len(phi.values) + 2
    out = np.zeros(hi - lo, dtype=complex)
    for x, w in atoms:
        sweep = _exponent_sweep(t, lo, hi, [(x.n1, x.n2)])
        for m in range(lo, hi):
            out[m - lo] += float(w) * _phase(sweep[m][0]) * phi.at(m - x.k)
    return WindowVector(lo, out)


_V_B = (1, 2)
_V_BC = (9, 15)
_V_CC = (10, 16)


def apply_lambda_mu(t: Sequence[QSqrt5], phi: WindowVector) -> WindowVector:
    """The walk operator in collapsed form: the k=1 atoms contribute
    (1/4)[1 + E_m(1,2)] phi(m-1) and the k=2 atoms
    (1/4)[E_m(9,15) + E_m(10,16)] phi(m-2), with
    E_m(v) = exp(2 pi i t Gamma^{-m} v'). Window grows by two."""
    lo = phi.offset
    hi = phi.offset + len(phi.values) + 2
    sweep = _exponent_sweep(t, lo, hi, [_V_B, _V_BC, _V_CC])
    out = np.zeros(hi - lo, dtype=complex)
    for m in range(lo, hi):
        eb, ebc, ecc = (_phase(q) for q in sweep[m])
        out[m - lo] = 0.25 * (1.0 + eb) * phi.at(m - 1) \
            + 0.25 * (ebc + ecc) * phi.at(m - 2)
    return WindowVector(lo, out)


@dataclass(frozen=True)
class DefectResult:
    n: int
    direct: float
    closed_form: float

    def to_dict(self) -> dict:
        return {"n": self.n, "direct": self.direct, "closed_form": self.closed_form}


def defect_norm(t: Sequence[QSqrt5], n: int) -> DefectResult:
    """Squared defect ||A phi_n - phi_n||^2 of the walk operator A on the
    normalized window phi_n, via two routes: the operator itself and a
    closed-form row expansion.

    The expansion groups rows of A phi_n - phi_n by position: m=0 gives
    1/n; m=1 gives |1 + E_1(1,2) - 4|^2/(16n); interior rows 2 <= j <=
    n-1 give |1 + E_j(1,2) + E_j(9,15) + E_j(10,16) - 4|^2/(16n) with the
    exponent index following the row (the sweep index j, not the window
    size); m=n drops the -4 because phi_n(n) = 0; m=n+1 keeps only the
    shift-by-two pair. Grouping was fixed against the direct route, which
    is authoritative."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    phi = phi_window(n)
    diff = apply_lambda_mu(t, phi).sub(phi)
    direct = diff.norm() ** 2

    sweep = _exponent_sweep(t, 1, n + 2, [_V_B, _V_BC, _V_CC])

    def phases(m: int) -> Tuple[complex, complex, complex]:
        eb, ebc, ecc = (_phase(q) for q in sweep[m])
        return eb, ebc, ecc

    eb1, _, _ = phases(1)
    closed = 1.0 / n
    closed += abs(1.0 + eb1 - 4.0) ** 2 / (16.0 * n)
    ebn1, ebcn1, eccn1 = phases(n + 1)
    closed += abs(ebcn1 + eccn1) ** 2 / (16.0 * n)
    ebn, ebcn, eccn = phases(n)
    closed += abs(1.0 + ebn + ebcn + eccn) ** 2 / (16.0 * n)
    for j in range(2, n):
        ebj, ebcj, eccj = phases(j)
        closed += abs(1.0 + ebj + ebcj + eccj - 4.0) ** 2 / (16.0 * n)
    return DefectResult(n, direct, closed)


def _ball(gens: Iterable[ZElem], radius: int) -> List[ZElem]:
    seen = {z_identity()}
    frontier = [z_identity()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for s in gens:
                e = z_multiply(w, s)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return list(seen)


def _bfs_reaches(gens: List[ZElem], targets: List[ZElem], max_len: int,
                 max_states: int) -> bool:
    todo = set(targets)
    todo.discard(z_identity())
    seen = {z_identity()}
    frontier = [z_identity()]
    for _ in range(max_len):
        if not todo:
            return True
        nxt = []
        for w in frontier:
            for s in gens:
                e = z_multiply(w, s)
                if e in seen:
                    continue
                seen.add(e)
                nxt.append(e)
                todo.discard(e)
                if len(seen) > max_states:
                    raise BudgetExceeded(
                        f"state budget {max_states} exhausted with {len(todo)} targets left")
        frontier = nxt
    if todo:
        raise BudgetExceeded(
            f"word length {max_len} exhausted with {len(todo)} targets left")
    return True


def aperiodicity_witness(max_word_length: int = 12, max_states: int = 1_000_000) -> bool:
    """Bounded certificate search. True when the three standard
    generators (1,0,0), (0,1,0), (0,0,1) are reached twice over: once by
    words in the support and its inverses (the walk is adapted), and once
    by words in the difference set s0^{-1} s and its radius-1 conjugates
    (the support sits in no coset of a proper normal subgroup). Raises
    BudgetExceeded when the budget runs out; a failed search refutes
    nothing."""
    if max_word_length < 1:
        raise ValueError(f"need max_word_length >= 1, got {max_word_length}")
    atoms = [x for x, _ in rosenblatt_measure()]
    targets = [ZElem(1, 0, 0), ZElem(0, 1, 0), ZElem(0, 0, 1)]

    support_gens = atoms + [z_inverse(x) for x in atoms]
    adapted = _bfs_reaches(support_gens, targets, max_word_length, max_states)

    s0_inv = z_inverse(atoms[0])
    diffs = [z_multiply(s0_inv, s) for s in atoms[1:]]
    conjugators = _ball(support_gens, 1)
    diff_gens: List[ZElem] = []
    for w in conjugators:
        w_inv = z_inverse(w)
        for d in diffs:
            for e in (d, z_inverse(d)):
                diff_gens.append(z_multiply(z_multiply(w, e), w_inv))
    diff_gens = list(dict.fromkeys(diff_gens))
    aperiodic = _bfs_reaches(diff_gens, targets, max_word_length, max_states)
    return adapted and aperiodic
