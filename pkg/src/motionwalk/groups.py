"""Finite motion groups A x| K with a validated automorphism action.

A is the homogeneous abelian group (Z_n)^d, K is given extensionally by a
multiplication table, and K acts on A through integer matrices mod n.  The
dual group of A is identified with (Z_n)^d through the standard bilinear
pairing, and K acts on characters through the inverse matrices.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .errors import NotAGroupTable, NotAHomomorphism, NotInvertible

__all__ = [
    "AbelianGroup",
    "KGroup",
    "MotionGroup",
    "GElem",
    "Character",
    "DualOrbit",
    "build_motion_group",
    "multiply",
    "inverse",
    "dual_action",
    "dual_orbits",
]


@dataclass(frozen=True)
class AbelianGroup:
    """The translation part (Z_n)^d; also serves as its own dual group."""

    modulus: int
    rank: int

    def __post_init__(self) -> None:
        if self.modulus < 1 or self.rank < 1:
            raise ValueError(f"need n >= 1 and d >= 1, got n={self.modulus}, d={self.rank}")

    @property
    def size(self) -> int:
        return self.modulus ** self.rank

    def index(self, vec: Sequence[int]) -> int:
        # lexicographic enumeration, first coordinate most significant
        idx = 0
        for v in vec:
            idx = idx * self.modulus + (v % self.modulus)
        return idx

    def vector(self, idx: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.rank):
            out.append(idx % self.modulus)
            idx //= self.modulus
        return tuple(reversed(out))

    def elements(self) -> Iterator[Tuple[int, ...]]:
        for idx in range(self.size):
            yield self.vector(idx)

    def pairing_exponent(self, a: Sequence[int], alpha: Sequence[int]) -> int:
        """Integer e with <a, alpha> = exp(2*pi*i*e/n), reduced mod n."""
        return sum(x * y for x, y in zip(a, alpha)) % self.modulus

    def pairing(self, a: Sequence[int], alpha: Sequence[int]) -> complex:
        e = self.pairing_exponent(a, alpha)
        return np.exp(2j * np.pi * e / self.modulus)


@dataclass(frozen=True)
class GElem:
    """Group element (a, k): translation vector and K-element index."""

    a: Tuple[int, ...]
    k: int


@dataclass(frozen=True)
class Character:
    """Character of A, identified with a vector alpha in (Z_n)^d."""

    alpha: Tuple[int, ...]

    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.alpha)


@dataclass(frozen=True)
class DualOrbit:
    representative: Character
    members: Tuple[Character, ...]
    stabilizer_size: int


@dataclass(frozen=True, eq=False)
class KGroup:
    """The rotation part: extension-by-table group with action matrices.

    table[i, j] is the index of k_i * k_j; index 0 is the identity.
    action[i] is the d x d integer matrix of phi_{k_i} acting on column
    vectors mod n.
    """

    order: int
    table: np.ndarray
    inverses: np.ndarray
    action: np.ndarray

    def inv(self, k: int) -> int:
        return int(self.inverses[k])


@dataclass(eq=False)
class MotionGroup:
    """Semidirect product G = A x| K with the fixed element enumeration
    (a lexicographic, then k index)."""

    abelian: AbelianGroup
    k: KGroup
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    _mult_table: np.ndarray | None = field(default=None, repr=False)
    _inv_perm: np.ndarray | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return self.abelian.size * self.k.order

    def index(self, x: GElem) -> int:
        return self.abelian.index(x.a) * self.k.order + x.k

    def element(self, idx: int) -> GElem:
        a_idx, k = divmod(idx, self.k.order)
        return GElem(self.abelian.vector(a_idx), k)

    def elements(self) -> Iterator[GElem]:
        for idx in range(self.size):
            yield self.element(idx)

    def identity(self) -> GElem:
        return GElem((0,) * self.abelian.rank, 0)

    def act(self, k: int, a: Sequence[int]) -> Tuple[int, ...]:
        """phi_k(a) = M_k a mod n (column convention)."""
        m = self.k.action[k]
        vec = np.asarray(a, dtype=np.int64)
        return tuple(int(v) for v in (m @ vec) % self.abelian.modulus)

    def mult_table(self) -> np.ndarray:
        """Dense |G| x |G| index table, built once and shared read-only."""
        if self._mult_table is None:
            with self._lock:
                if self._mult_table is None:
                    self._mult_table = _build_mult_table(self)
        return self._mult_table

    def inv_perm(self) -> np.ndarray:
        """Index permutation x -> x^{-1}."""
        if self._inv_perm is None:
            with self._lock:
                if self._inv_perm is None:
                    self._inv_perm = _build_inv_perm(self)
        return self._inv_perm


def _int_det(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by cofactor expansion (d is small)."""
    d = len(m)
    if d == 1:
        return int(m[0][0])
    total = 0
    for j in range(d):
        minor = [[int(row[c]) for c in range(d) if c != j] for row in m[1:]]
        sign = -1 if j % 2 else 1
        total += sign * int(m[0][j]) * _int_det(minor)
    return total


def _validate_k_table(table: np.ndarray) -> np.ndarray:
    order = table.shape[0]
    if table.shape != (order, order):
        raise NotAGroupTable(f"table must be square, got shape {table.shape}")
    if not np.issubdtype(table.dtype, np.integer):
        raise NotAGroupTable("table entries must be integers")
    if table.min() < 0 or table.max() >= order:
        raise NotAGroupTable("table entries must be indices in [0, order)")
    idx = np.arange(order)
    if not (np.array_equal(table[0], idx) and np.array_equal(table[:, 0], idx)):
        raise NotAGroupTable("index 0 must be the identity")
    for i in range(order):
        if len(set(table[i].tolist())) != order or len(set(table[:, i].tolist())) != order:
            raise NotAGroupTable(f"row/column {i} is not a permutation")
    inverses = np.full(order, -1, dtype=np.int64)
    for i in range(order):
        js = np.where(table[i] == 0)[0]
        if len(js) != 1 or table[js[0], i] != 0:
            raise NotAGroupTable(f"element {i} has no two-sided inverse")
        inverses[i] = js[0]
    # associativity, exhaustive; order stays small so cubic cost is fine
    left = table[table, :]        # (i,j,k) -> (ij)k
    right = table[:, table]       # (i,j,k) -> i(jk)
    if not np.array_equal(left, right):
        bad = np.argwhere(left != right)[0]
        raise NotAGroupTable(f"associativity fails at triple {tuple(int(v) for v in bad)}")
    return inverses


def build_motion_group(
    n: int,
    d: int,
    table: Sequence[Sequence[int]],
    action_matrices: Sequence[Sequence[Sequence[int]]],
) -> MotionGroup:
    """Construct and fully validate a finite motion group.

    Raises NotAGroupTable, NotAHomomorphism or NotInvertible when the data
    does not describe a semidirect product.
    """
    abelian = AbelianGroup(n, d)
    table_arr = np.asarray(table, dtype=np.int64)
    inverses = _validate_k_table(table_arr)
    order = table_arr.shape[0]

    action = np.asarray(action_matrices, dtype=np.int64)
    if action.shape != (order, d, d):
        raise NotAHomomorphism(
            f"need one {d}x{d} matrix per K element, got shape {action.shape}"
        )
    action = action % n
    eye = np.eye(d, dtype=np.int64) % n
    if not np.array_equal(action[0], eye):
        raise NotAHomomorphism("action of the identity must be the identity matrix")
    for i in range(order):
        det = _int_det(action[i].tolist()) % n
        if gcd(det, n) != 1:
            raise NotInvertible(f"action matrix {i} has det {det} not coprime to {n}")
    for i in range(order):
        for j in range(order):
            composed = (action[i] @ action[j]) % n
            if not np.array_equal(composed, action[table_arr[i, j]]):
                raise NotAHomomorphism(
                    f"action[{i}]*action[{j}] != action[{i}*{j}] mod {n}"
                )

    kgroup = KGroup(order=order, table=table_arr, inverses=inverses, action=action)
    return MotionGroup(abelian=abelian, k=kgroup)


def multiply(g: MotionGroup, x: GElem, y: GElem) -> GElem:
    """(a1, k1) * (a2, k2) = (a1 + phi_{k1}(a2), k1 k2)."""
    n = g.abelian.modulus
    moved = g.act(x.k, y.a)
    a = tuple((u + v) % n for u, v in zip(x.a, moved))
    return GElem(a, int(g.k.table[x.k, y.k]))


def inverse(g: MotionGroup, x: GElem) -> GElem:
    """(a, k)^{-1} = (phi_{k^{-1}}(-a), k^{-1})."""
    n = g.abelian.modulus
    kinv = g.k.inv(x.k)
    neg = tuple((-v) % n for v in x.a)
    return GElem(g.act(kinv, neg), kinv)


def dual_action(g: MotionGroup, k: int, alpha: Character) -> Character:
    """Action on characters: alpha -> alpha . M_{k^{-1}} (row convention).

    Satisfies <phi_k(a), alpha> = <a, dual_action(k^{-1}, alpha)> for all a.
    """
    m = g.k.action[g.k.inv(k)]
    vec = np.asarray(alpha.alpha, dtype=np.int64)
    moved = (vec @ m) % g.abelian.modulus
    return Character(tuple(int(v) for v in moved))


def dual_orbits(g: MotionGroup) -> List[DualOrbit]:
    """Partition of the dual group into K-orbits.

    The orbit of the trivial character comes first; every representative is
    the lexicographically minimal member of its orbit.
    """
    ab = g.abelian
    seen = [False] * ab.size
    orbits: List[DualOrbit] = []
    for idx in range(ab.size):
        if seen[idx]:
            continue
        rep = Character(ab.vector(idx))
        members = set()
        frontier = [rep]
        while frontier:
            cur = frontier.pop()
            if cur in members:
                continue
            members.add(cur)
            seen[ab.index(cur.alpha)] = True
            for k in range(g.k.order):
                nxt = dual_action(g, k, cur)
                if nxt not in members:
                    frontier.append(nxt)
        ordered = tuple(sorted(members, key=lambda c: c.alpha))
        orbits.append(
            DualOrbit(
                representative=rep,
                members=ordered,
                stabilizer_size=g.k.order // len(ordered),
            )
        )
    return orbits


def _build_mult_table(g: MotionGroup) -> np.ndarray:
    n = g.abelian.modulus
    na, nk = g.abelian.size, g.k.order
    avecs = np.array([g.abelian.vector(i) for i in range(na)], dtype=np.int64)
    pow_basis = n ** np.arange(g.abelian.rank - 1, -1, -1, dtype=np.int64)
    table = np.empty((g.size, g.size), dtype=np.int32)
    for ki in range(nk):
        moved = (avecs @ g.k.action[ki].T) % n            # phi_{ki}(a_j) for all j
        summed = (avecs[:, None, :] + moved[None, :, :]) % n
        out_a = summed @ pow_basis                        # (na, na) target a-index
        for kj in range(nk):
            out_idx = out_a * nk + int(g.k.table[ki, kj])
            rows = np.arange(na) * nk + ki
            cols = np.arange(na) * nk + kj
            table[np.ix_(rows, cols)] = out_idx
    return table


def _build_inv_perm(g: MotionGroup) -> np.ndarray:
    out = np.empty(g.size, dtype=np.int64)
    for idx in range(g.size):
        out[idx] = g.index(inverse(g, g.element(idx)))
    return out
