"""Binary orthogonal group, the extended orthogonal action and orbit classification."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .gbf import GBF
from .zq import parity, popcount

MAX_LIST_N = 6  # |O_7| is about 1.45e6; iterate instead of listing beyond this


@dataclass(frozen=True)
class OrthMatrix:
    """n x n binary matrix; rows are bitmasks with column 1 in the top bit."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        if any(not 0 <= r < (1 << self.n) for r in self.rows):
            raise ValueError("row does not fit in n bits")

    @classmethod
    def identity(cls, n: int) -> "OrthMatrix":
        return cls(n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "OrthMatrix":
        n = len(rows)
        return cls(n, tuple(int("".join(map(str, r)), 2) for r in rows))

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "OrthMatrix":
        """Row i has its single 1 in column perm[i] (0-based)."""
        n = len(perm)
        return cls(n, tuple(1 << (n - 1 - p) for p in perm))

    def is_orthogonal(self) -> bool:
        return all(
            parity(self.rows[i] & self.rows[j]) == (i == j)
            for i in range(self.n)
            for j in range(i, self.n)
        )

    def apply(self, v: int) -> int:
        """Matrix-vector product L v over F_2."""
        out = 0
        for r in self.rows:
            out = (out << 1) | parity(r & v)
        return out

    def transpose(self) -> "OrthMatrix":
        n = self.n
        cols = []
        for j in range(n):
            bit = 1 << (n - 1 - j)
            c = 0
            for r in self.rows:
                c = (c << 1) | bool(r & bit)
            cols.append(c)
        return OrthMatrix(n, tuple(cols))

    def __matmul__(self, other: "OrthMatrix") -> "OrthMatrix":
        ot = other.transpose()
        rows = []
        for r in self.rows:
            rows.append(ot.apply(r))
        return OrthMatrix(self.n, tuple(rows))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> (self.n - 1 - j)) & 1 for j in range(self.n)] for r in self.rows]

    def __str__(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.to_lists())


def iter_orthogonal(n: int) -> Iterator[OrthMatrix]:
    """Backtracking over rows: odd weight, orthogonal to every earlier row."""
    odd = [v for v in range(1, 1 << n) if popcount(v) & 1]

    def extend(chosen: list[int]):
        if len(chosen) == n:
            yield OrthMatrix(n, tuple(chosen))
            return
        for v in odd:
            if all(parity(v & c) == 0 for c in chosen) and v not in chosen:
                chosen.append(v)
                yield from extend(chosen)
                chosen.pop()

    yield from extend([])


def enumerate_orthogonal(n: int) -> list[OrthMatrix]:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_LIST_N:
        raise ValueError(f"O_{n} is too large to list; use iter_orthogonal({n}) instead")
    return list(iter_orthogonal(n))


def orthogonal_order_bruteforce(n: int) -> int:
    """|O_n| by testing all 2^(n^2) binary matrices; oracle for small n."""
    count = 0
    for rows in itertools.product(range(1 << n), repeat=n):
        if OrthMatrix(n, rows).is_orthogonal():
            count += 1
    return count


@dataclass(frozen=True)
class ExtOrthElement:
    """x -> f(L(x + c)) + (q/2)<c, x> + d."""

    L: OrthMatrix
    c: int
    d: int

    @property
    def n(self) -> int:
        return self.L.n

    @property
    def c_weight_even(self) -> bool:
        return popcount(self.c) % 2 == 0

    def permutation(self) -> np.ndarray:
        return np.array([self.L.apply(x ^ self.c) for x in range(1 << self.n)], dtype=np.int64)

    def twist(self) -> np.ndarray:
        return np.array([parity(self.c & x) for x in range(1 << self.n)], dtype=np.int64)


def identity_element(n: int) -> ExtOrthElement:
    return ExtOrthElement(OrthMatrix.identity(n), 0, 0)


def compose(e2: ExtOrthElement, e1: ExtOrthElement, q: int) -> ExtOrthElement:
    """The element acting as ``e1`` first, then ``e2``."""
    c1t = e2.L.transpose().apply(e1.c)
    L = e1.L @ e2.L
    c = e2.c ^ c1t
    d = (e1.d + e2.d + (q // 2) * parity(c1t & e2.c)) % q
    return ExtOrthElement(L, c, d)


def apply_symmetry(f: GBF, e: ExtOrthElement) -> GBF:
    if e.n != f.n:
        raise ValueError(f"dimension mismatch: element on {e.n} variables, function on {f.n}")
    q = f.q
    vals = (f.array()[e.permutation()] + (q // 2) * e.twist() + e.d) % q
    return GBF(f.n, q, tuple(int(v) for v in vals))


def sd_asd_bijection(f: GBF, e: ExtOrthElement) -> GBF:
    """Odd-weight c swaps self-dual and anti-self-dual functions."""
    if e.c_weight_even:
        raise ValueError("the self-dual/anti-self-dual bijection needs wt(c) odd")
    return apply_symmetry(f, e)


def group_elements(n: int, q: int, parity_c: str = "even") -> Iterator[ExtOrthElement]:
    want = {"even": 0, "odd": 1}[parity_c]
    cs = [c for c in range(1 << n) if popcount(c) % 2 == want]
    for L in iter_orthogonal(n):
        for c in cs:
            for d in range(q):
                yield ExtOrthElement(L, c, d)


def extended_group_order(n: int, q: int) -> int:
    return sum(1 for _ in iter_orthogonal(n)) * 2 ** (n - 1) * q


@dataclass(frozen=True)
class Orbit:
    canonical: GBF
    size: int
    members: tuple[GBF, ...] = ()


class NotClosedError(ValueError):
    pass


def _image_tables(n: int, q: int, parity_c: str = "even"):
    """Index permutations and additive terms for every (L, c), d handled separately."""
    want = {"even": 0, "odd": 1}[parity_c]
    perms, adds = [], []
    for L in iter_orthogonal(n):
        for c in range(1 << n):
            if popcount(c) % 2 != want:
                continue
            e = ExtOrthElement(L, c, 0)
            perms.append(e.permutation())
            adds.append((q // 2) * e.twist())
    return np.array(perms), np.array(adds)


def orbit_of(f: GBF, perms: np.ndarray, adds: np.ndarray) -> np.ndarray:
    """Sorted unique value tables of the orbit of ``f``."""
    q = f.q
    base = f.array()[perms] + adds  # (|O| * 2^(n-1), 2^n)
    imgs = (base[None, :, :] + np.arange(q)[:, None, None]) % q
    return np.unique(imgs.reshape(-1, f.size), axis=0)


def classify_orbits(functions: Iterable[GBF], n: int, q: int, keep_members: bool = True) -> list[Orbit]:
    """Partition a set closed under the even-c extended orthogonal group into orbits."""
    funcs = list(dict.fromkeys(functions))
    for f in funcs:
        if f.n != n or f.q != q:
            raise ValueError(f"function {f} does not have n={n}, q={q}")
    known = {f.values for f in funcs}
    perms, adds = _image_tables(n, q)
    done: set[tuple[int, ...]] = set()
    orbits = []
    for f in funcs:
        if f.values in done:
            continue
        members = [tuple(int(v) for v in row) for row in orbit_of(f, perms, adds)]
        for m in members:
            if m not in known:
                raise NotClosedError(f"input set is not closed: {GBF(n, q, m)} escapes")
        done.update(members)
        orbits.append(
            Orbit(
                canonical=GBF(n, q, members[0]),
                size=len(members),
                members=tuple(GBF(n, q, m) for m in members) if keep_members else (),
            )
        )
    orbits.sort(key=lambda o: o.canonical.values)
    return orbits


def stabilizer_size(f: GBF, q: int) -> int:
    perms, adds = _image_tables(f.n, q)
    base = f.array()[perms] + adds
    imgs = (base[None, :, :] + np.arange(q)[:, None, None]) % q
    return int((imgs == f.array()).all(axis=-1).sum())
