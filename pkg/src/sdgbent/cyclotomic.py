"""Exact arithmetic in Z[w], w = exp(2*pi*i/q).

Elements are stored unreduced, as integer coefficient vectors in
Z[x]/(x^q - 1). Equality and zero tests reduce modulo the q-th cyclotomic
polynomial, which gives a canonical form of length phi(q).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial. Coefficients low -> high."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = num[:dd] if dd else [0]
    return quot, rem


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Coefficients (low -> high) of Phi_q, by dividing x^q - 1 by Phi_d, d | q, d < q."""
    if q < 1:
        raise ValueError("q must be >= 1")
    num = [-1] + [0] * (q - 1) + [1]
    for d in range(1, q):
        if q % d == 0:
            quot, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not any(rem), "cyclotomic factor must divide exactly"
            num = quot
    return tuple(num)


class CycRing:
    """Per-q tables: reduction matrix and reduced roots of unity."""

    def __init__(self, q: int):
        self.q = q
        self.phi = cyclotomic_polynomial(q)
        self.deg = len(self.phi) - 1
        # row j = reduced form of w^j, for j < 2q (products of two reduced elements fit)
        rows = []
        for j in range(2 * q):
            mono = [0] * j + [1]
            _, rem = _poly_divmod(mono, self.phi)
            rem = list(rem) + [0] * (self.deg - len(rem))
            rows.append(tuple(rem[: self.deg]))
        self.red_rows = rows
        self.red = np.array(rows[:q], dtype=np.int64)  # (q, deg)
        self.roots = self.red  # reduced w^j, j in [0, q)
        self._root_index = {r: j for j, r in enumerate(rows[:q])}

    def reduce(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.deg
        for j, c in enumerate(coeffs):
            if c:
                row = self.red_rows[j]
                for k in range(self.deg):
                    out[k] += c * row[k]
        return tuple(out)

    def root_exponent(self, reduced: Sequence[int]) -> int | None:
        return self._root_index.get(tuple(reduced))

    def mul_reduced(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return self.reduce(_poly_mul(a, b))

    def mul_matrix(self, a: Sequence[int]) -> np.ndarray:
        """Integer matrix M with reduce(v * a) = v @ M for reduced row vectors v."""
        m = np.zeros((self.deg, self.deg), dtype=object)
        for i in range(self.deg):
            unit = [0] * self.deg
            unit[i] = 1
            m[i] = self.mul_reduced(unit, a)
        return m


@lru_cache(maxsize=None)
def ring(q: int) -> CycRing:
    return CycRing(q)


@dataclass(frozen=True, eq=False)
class CycElem:
    coeffs: tuple[int, ...]
    q: int

    def __post_init__(self):
        if len(self.coeffs) != self.q:
            raise ValueError(f"expected {self.q} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, q: int) -> "CycElem":
        return cls((0,) * q, q)

    @classmethod
    def const(cls, c: int, q: int) -> "CycElem":
        return cls((c,) + (0,) * (q - 1), q)

    @classmethod
    def root(cls, j: int, q: int, scale: int = 1) -> "CycElem":
        coeffs = [0] * q
        coeffs[j % q] = scale
        return cls(tuple(coeffs), q)

    @classmethod
    def from_exponents(cls, exps: Iterable[int], q: int) -> "CycElem":
        """Sum of w^e over ``exps``."""
        coeffs = [0] * q
        for e in exps:
            coeffs[e % q] += 1
        return cls(tuple(coeffs), q)

    def _check(self, other: "CycElem") -> None:
        if self.q != other.q:
            raise ValueError(f"modulus mismatch: {self.q} vs {other.q}")

    def __add__(self, other: "CycElem") -> "CycElem":
        self._check(other)
        return CycElem(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.q)

    def __neg__(self) -> "CycElem":
        return CycElem(tuple(-a for a in self.coeffs), self.q)

    def __sub__(self, other: "CycElem") -> "CycElem":
        return self + (-other)

    def __mul__(self, other) -> "CycElem":
        if isinstance(other, int):
            return CycElem(tuple(other * a for a in self.coeffs), self.q)
        self._check(other)
        q = self.q
        out = [0] * q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % q] += a * b
        return CycElem(tuple(out), q)

    __rmul__ = __mul__

    def rotate_mul(self, j: int) -> "CycElem":
        """Multiply by w^j (a cyclic shift of the coefficients)."""
        j %= self.q
        c = self.coeffs
        return CycElem(c[-j:] + c[:-j] if j else c, self.q)

    def conjugate(self) -> "CycElem":
        c = self.coeffs
        return CycElem((c[0],) + tuple(reversed(c[1:])), self.q)

    def reduced(self) -> tuple[int, ...]:
        return ring(self.q).reduce(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.q == other.q and (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.q, self.reduced()))

    def to_complex(self) -> complex:
        w = np.exp(2j * np.pi / self.q)
        return complex(sum(c * w ** j for j, c in enumerate(self.coeffs)))

    def __repr__(self) -> str:
        terms = [f"{c}w^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"CycElem({' + '.join(terms) or '0'}, q={self.q})"


def add(a: CycElem, b: CycElem) -> CycElem:
    return a + b


def negate(z: CycElem) -> CycElem:
    return -z


def rotate_mul(z: CycElem, j: int) -> CycElem:
    return z.rotate_mul(j)


def conjugate(z: CycElem) -> CycElem:
    return z.conjugate()


def is_zero(z: CycElem) -> bool:
    return z.is_zero()


def sqrt2(q: int) -> CycElem | None:
    """sqrt(2) = w8 + w8^-1 as an element of Z[w], available iff 8 | q."""
    if q % 8:
        return None
    k = q // 8
    return CycElem.root(k, q) + CycElem.root(-k, q)


def power_of_sqrt2(n: int, q: int) -> CycElem | None:
    """2^(n/2) in Z[w], or None when it is not in the ring."""
    if n % 2 == 0:
        return CycElem.const(2 ** (n // 2), q)
    s = sqrt2(q)
    return None if s is None else s * 2 ** (n // 2)


def as_scaled_root(z: CycElem, m) -> int | None:
    """Smallest d with z == m * w^d, else None. ``m`` is an int or a CycElem."""
    q = z.q
    scale = CycElem.const(m, q) if isinstance(m, int) else m
    zr = z.reduced()
    if not any(zr):
        return None
    r = ring(q)
    for d in range(q):
        if r.reduce(scale.rotate_mul(d).coeffs) == zr:
            return d
    return None


def norm_squared_equals(z: CycElem, m: int) -> bool:
    """True iff z * conj(z) reduces to the rational integer m."""
    prod = (z * z.conjugate()).reduced()
    return prod[0] == m and not any(prod[1:])
