"""Residues mod q, binary vectors and the Hamming/Lee metrics.

Binary vectors are plain ``int`` bitmasks. A vector ``x = (x1, ..., xn)`` is
stored with ``x1`` in the most significant bit, so the truth-table index of
``x`` is ``sum(x_i * 2**(n - i))``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class QParam:
    q: int
    half: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2 or self.q % 2:
            raise ValueError(f"q must be a positive even integer, got {self.q!r}")
        object.__setattr__(self, "half", self.q // 2)


def check_q(q: int) -> int:
    return QParam(q).q


@dataclass(frozen=True)
class GF2Vector:
    bits: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bitmask {self.bits} does not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, seq: Sequence[int]) -> "GF2Vector":
        return cls(bits_to_int(seq), len(seq))

    def to_tuple(self) -> tuple[int, ...]:
        return int_to_bits(self.bits, self.n)

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    def __xor__(self, other: "GF2Vector") -> "GF2Vector":
        _same_dim(self, other)
        return GF2Vector(self.bits ^ other.bits, self.n)


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return popcount(x) & 1


def bits_to_int(seq: Sequence[int]) -> int:
    v = 0
    for b in seq:
        if b not in (0, 1):
            raise ValueError(f"not a bit: {b!r}")
        v = (v << 1) | b
    return v


def int_to_bits(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> (n - 1 - i)) & 1 for i in range(n))


def _same_dim(x: GF2Vector, y: GF2Vector) -> None:
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")


def inner_product(x: GF2Vector, y: GF2Vector) -> int:
    """``<x, y>`` over F_2."""
    _same_dim(x, y)
    return parity(x.bits & y.bits)


def lee_weight(v: int, q: int) -> int:
    v %= q
    return min(v, q - v)


def _check_pair(f, g) -> None:
    if f.n != g.n or f.q != g.q:
        raise ValueError(f"parameter mismatch: (n={f.n}, q={f.q}) vs (n={g.n}, q={g.q})")


def lee_distance(f, g) -> int:
    _check_pair(f, g)
    q = f.q
    return sum(lee_weight(a - b, q) for a, b in zip(f.values, g.values))


def hamming_distance(f, g) -> int:
    _check_pair(f, g)
    return sum(a != b for a, b in zip(f.values, g.values))
