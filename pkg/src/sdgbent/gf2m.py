"""Minimal GF(2^m) with log/antilog tables, enough for the Dillon-type family."""
from __future__ import annotations

import itertools
from functools import cached_property

# conventional moduli, so outputs are reproducible bit-for-bit
DEFAULT_MODULI = {1: 0b11, 2: 0b111, 3: 0b1011, 4: 0b10011, 5: 0b100101, 6: 0b1000011}


def _clmul_mod(a: int, b: int, m: int, modulus: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m:
            a ^= modulus
    return r


class GF2mField:
    """Elements are the integers 0..2^m-1 read as polynomial coefficients."""

    def __init__(self, m: int, modulus: int | None = None):
        if m < 1:
            raise ValueError("m must be >= 1")
        if modulus is None:
            if m not in DEFAULT_MODULI:
                raise ValueError(f"no default modulus for m={m}")
            modulus = DEFAULT_MODULI[m]
        if modulus >> m != 1:
            raise ValueError("modulus must have degree m")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self.exp, self.log = self._tables()

    def _tables(self):
        n = self.order - 1
        for g in range(2, self.order) if self.order > 2 else [1]:
            exp = [0] * (2 * n)
            x = 1
            seen = set()
            for i in range(n):
                exp[i] = x
                seen.add(x)
                x = _clmul_mod(x, g, self.m, self.modulus)
            if len(seen) == n and x == 1:
                for i in range(n, 2 * n):
                    exp[i] = exp[i - n]
                log = [0] * self.order
                for i in range(n):
                    log[exp[i]] = i
                return exp, log
        raise ValueError(f"modulus {bin(self.modulus)} is not irreducible")

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        """Multiplicative inverse with the convention 1/0 = 0."""
        if a == 0:
            return 0
        return self.exp[(self.order - 1 - self.log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> range:
        return range(self.order)

    def trace(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.m):
            t ^= x
            x = self.mul(x, x)
        return t  # lies in {0, 1}

    @cached_property
    def self_dual_basis(self) -> tuple[int, ...]:
        """Basis b_1..b_m with Tr(b_i b_j) = [i == j]; the first one found in lexicographic order."""
        for basis in itertools.combinations(range(1, self.order), self.m):
            if all(self.trace(self.mul(u, v)) == (u == v) for u in basis for v in basis):
                return basis
        raise ValueError("no self-dual basis found")

    def coordinates(self, a: int) -> int:
        """Bitmask (Tr(a b_1), ..., Tr(a b_m)), b_1 in the top bit.

        With these coordinates the dot product of two elements equals Tr(x y).
        """
        v = 0
        for b in self.self_dual_basis:
            v = (v << 1) | self.trace(self.mul(a, b))
        return v
