"""Generalized Boolean functions F_2^n -> Z_q and their exact Walsh-Hadamard transform."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cyclotomic import CycElem, power_of_sqrt2, ring
from .zq import check_q

# coefficient magnitudes are bounded by 2^n; keep numpy int64 well clear of overflow
MAX_N = 24


@dataclass(frozen=True)
class GeneralizedBooleanFunction:
    n: int
    q: int
    values: tuple[int, ...]

    def __post_init__(self):
        check_q(self.q)
        if self.n < 0 or self.n > MAX_N:
            raise ValueError(f"n must lie in [0, {MAX_N}], got {self.n}")
        vals = tuple(int(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} values, got {len(vals)}")
        for v in vals:
            if not 0 <= v < self.q:
                raise ValueError(f"value {v} outside Z_{self.q}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_values(cls, values: Sequence[int], q: int) -> "GeneralizedBooleanFunction":
        n = len(values).bit_length() - 1
        if 1 << n != len(values):
            raise ValueError(f"length {len(values)} is not a power of two")
        return cls(n, q, tuple(int(v) % q for v in values))

    @classmethod
    def from_digits(cls, digits: str, q: int) -> "GeneralizedBooleanFunction":
        return cls.from_values([int(c) for c in digits], q)

    @classmethod
    def constant(cls, n: int, q: int, c: int = 0) -> "GeneralizedBooleanFunction":
        return cls(n, q, (c % q,) * (1 << n))

    @property
    def size(self) -> int:
        return 1 << self.n

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def digits(self) -> str:
        if self.q > 10:
            raise ValueError("digit strings need q <= 10")
        return "".join(map(str, self.values))

    def shift(self, c: int) -> "GeneralizedBooleanFunction":
        """Pointwise f + c mod q."""
        q = self.q
        return GeneralizedBooleanFunction(self.n, q, tuple((v + c) % q for v in self.values))

    def __str__(self) -> str:
        body = self.digits() if self.q <= 10 else " ".join(map(str, self.values))
        return f"GBF(n={self.n}, q={self.q}, {body})"


GBF = GeneralizedBooleanFunction


def butterfly(a: np.ndarray, axis: int = 0) -> np.ndarray:
    """Unnormalized Hadamard transform along ``axis`` (length must be 2^k)."""
    a = np.moveaxis(np.array(a, copy=True), axis, 0)
    size = a.shape[0]
    h = 1
    while h < size:
        a = a.reshape((size // (2 * h), 2, h) + a.shape[1:])
        lo = a[:, 0].copy()
        hi = a[:, 1]
        a[:, 0] += hi
        a[:, 1] = lo - hi
        a = a.reshape((size,) + a.shape[3:])
        h *= 2
    return np.moveaxis(a, 0, axis)


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    n: int
    q: int
    raw: np.ndarray  # (2^n, q) coefficient counts in Z[x]/(x^q - 1)

    def entry(self, y: int) -> CycElem:
        return CycElem(tuple(int(c) for c in self.raw[y]), self.q)

    @property
    def entries(self) -> list[CycElem]:
        return [self.entry(y) for y in range(1 << self.n)]

    def reduced(self) -> np.ndarray:
        return self.raw @ ring(self.q).red


def walsh_hadamard(f: GBF) -> WalshSpectrum:
    """H_f(y) = sum_x w^f(x) (-1)^<x,y>, exactly.

    The butterfly runs in the unreduced ring. Subtraction is multiplication by
    w^(q/2), i.e. a rotation, so all coefficients stay non-negative counts.
    """
    q, half = f.q, f.q // 2
    a = np.zeros((f.size, q), dtype=np.int64)
    a[np.arange(f.size), f.array()] = 1
    h = 1
    while h < f.size:
        a = a.reshape(f.size // (2 * h), 2, h, q)
        lo = a[:, 0].copy()
        hi = a[:, 1].copy()
        a[:, 0] = lo + hi
        a[:, 1] = lo + np.roll(hi, half, axis=-1)
        a = a.reshape(f.size, q)
        h *= 2
    return WalshSpectrum(f.n, q, a)


def walsh_naive(f: GBF) -> list[CycElem]:
    """Double-sum definition; test oracle only."""
    q, half = f.q, f.q // 2
    out = []
    for y in range(f.size):
        exps = [f.values[x] + half * (bin(x & y).count("1") & 1) for x in range(f.size)]
        out.append(CycElem.from_exponents(exps, q))
    return out


def _norms_reduced(raw: np.ndarray, q: int) -> np.ndarray:
    """Reduced z * conj(z) for each row of raw coefficient vectors."""
    conj = np.concatenate([raw[..., :1], raw[..., :0:-1]], axis=-1)
    prod = np.zeros_like(raw)
    for i in range(q):
        prod += raw[..., i : i + 1] * np.roll(conj, i, axis=-1)
    return prod @ ring(q).red


def is_gbent(f: GBF) -> bool:
    return _is_gbent_spectrum(walsh_hadamard(f))


def _is_gbent_spectrum(spec: WalshSpectrum) -> bool:
    norms = _norms_reduced(spec.raw, spec.q)
    return bool(np.all(norms[:, 0] == 1 << spec.n) and not np.any(norms[:, 1:]))


class DualityKind(enum.Enum):
    NOT_GBENT = "not-gbent"
    GBENT_NON_REGULAR = "gbent-non-regular"
    REGULAR = "regular"
    SELF_DUAL = "self-dual"
    ANTI_SELF_DUAL = "anti-self-dual"


@dataclass(frozen=True)
class DualityStatus:
    kind: DualityKind
    dual: GBF | None = None

    @property
    def is_regular(self) -> bool:
        return self.dual is not None

    def __str__(self) -> str:
        return self.kind.value


def _dual_exponents(spec: WalshSpectrum) -> np.ndarray | None:
    """d(y) with H(y) = 2^(n/2) w^d(y) for every y, or None if some y fails."""
    scale = power_of_sqrt2(spec.n, spec.q)
    if scale is None:
        return None
    r = ring(spec.q)
    targets = np.array([r.reduce(scale.rotate_mul(d).coeffs) for d in range(spec.q)], dtype=np.int64)
    red = spec.reduced()
    match = (red[:, None, :] == targets[None, :, :]).all(axis=-1)
    if not match.any(axis=1).all():
        return None
    return match.argmax(axis=1)


def classify_duality(f: GBF) -> DualityStatus:
    spec = walsh_hadamard(f)
    if not _is_gbent_spectrum(spec):
        return DualityStatus(DualityKind.NOT_GBENT)
    d = _dual_exponents(spec)
    if d is None:
        return DualityStatus(DualityKind.GBENT_NON_REGULAR)
    dual = GBF(f.n, f.q, tuple(int(v) for v in d))
    if dual == f:
        return DualityStatus(DualityKind.SELF_DUAL, dual)
    if dual.shift(f.q // 2) == f:
        return DualityStatus(DualityKind.ANTI_SELF_DUAL, dual)
    return DualityStatus(DualityKind.REGULAR, dual)


def dual(f: GBF) -> GBF:
    status = classify_duality(f)
    if status.dual is None:
        raise ValueError(f"function is not regular gbent ({status})")
    return status.dual


def is_self_dual(f: GBF) -> bool:
    return classify_duality(f).kind is DualityKind.SELF_DUAL


def sign_function(f: GBF) -> list[CycElem]:
    return [CycElem.root(v, f.q) for v in f.values]


def decompose_components(f: GBF) -> list[GBF]:
    """Boolean a_0..a_{h-1} with f = a_0 + 2 a_1 + ... + 2^(h-1) a_{h-1}, 2^(h-1) < q <= 2^h."""
    h = (f.q - 1).bit_length()
    return [GBF(f.n, 2, tuple((v >> j) & 1 for v in f.values)) for j in range(h)]


def recompose_components(parts: Sequence[GBF], q: int) -> GBF:
    n = parts[0].n
    vals = [sum(p.values[x] << j for j, p in enumerate(parts)) % q for x in range(1 << n)]
    return GBF(n, q, tuple(vals))


# --- batched exact predicates -------------------------------------------------


def sign_vectors(values: np.ndarray, q: int) -> np.ndarray:
    """Reduced sign vectors: (..., 2^n) exponents -> (..., 2^n, phi(q)) integers."""
    return ring(q).red[np.asarray(values) % q]


def batch_duality_sign(values: np.ndarray, q: int) -> np.ndarray:
    """+1 for self-dual rows, -1 for anti-self-dual, 0 otherwise.

    Uses the eigenvector form: f is (anti-)self-dual iff
    H_n w^f = +-2^(n/2) w^f, which already implies gbent and regular.
    """
    values = np.atleast_2d(values)
    n = values.shape[-1].bit_length() - 1
    s = sign_vectors(values, q)
    hs = butterfly(s, axis=1)
    scale = power_of_sqrt2(n, q)
    if scale is None:
        return np.zeros(values.shape[0], dtype=np.int8)
    m = ring(q).mul_matrix(scale.reduced()).astype(np.int64)
    ss = s @ m
    sd = (hs == ss).all(axis=(1, 2))
    asd = (hs == -ss).all(axis=(1, 2))
    return sd.astype(np.int8) - asd.astype(np.int8)


def batch_is_gbent(values: np.ndarray, q: int) -> np.ndarray:
    values = np.atleast_2d(values)
    n = values.shape[-1].bit_length() - 1
    raw = np.zeros(values.shape + (q,), dtype=np.int64)
    np.put_along_axis(raw, values[..., None] % q, 1, axis=-1)
    half = q // 2
    h = 1
    size = values.shape[-1]
    while h < size:
        raw = raw.reshape(raw.shape[0], size // (2 * h), 2, h, q)
        lo = raw[:, :, 0].copy()
        hi = raw[:, :, 1].copy()
        raw[:, :, 0] = lo + hi
        raw[:, :, 1] = lo + np.roll(hi, half, axis=-1)
        raw = raw.reshape(raw.shape[0], size, q)
        h *= 2
    norms = _norms_reduced(raw, q)
    return (norms[..., 0] == 1 << n).all(axis=1) & ~norms[..., 1:].any(axis=(1, 2))
