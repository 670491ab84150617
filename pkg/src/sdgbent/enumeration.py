"""Exhaustive searches, distance spectra and verification scans."""
from __future__ import annotations

import itertools
import json
import math
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .constructions import affine, direct_sum, mm_parameter_space, mm_self_dual
from .cyclotomic import CycElem, ring
from .gbf import (
    GBF,
    DualityKind,
    batch_duality_sign,
    batch_is_gbent,
    butterfly,
    classify_duality,
    sign_vectors,
)
from .zq import check_q, hamming_distance, lee_distance

NAIVE_BUDGET = 10**7
STRUCTURED_BUDGET = 2**26
CHUNK = 1 << 15


class BudgetExceeded(RuntimeError):
    pass


KINDS = {"sd": 1, "asd": -1}


@dataclass
class SearchReport:
    n: int
    q: int
    kind: str
    found: list[GBF]
    candidates_scanned: int
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "kind": self.kind,
            "count": len(self.found),
            "candidates_scanned": self.candidates_scanned,
            "elapsed": self.elapsed,
            "found": [list(f.values) for f in self.found],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


# --- structured search --------------------------------------------------------


def _digits(idx: np.ndarray, q: int, width: int) -> np.ndarray:
    """Odometer digits, most significant first: (N,) -> (N, width)."""
    powers = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def _match_roots(vecs: np.ndarray, roots: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """For (N, m, deg) reduced vectors: (all entries are roots, exponents)."""
    eq = (vecs[:, :, None, :] == roots[None, None, :, :]).all(axis=-1)
    return eq.any(axis=2).all(axis=1), eq.argmax(axis=2)


def _normalized_h(x: np.ndarray, scale: int) -> tuple[np.ndarray, np.ndarray]:
    """H_{n-2} x / 2^((n-2)/2) over axis 1, plus a per-row exact-divisibility mask."""
    hx = butterfly(x, axis=1)
    ok = (hx % scale == 0).all(axis=(1, 2))
    return hx // scale, ok


def _scan_range(n: int, q: int, sign: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    r = ring(q)
    roots = r.roots
    m = 1 << (n - 2)
    scale = 1 << ((n - 2) // 2)
    found = []
    for start in range(lo, hi, CHUNK):
        idx = np.arange(start, min(start + CHUNK, hi), dtype=np.int64)
        e = _digits(idx, q, 2 * m)
        e0, e1 = e[:, :m], e[:, m:]
        s0, s1 = roots[e0], roots[e1]

        # block 2 from H(F0 + F1) = sign (F0 + F2); prune before touching block 3
        h01, ok = _normalized_h(s0 + s1, scale)
        s2 = sign * h01 - s0
        unit, e2 = _match_roots(s2, roots)
        keep = ok & unit
        if not keep.any():
            continue
        e0, e1, e2, s0, s1, s2 = e0[keep], e1[keep], e2[keep], s0[keep], s1[keep], s2[keep]

        h01m, ok = _normalized_h(s0 - s1, scale)
        s3 = sign * h01m - s1
        unit, e3 = _match_roots(s3, roots)
        keep = ok & unit
        if not keep.any():
            continue
        e0, e1, e2, e3 = e0[keep], e1[keep], e2[keep], e3[keep]
        s0, s1, s2, s3 = s0[keep], s1[keep], s2[keep], s3[keep]

        # the two remaining block equations
        hp, ok1 = _normalized_h(s2 + s3, scale)
        hm, ok2 = _normalized_h(s2 - s3, scale)
        good = ok1 & ok2
        good &= (hp == sign * (s0 - s2)).all(axis=(1, 2))
        good &= (hm == sign * (s1 - s3)).all(axis=(1, 2))
        for row in np.concatenate([e0, e1, e2, e3], axis=1)[good]:
            found.append(tuple(int(v) for v in row))
    return found


def enumerate_self_dual(n: int, q: int, kind: str = "sd", threads: int = 1, budget: int = STRUCTURED_BUDGET) -> SearchReport:
    """All (anti-)self-dual gbent functions via the quarter-block eigenvector equations.

    Odd n (and n = 0) falls back to the naive scan.

    The sign vector is split as (F0, F1, F2, F3). Eigenvector equations give
    F2 = s H(F0 + F1) - F0 and F3 = s H(F0 - F1) - F1 with s = +1 (sd) or -1
    (asd), so only the (F0, F1) half is enumerated.
    """
    check_q(q)
    if kind not in KINDS:
        raise ValueError(f"kind must be 'sd' or 'asd', got {kind!r}")
    if n % 2 or n < 2:
        # no quarter-block split; scan everything or raise BudgetExceeded
        return enumerate_naive(n, q, kind)
    total = q ** (1 << (n - 1))
    if total > budget:
        raise BudgetExceeded(f"{total} candidate half-pairs exceed the budget of {budget}")
    t0 = time.perf_counter()
    sign = KINDS[kind]
    threads = max(1, threads)
    step = -(-total // threads)
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    if threads == 1:
        parts = [_scan_range(n, q, sign, lo, hi) for lo, hi in ranges]
    else:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda r: _scan_range(n, q, sign, *r), ranges))
    found = sorted({v for part in parts for v in part})
    funcs = [GBF(n, q, v) for v in found]
    want = DualityKind.SELF_DUAL if kind == "sd" else DualityKind.ANTI_SELF_DUAL
    for f in funcs:
        if classify_duality(f).kind is not want:
            raise AssertionError(f"structured search produced {f}, which is not {kind}")
    return SearchReport(n, q, kind, funcs, total, time.perf_counter() - t0)


# --- naive search ---------------------------------------------------------------


def enumerate_naive(n: int, q: int, predicate: str | Callable[[GBF], bool] = "sd", budget: int = NAIVE_BUDGET) -> SearchReport:
    """Scan all q^(2^n) functions. ``predicate`` is 'sd', 'asd', 'gbent' or a callable."""
    check_q(q)
    total = q ** (1 << n)
    if total > budget:
        raise BudgetExceeded(f"{total} functions exceed the budget of {budget}")
    t0 = time.perf_counter()
    width = 1 << n
    found = []
    for start in range(0, total, CHUNK):
        vals = _digits(np.arange(start, min(start + CHUNK, total), dtype=np.int64), q, width)
        if predicate in KINDS:
            mask = batch_duality_sign(vals, q) == KINDS[predicate]
        elif predicate == "gbent":
            mask = batch_is_gbent(vals, q)
        elif callable(predicate):
            mask = np.array([bool(predicate(GBF(n, q, tuple(int(v) for v in row)))) for row in vals])
        else:
            raise ValueError(f"unknown predicate {predicate!r}")
        found.extend(GBF(n, q, tuple(int(v) for v in row)) for row in vals[mask])
    found.sort(key=lambda f: f.values)
    label = predicate if isinstance(predicate, str) else getattr(predicate, "__name__", "custom")
    return SearchReport(n, q, label, found, total, time.perf_counter() - t0)


# --- span dimension ----------------------------------------------------------------


def _content_divide(row: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    g = 0
    for e in row:
        for c in e:
            g = math.gcd(g, c)
    if g > 1:
        row = [tuple(c // g for c in e) for e in row]
    return row


def span_dimension(signs: Sequence[Sequence[CycElem]]) -> int:
    """Rank over Q(w) by fraction-free elimination in Z[w] (exact, reduced basis)."""
    if not signs:
        raise ValueError("need at least one vector")
    q = signs[0][0].q
    width = len(signs[0])
    for s in signs:
        if len(s) != width or any(e.q != q for e in s):
            raise ValueError("all sign functions must share n and q")
    r = ring(q)
    rows = [[e.reduced() for e in s] for s in signs]
    rows = [row for row in dict.fromkeys(tuple(row) for row in rows)]
    rows = [list(row) for row in rows]
    rank = 0
    for col in range(width):
        piv = next((i for i in range(rank, len(rows)) if any(rows[i][col])), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        a = p[col]
        for i in range(rank + 1, len(rows)):
            b = rows[i][col]
            if not any(b):
                continue
            new = []
            for x, y in zip(rows[i], p):
                u = r.mul_reduced(a, x)
                v = r.mul_reduced(b, y)
                new.append(tuple(s - t for s, t in zip(u, v)))
            rows[i] = _content_divide(new)
        rank += 1
        rows = rows[:rank] + [row for row in rows[rank:] if any(any(e) for e in row)]
    return rank


def sign_vectors_of(funcs: Iterable[GBF]) -> list[list[CycElem]]:
    return [[CycElem.root(v, f.q) for v in f.values] for f in funcs]


# --- quarter blocks ----------------------------------------------------------------------


def quarter_block_sums(f: GBF) -> tuple[CycElem, CycElem]:
    """(<F00,F01> + <F10,F11>, <F00,F10> + <F01,F11>), Hermitian in the second slot."""
    if f.n < 4:
        raise ValueError("quarter-block products need n >= 4")
    m = f.size // 4
    b = [f.values[i * m : (i + 1) * m] for i in range(4)]

    def herm(u, v):
        return CycElem.from_exponents((a - c for a, c in zip(u, v)), f.q)

    return herm(b[0], b[1]) + herm(b[2], b[3]), herm(b[0], b[2]) + herm(b[1], b[3])


def verify_quarter_block_products(f: GBF) -> bool:
    if f.n < 4:
        raise ValueError("quarter-block products need n >= 4")
    if classify_duality(f).kind is not DualityKind.SELF_DUAL:
        raise ValueError("function must be self-dual")
    s1, s2 = quarter_block_sums(f)
    return s1.is_zero() and s2.is_zero()


def quarter_block_counterexamples(n: int = 4, q: int = 4, samples: int = 200, seed: int = 0) -> list[GBF]:
    """Regular, non-self-dual gbent functions whose quarter-block sums do not vanish.

    Candidates are direct sums of random regular 2-variable functions. Regular
    Maiorana-McFarland functions are useless here: their top two bits are
    x-variables, so the quarter blocks are always orthogonal.
    """
    if n % 2 or n < 4:
        raise ValueError("need even n >= 4")
    regular = [f for f in enumerate_naive(2, q, "gbent").found if classify_duality(f).kind is DualityKind.REGULAR]
    rng = np.random.default_rng(seed)
    out = {}
    for _ in range(samples):
        parts = [regular[int(i)] for i in rng.integers(0, len(regular), n // 2)]
        f = direct_sum(parts)
        if classify_duality(f).kind is not DualityKind.REGULAR:
            continue
        s1, s2 = quarter_block_sums(f)
        if not (s1.is_zero() and s2.is_zero()):
            out[f] = None
    return sorted(out, key=lambda f: f.values)


# --- distance spectra -------------------------------------------------------------------


@dataclass
class SpectrumReport:
    metric: str
    n: int
    q: int
    observed: dict[int, int]
    predicted: list[int]
    attained: dict[int, bool]
    contained: bool
    min_nonzero: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def all_attained(self) -> bool:
        return all(self.attained.values())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["observed"] = {str(k): v for k, v in sorted(self.observed.items())}
        d["attained"] = {str(k): v for k, v in sorted(self.attained.items())}
        d["all_attained"] = self.all_attained
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def mm_family(n: int, q: int) -> list[tuple[GBF, str]]:
    """Every generalized MM (anti-)self-dual function, tagged 'sd' or 'asd'."""
    if n % 2 or n < 2:
        raise ValueError("n must be even")
    if n > 6:
        raise BudgetExceeded("Maiorana-McFarland spectra are limited to n <= 6")
    out = {}
    for p in mm_parameter_space(n // 2, q):
        f = mm_self_dual(p, q, want_anti=p.anti)
        out[f] = "asd" if p.anti else "sd"
    return sorted(out.items(), key=lambda t: t[0].values)


def predicted_hamming(n: int) -> list[int]:
    vals = {2 ** (n - 1)}
    for r in range(n // 2):
        vals.add(2 ** (n - 1) + 2 ** (n - 1 - r))
        vals.add(2 ** (n - 1) - 2 ** (n - 1 - r))
    return sorted(vals)


def predicted_lee(n: int, q: int) -> list[int]:
    base = q * 2 ** (n - 2)
    vals = {base}
    for w in range(q // 2 + 1):
        for r in range(n // 2):
            vals.add(base + base // 2**r - w * 2 ** (n - r))
            vals.add(base - base // 2**r + w * 2 ** (n - r))
    return sorted(vals)


def _spectrum(metric: str, n: int, q: int) -> SpectrumReport:
    fam = mm_family(n, q)
    dist = hamming_distance if metric == "hamming" else lee_distance
    predicted = predicted_hamming(n) if metric == "hamming" else predicted_lee(n, q)
    observed: Counter[int] = Counter()
    same_kind: Counter[int] = Counter()
    mixed: Counter[int] = Counter()
    # all unordered pairs including f with itself, so distance 0 is part of the spectrum
    for i, (f, kf) in enumerate(fam):
        for g, kg in fam[i:]:
            dv = dist(f, g)
            observed[dv] += 1
            (same_kind if kf == kg else mixed)[dv] += 1
    nonzero = [v for v in observed if v]
    pset = set(predicted)
    return SpectrumReport(
        metric=metric,
        n=n,
        q=q,
        observed=dict(observed),
        predicted=predicted,
        attained={v: v in observed for v in predicted},
        contained=set(observed) <= pset,
        min_nonzero=min(nonzero) if nonzero else None,
        extra={
            "family_size": len(fam),
            "same_kind": {str(k): v for k, v in sorted(same_kind.items())},
            "mixed": {str(k): v for k, v in sorted(mixed.items())},
        },
    )


def hamming_spectrum_mm(n: int, q: int) -> SpectrumReport:
    return _spectrum("hamming", n, q)


def lee_spectrum_mm(n: int, q: int) -> SpectrumReport:
    rep = _spectrum("lee", n, q)
    rep.extra["predicted_min_nonzero"] = q * 2 ** (n - 3) if n >= 3 else None
    return rep


# --- verification scans ---------------------------------------------------------------------


@dataclass
class AffineScanReport:
    n: int
    q: int
    total: int
    gbent: int
    self_dual: int
    anti_self_dual: int

    @property
    def passed(self) -> bool:
        return self.self_dual == 0


def affine_scan(n: int, q: int, budget: int = NAIVE_BUDGET) -> AffineScanReport:
    check_q(q)
    total = q ** (n + 1)
    if total > budget:
        raise BudgetExceeded(f"{total} affine functions exceed the budget of {budget}")
    tables = []
    for lam in itertools.product(range(q), repeat=n + 1):
        tables.append(affine(lam, q).values)
    vals = np.array(tables, dtype=np.int64)
    kinds = batch_duality_sign(vals, q)
    gb = batch_is_gbent(vals, q)
    return AffineScanReport(n, q, total, int(gb.sum()), int((kinds == 1).sum()), int((kinds == -1).sum()))


@dataclass
class UpperBoundReport:
    n: int
    k: int
    count_q: int
    count_boolean: int

    @property
    def bound(self) -> int:
        return self.count_boolean**self.k

    @property
    def holds(self) -> bool:
        return self.count_q <= self.bound


def count_self_dual(n: int, q: int) -> int:
    if n % 2 == 0:
        return len(enumerate_self_dual(n, q, "sd").found)
    return len(enumerate_naive(n, q, "sd").found)


def upper_bound_check(n: int, k: int) -> UpperBoundReport:
    """|SB+_{2^k}(n)| <= |SB+_2(n)|^k, both sides by enumeration."""
    if n > 4 or k > 2 or k < 1:
        raise BudgetExceeded("upper-bound check is limited to n <= 4, k <= 2")
    boolean = len(enumerate_naive(n, 2, "sd").found)
    count_q = boolean if k == 1 else count_self_dual(n, 2**k)
    return UpperBoundReport(n, k, count_q, boolean)
