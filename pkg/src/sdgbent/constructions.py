"""Primary and secondary constructions of (anti-)self-dual gbent functions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import CycElem
from .gbf import GBF, DualityKind, classify_duality
from .gf2m import GF2mField
from .groups import OrthMatrix, iter_orthogonal
from .zq import check_q, parity, popcount


def direct_sum(parts: Sequence[GBF]) -> GBF:
    """f(x1, ..., xr) = f1(x1) + ... + fr(xr); earlier parts take the high index bits."""
    if not parts:
        raise ValueError("direct_sum needs at least one part")
    q = parts[0].q
    if any(p.q != q for p in parts):
        raise ValueError("all parts must share q")
    vals = [0]
    n = 0
    for p in parts:
        vals = [(a + b) % q for a in vals for b in p.values]
        n += p.n
    return GBF(n, q, tuple(vals))


def mm_general(pi: Sequence[int], g: GBF) -> GBF:
    """Maiorana-McFarland: f(x, y) = (q/2)<x, pi(y)> + g(y), index of (x, y) is x*2^k + y."""
    k = g.n
    size = 1 << k
    if sorted(pi) != list(range(size)):
        raise ValueError("pi must be a permutation of F_2^k")
    q, half = g.q, g.q // 2
    vals = [(half * parity(x & pi[y]) + g.values[y]) % q for x in range(size) for y in range(size)]
    return GBF(2 * k, q, tuple(vals))


def mm_dual(pi: Sequence[int], g: GBF) -> GBF:
    """Closed-form dual (q/2)<pi^-1(x), y> + g(pi^-1(x))."""
    size = 1 << g.n
    inv = [0] * size
    for y, v in enumerate(pi):
        inv[v] = y
    q, half = g.q, g.q // 2
    vals = [(half * parity(inv[x] & y) + g.values[inv[x]]) % q for x in range(size) for y in range(size)]
    return GBF(2 * g.n, q, tuple(vals))


@dataclass(frozen=True)
class MMParameters:
    L: OrthMatrix
    b: int
    d: int

    def __post_init__(self):
        if not self.L.is_orthogonal():
            raise ValueError("L must satisfy L L^T = I")
        if not 0 <= self.b < (1 << self.L.n):
            raise ValueError("b does not fit the dimension of L")

    @property
    def anti(self) -> bool:
        return popcount(self.b) % 2 == 1


def mm_parts(p: MMParameters, q: int) -> tuple[list[int], GBF]:
    """(pi, g) with pi(y) = L(y + b), g(y) = (q/2)<b, y> + d."""
    k = p.L.n
    pi = [p.L.apply(y ^ p.b) for y in range(1 << k)]
    g = GBF(k, q, tuple(((q // 2) * parity(p.b & y) + p.d) % q for y in range(1 << k)))
    return pi, g


def mm_self_dual(p: MMParameters, q: int, want_anti: bool = False) -> GBF:
    check_q(q)
    if p.anti != want_anti:
        kind = "anti-self-dual" if want_anti else "self-dual"
        raise ValueError(f"wt(b)={popcount(p.b)} has the wrong parity for a {kind} function")
    pi, g = mm_parts(p, q)
    return mm_general(pi, g)


def mm_parameter_space(k: int, q: int, anti: bool | None = None):
    """All (L, b, d); ``anti`` filters by the parity of wt(b)."""
    for L in iter_orthogonal(k):
        for b in range(1 << k):
            if anti is not None and (popcount(b) % 2 == 1) != anti:
                continue
            for d in range(q):
                yield MMParameters(L, b, d)


def mm_count_self_dual(n: int, q: int) -> int:
    """q * 2^(n/2 - 1) * |O_{n/2}|."""
    if n % 2 or n < 2:
        raise ValueError("n must be even and positive")
    check_q(q)
    order = sum(1 for _ in iter_orthogonal(n // 2))
    return q * 2 ** (n // 2 - 1) * order


# --- Dillon-type ------------------------------------------------------------


class DillonPreconditionError(ValueError):
    pass


def _dillon_exponent(field: GF2mField, G: Sequence[Sequence[int]], t: int) -> int:
    return sum(Gj[t] << j for j, Gj in enumerate(G))


def check_dillon_components(field: GF2mField, G: Sequence[Sequence[int]], symmetric: bool = True) -> None:
    k = len(G)
    if k < 1:
        raise DillonPreconditionError("need at least one component")
    q = 1 << k
    if q < 2:
        raise DillonPreconditionError("q must be at least 2")
    half = field.order // 2
    for j, Gj in enumerate(G):
        if len(Gj) != field.order or any(v not in (0, 1) for v in Gj):
            raise DillonPreconditionError(f"G_{j} must be a Boolean table of length {field.order}")
        if Gj[0] != 0:
            raise DillonPreconditionError(f"G_{j}(0) != 0")
        if sum(Gj) != half:
            raise DillonPreconditionError(f"G_{j} is not balanced")
    total = CycElem.from_exponents((_dillon_exponent(field, G, t) for t in field.elements()), q)
    if not total.is_zero():
        raise DillonPreconditionError("character sum over the field is nonzero")
    if symmetric:
        for j, Gj in enumerate(G):
            for u in field.elements():
                if Gj[u] != Gj[field.inv(u)]:
                    raise DillonPreconditionError(f"G_{j}(u) != G_{j}(1/u) at u={u}")


def dillon(field: GF2mField, G: Sequence[Sequence[int]], require_symmetric: bool = True) -> GBF:
    """f(x, y) = sum_j 2^j G_j(x / y) over Z_{2^k}.

    Field elements are indexed by their coordinates in a trace-self-dual
    basis, so the dot-product Walsh transform is the trace transform
    Tr(ax + by); the index of (x, y) is coords(x) * 2^m + coords(y).
    """
    check_dillon_components(field, G, symmetric=require_symmetric)
    q = 1 << len(G)
    m = field.m
    vals = [0] * (1 << (2 * m))
    for x in field.elements():
        for y in field.elements():
            idx = (field.coordinates(x) << m) | field.coordinates(y)
            vals[idx] = _dillon_exponent(field, G, field.div(x, y)) % q
    return GBF(2 * m, q, tuple(vals))


def dillon_search_components(field: GF2mField, k: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every inversion-symmetric, balanced tuple (G_0..G_{k-1}) with G_j(0)=0 and zero character sum."""
    if field.m > 4 or k > 3:
        raise ValueError("search limited to m <= 4, k <= 3")
    # inversion classes of F* : {1} and pairs {u, 1/u}
    classes: list[tuple[int, ...]] = []
    seen = set()
    for u in range(1, field.order):
        if u in seen:
            continue
        cls = tuple(sorted({u, field.inv(u)}))
        seen.update(cls)
        classes.append(cls)
    half = field.order // 2
    candidates = []
    for r in range(len(classes) + 1):
        for pick in itertools.combinations(classes, r):
            if sum(len(c) for c in pick) != half:
                continue
            table = [0] * field.order
            for c in pick:
                for u in c:
                    table[u] = 1
            candidates.append(tuple(table))
    q = 1 << k
    out = []
    for G in itertools.product(candidates, repeat=k):
        total = CycElem.from_exponents((_dillon_exponent(field, G, t) for t in field.elements()), q)
        if total.is_zero():
            out.append(G)
    return out


# --- iterative / symmetric --------------------------------------------------


def _require_regular(f: GBF):
    status = classify_duality(f)
    if status.dual is None:
        raise ValueError(f"input must be regular gbent, got {status}")
    return status


def _concat(blocks: Sequence[Sequence[int]], n: int, q: int) -> GBF:
    vals = [v % q for blk in blocks for v in blk]
    return GBF(n + 2, q, tuple(vals))


def iterative_self_dual(f: GBF) -> GBF:
    """Value blocks (f, dual f, dual f, f + q/2) on n + 2 variables."""
    fd = _require_regular(f).dual
    half = f.q // 2
    return _concat([f.values, fd.values, fd.values, [v + half for v in f.values]], f.n, f.q)


def iterative_mixed(f_sd: GBF, g_asd: GBF) -> GBF:
    """Value blocks (f, g, g + q/2, f) from a self-dual f and an anti-self-dual g."""
    if (f_sd.n, f_sd.q) != (g_asd.n, g_asd.q):
        raise ValueError("f and g must share n and q")
    if classify_duality(f_sd).kind is not DualityKind.SELF_DUAL:
        raise ValueError("first argument must be self-dual")
    if classify_duality(g_asd).kind is not DualityKind.ANTI_SELF_DUAL:
        raise ValueError("second argument must be anti-self-dual")
    half = f_sd.q // 2
    return _concat([f_sd.values, g_asd.values, [v + half for v in g_asd.values], f_sd.values], f_sd.n, f_sd.q)


def symmetric_form(f: GBF, g: GBF, s: GBF) -> GBF:
    """h(z, y, x) = f(x) + (y xor z) g(x) + y z s(x), with z the top index bit."""
    q, n = f.q, f.n
    blocks = []
    for z in (0, 1):
        for y in (0, 1):
            blocks.append([f.values[x] + (y ^ z) * g.values[x] + y * z * s.values[x] for x in range(f.size)])
    return _concat(blocks, n, q)


def two_var_symmetric(f: GBF, s: GBF | int | None = None) -> GBF:
    """The self-dual member of the symmetric form: g = dual f + (q-1) f, s = q/2."""
    q = f.q
    half = q // 2
    if s is not None:
        svals = (s,) * f.size if isinstance(s, int) else s.values
        if any(v % q != half for v in svals):
            raise ValueError("s(x) must be q/2 everywhere")
    fd = _require_regular(f).dual
    g = GBF(f.n, q, tuple((a + (q - 1) * b) % q for a, b in zip(fd.values, f.values)))
    return symmetric_form(f, g, GBF.constant(f.n, q, half))


def affine(lambdas: Sequence[int], q: int) -> GBF:
    """f(x) = lambda_0 + sum_i lambda_i x_i; lambdas = (lambda_0, ..., lambda_n)."""
    check_q(q)
    n = len(lambdas) - 1
    lam0 = lambdas[0]
    coeffs = lambdas[1:]
    vals = []
    for x in range(1 << n):
        v = lam0
        for i, lam in enumerate(coeffs):
            if (x >> (n - 1 - i)) & 1:
                v += lam
        vals.append(v % q)
    return GBF(n, q, tuple(vals))
