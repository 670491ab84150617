import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdgbent.gbf import GBF, DualityKind, classify_duality
from sdgbent.groups import (
    ExtOrthElement,
    NotClosedError,
    OrthMatrix,
    apply_symmetry,
    classify_orbits,
    compose,
    enumerate_orthogonal,
    extended_group_order,
    group_elements,
    identity_element,
    iter_orthogonal,
    orthogonal_order_bruteforce,
    sd_asd_bijection,
    stabilizer_size,
)


def test_orthogonal_examples():
    assert [m.to_lists() for m in enumerate_orthogonal(1)] == [[[1]]]
    o2 = enumerate_orthogonal(2)
    assert sorted(m.to_lists() for m in o2) == [[[0, 1], [1, 0]], [[1, 0], [0, 1]]]
    assert len(enumerate_orthogonal(3)) == 6


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orthogonal_order_matches_bruteforce(n):
    assert len(enumerate_orthogonal(n)) == orthogonal_order_bruteforce(n)


def test_orthogonal_order_numpy_oracle():
    # independent count with numpy matrix products over all 3x3 binary matrices
    count = 0
    for bits in itertools.product((0, 1), repeat=9):
        m = np.array(bits).reshape(3, 3)
        count += np.array_equal(m @ m.T % 2, np.eye(3, dtype=int))
    assert count == 6


def test_enumerate_orthogonal_limit():
    with pytest.raises(ValueError, match="iter_orthogonal"):
        enumerate_orthogonal(7)
    # streaming still works past the listing limit; 720 is the known order of O_5
    assert sum(1 for _ in iter_orthogonal(5)) == 720


@pytest.mark.parametrize("n", [2, 3, 4])
def test_group_closure(n):
    mats = enumerate_orthogonal(n)
    keys = {m.rows for m in mats}
    for a in mats:
        assert a.transpose().rows in keys
        assert (a @ a.transpose()).rows == OrthMatrix.identity(n).rows
        for b in mats:
            assert (a @ b).rows in keys


def test_apply_matches_numpy():
    rng = np.random.default_rng(0)
    for L in enumerate_orthogonal(4):
        M = np.array(L.to_lists())
        for v in rng.integers(0, 16, size=5):
            vb = np.array([(int(v) >> (3 - i)) & 1 for i in range(4)])
            w = M @ vb % 2
            assert L.apply(int(v)) == int("".join(map(str, w)), 2)


@st.composite
def elements(draw, n=4, q=4):
    mats = enumerate_orthogonal(n)
    L = mats[draw(st.integers(0, len(mats) - 1))]
    return ExtOrthElement(L, draw(st.integers(0, (1 << n) - 1)), draw(st.integers(0, q - 1)))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=16, max_size=16), elements(), elements())
def test_action_property(vals, e1, e2):
    f = GBF(4, 4, tuple(vals))
    lhs = apply_symmetry(apply_symmetry(f, e1), e2)
    assert lhs == apply_symmetry(f, compose(e2, e1, 4))


def test_apply_symmetry_examples(f0002):
    assert apply_symmetry(f0002, identity_element(2)) == f0002
    swap = OrthMatrix.from_permutation([1, 0])
    g = apply_symmetry(f0002, ExtOrthElement(swap, 0, 1))
    assert g.values == (1, 1, 1, 3)
    assert classify_duality(g).kind is DualityKind.SELF_DUAL
    with pytest.raises(ValueError):
        apply_symmetry(f0002, identity_element(3))


def test_duality_preserved_random(sd44, asd44):
    rng = random.Random(11)
    even = list(group_elements(4, 4, "even"))
    for f in sd44[::8] + asd44[::8]:
        k = classify_duality(f).kind
        for e in rng.sample(even, 50):
            assert classify_duality(apply_symmetry(f, e)).kind is k


def test_sd_asd_bijection(f0002):
    e = ExtOrthElement(OrthMatrix.identity(2), 0b10, 0)
    g = sd_asd_bijection(f0002, e)
    assert classify_duality(g).kind is DualityKind.ANTI_SELF_DUAL
    assert classify_duality(sd_asd_bijection(g, e)).kind is DualityKind.SELF_DUAL
    assert compose(e, e, 4).c_weight_even
    with pytest.raises(ValueError):
        sd_asd_bijection(f0002, identity_element(2))


def test_extended_group_order():
    assert extended_group_order(2, 4) == 2 * 2 * 4
    assert extended_group_order(4, 4) == 48 * 8 * 4
    assert len(list(group_elements(4, 4))) == 1536


def test_orbits_n2():
    sd = [GBF(2, 4, (d, d, d, (d + 2) % 4)) for d in range(4)]
    orbits = classify_orbits(sd, 2, 4)
    assert len(orbits) == 1 and orbits[0].size == 4
    assert orbits[0].canonical.values == (0, 0, 0, 2)


def test_orbits_not_closed(f0002):
    with pytest.raises(NotClosedError, match="escapes"):
        classify_orbits([f0002], 2, 4)


def _bfs_orbit(f, gens):
    # independent closure from generators
    seen = {f.values}
    frontier = [f]
    while frontier:
        nxt = []
        for g in frontier:
            for e in gens:
                h = apply_symmetry(g, e)
                if h.values not in seen:
                    seen.add(h.values)
                    nxt.append(h)
        frontier = nxt
    return seen


def test_orbits_match_generator_closure(sd44):
    orbits = classify_orbits(sd44, 4, 4)
    mats = enumerate_orthogonal(4)
    gens = [ExtOrthElement(L, 0, 0) for L in mats] + [
        ExtOrthElement(OrthMatrix.identity(4), c, 0) for c in (0b1100, 0b0110, 0b0011)
    ] + [ExtOrthElement(OrthMatrix.identity(4), 0, 1)]
    for o in orbits:
        assert _bfs_orbit(o.canonical, gens) == {m.values for m in o.members}
    assert sum(o.size for o in orbits) == 400


def test_orbit_stabilizer(sd44):
    order = extended_group_order(4, 4)
    for o in classify_orbits(sd44, 4, 4, keep_members=False):
        assert o.size * stabilizer_size(o.canonical, 4) == order


def test_asd_set_is_image_of_sd(sd44, asd44):
    e = ExtOrthElement(OrthMatrix.identity(4), 0b1000, 0)
    assert {sd_asd_bijection(f, e).values for f in sd44} == {g.values for g in asd44}
