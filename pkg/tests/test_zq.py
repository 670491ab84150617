import pytest
from hypothesis import given
from hypothesis import strategies as st

from sdgbent.gbf import GBF
from sdgbent.zq import GF2Vector, QParam, hamming_distance, inner_product, lee_distance, lee_weight


def vec(*bits):
    return GF2Vector.from_bits(bits)


@pytest.mark.parametrize(
    "x, y, expected",
    [((1, 0, 1), (1, 1, 1), 0), ((0, 0, 0), (1, 0, 1), 0), ((1, 1), (1, 1), 0), ((1, 0), (1, 1), 1)],
)
def test_inner_product(x, y, expected):
    assert inner_product(vec(*x), vec(*y)) == expected


def test_inner_product_dimension_mismatch():
    with pytest.raises(ValueError):
        inner_product(vec(1, 0), vec(1, 0, 1))


def test_vector_roundtrip():
    v = vec(1, 0, 1, 1)
    assert v.bits == 0b1011
    assert v.to_tuple() == (1, 0, 1, 1)
    assert v.weight == 3


@pytest.mark.parametrize("q", [0, 3, 7, -2])
def test_qparam_rejects_odd(q):
    with pytest.raises(ValueError):
        QParam(q)


def test_qparam_half():
    assert QParam(6).half == 3


@pytest.mark.parametrize("v, q, expected", [(0, 4, 0), (2, 4, 2), (3, 4, 1), (5, 8, 3)])
def test_lee_weight(v, q, expected):
    assert lee_weight(v, q) == expected


@given(st.sampled_from([2, 4, 6, 8, 10]), st.integers(0, 100))
def test_lee_weight_symmetric(q, v):
    v %= q
    assert lee_weight(v, q) == lee_weight((q - v) % q, q)
    assert 0 <= lee_weight(v, q) <= q // 2


def test_distance_examples():
    f, g = GBF(1, 4, (0, 0)), GBF(1, 4, (1, 3))
    assert lee_distance(f, g) == 2
    assert lee_distance(f, f) == 0
    assert hamming_distance(GBF(2, 4, (0, 0, 0, 2)), GBF(2, 4, (0, 0, 0, 0))) == 1


def test_distance_parameter_mismatch():
    with pytest.raises(ValueError):
        lee_distance(GBF(1, 4, (0, 0)), GBF(1, 2, (0, 0)))
    with pytest.raises(ValueError):
        hamming_distance(GBF(1, 4, (0, 0)), GBF(2, 4, (0, 0, 0, 0)))


@st.composite
def triples(draw):
    n = draw(st.integers(0, 3))
    q = draw(st.sampled_from([2, 4, 6, 8]))
    tab = st.lists(st.integers(0, q - 1), min_size=1 << n, max_size=1 << n)
    return [GBF(n, q, tuple(draw(tab))) for _ in range(3)]


@given(triples())
def test_metric_axioms(fgh):
    f, g, h = fgh
    for dist in (lee_distance, hamming_distance):
        assert dist(f, g) == dist(g, f)
        assert (dist(f, g) == 0) == (f == g)
        assert dist(f, h) <= dist(f, g) + dist(g, h)


@given(triples())
def test_boolean_lee_equals_hamming(fgh):
    f, g, _ = fgh
    f2 = GBF(f.n, 2, tuple(v % 2 for v in f.values))
    g2 = GBF(g.n, 2, tuple(v % 2 for v in g.values))
    assert lee_distance(f2, g2) == hamming_distance(f2, g2)
