import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from screwalg.errors import DimensionError
from screwalg.points import (
    PointVector,
    displacement_eval,
    embed_point,
    embed_vector,
    level,
    level_contract,
    reconstruct,
    resolve,
    weighted_sum,
)

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


def test_levels():
    assert level(embed_point([3, 4])) == 1.0
    assert level(embed_vector([3, 4])) == 0.0
    p, q = embed_point([1, 2]), embed_point([-4, 0])
    assert level(2 * p + 3 * q) == 5.0


def test_weighted_sum_point():
    a = weighted_sum(1, [0, 0], 1, [2, 0])
    assert a.level == 2.0
    np.testing.assert_array_equal(a.as_point(), [1, 0])


def test_weighted_sum_free_vector():
    a = weighted_sum(-1, [0, 0], 1, [2, 0])
    assert a.level == 0.0
    np.testing.assert_array_equal(a.vpart, [2, 0])


def test_weighted_sum_zero_weight():
    a = weighted_sum(1, [3, -1], 0, [2, 0])
    assert a == embed_point([3, -1])


def test_weighted_sum_matches_linear_combination(rng):
    for _ in range(100):
        s, t = rng.normal(size=2)
        p, q = rng.normal(size=(2, 3))
        direct = s * embed_point(p) + t * embed_point(q)
        got = weighted_sum(s, p, t, q)
        assert got.level == pytest.approx(direct.level, abs=1e-12)
        np.testing.assert_allclose(got.vpart, direct.vpart, atol=1e-12)


def test_resolve_examples():
    q = np.array([1.0, -2.0])
    t, u = resolve(embed_point(q), q)
    assert t == 1.0
    np.testing.assert_array_equal(u, [0, 0])

    t, u = resolve(embed_vector([3, 4]), [7, 7])
    assert t == 0.0
    np.testing.assert_array_equal(u, [3, 4])

    t, u = resolve(2 * embed_point([1, 1]), [0, 0])
    assert t == 2.0
    np.testing.assert_array_equal(u, [2, 2])


@given(finite, arrays(float, 3, elements=finite), arrays(float, 3, elements=finite), arrays(float, 3, elements=finite))
def test_resolve_round_trip(t, v, p, q):
    a = PointVector(t, v)
    s, u = resolve(a, p)
    back = reconstruct(s, p, u)
    assert back.level == a.level
    np.testing.assert_allclose(back.vpart, a.vpart, rtol=1e-12, atol=1e-9)


def test_affine_closure(rng):
    for _ in range(50):
        pts = rng.normal(size=(4, 3))
        w = rng.normal(size=4)
        w1 = w / w.sum()
        combo = sum((c * embed_point(p) for c, p in zip(w1, pts)), embed_vector(np.zeros(3)))
        assert combo.level == pytest.approx(1.0, abs=1e-12)
        w0 = w - w.mean()
        combo = sum((c * embed_point(p) for c, p in zip(w0, pts)), embed_vector(np.zeros(3)))
        assert combo.level == pytest.approx(0.0, abs=1e-12)


def test_displacement_examples():
    np.testing.assert_array_equal(displacement_eval(1, [1, 0], [0, 0], [0, 0]), [1, 0])
    np.testing.assert_array_equal(displacement_eval(0, [9, 9], [2, 3], [-4, 1]), [2, 3])
    np.testing.assert_array_equal(displacement_eval(2, [1, 1], [1, 0], [1, 0]), [1, 2])


def test_displacement_root_slope(rng):
    for _ in range(50):
        t = rng.normal()
        p, q, o = rng.normal(size=(3, 3))
        np.testing.assert_allclose(displacement_eval(t, p, t * (q - p), o), t * (q - o), atol=1e-12)


def test_displacement_dimension_mismatch():
    with pytest.raises(DimensionError):
        displacement_eval(1, [0, 0], [0, 0, 0], [0, 0])


def test_level_contract():
    p, q = embed_point([1, 2, 3]), embed_point([0, 0, 1])
    c = level_contract(p, q)
    assert c.level == 0.0
    np.testing.assert_array_equal(c.vpart, [-1, -2, -2])
    # with a free vector u: ℓ(P) u - ℓ(u) P = u
    c = level_contract(p, embed_vector([4, 5, 6]))
    assert c == embed_vector([4, 5, 6])


def test_as_point_rejects_free_vector():
    with pytest.raises(ValueError):
        embed_vector([1, 0]).as_point()
