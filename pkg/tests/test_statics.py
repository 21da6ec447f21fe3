import numpy as np
import pytest

from screwalg.errors import DimensionError
from screwalg.exterior import Bivector, pseudovector_to_bivector
from screwalg.screw import LineBivector, from_couple, from_sliding, moment_at
from screwalg.statics import ForceSystem, classify_planar, is_equilibrium, resultant

TRIANGLE = ForceSystem(2, (([0, 0], [1, 1]), ([1, 0], [0, -1]), ([0, 1], [-1, 0])))
LEVER = ForceSystem(2, (([-2, 0], [0, 1]), ([1, 0], [0, 2]), ([0, 0], [0, -3])))
PAIR = ForceSystem(2, (([0, 0], [0, 1]), ([1, 0], [0, -1])))


def test_empty():
    assert resultant(ForceSystem(3)) == LineBivector.zero(3)
    assert is_equilibrium(ForceSystem(3))


def test_triangle_of_forces(rng):
    m = resultant(TRIANGLE)
    assert m == LineBivector.zero(2)
    for o in rng.normal(size=(5, 2)):
        assert moment_at(m, o) == Bivector(2)
    assert is_equilibrium(TRIANGLE)
    assert classify_planar(m) == "zero"


def test_triangle_lines_meet():
    # each line of action passes through S = (1, 1)
    s = np.array([1.0, 1.0])
    for p, u in TRIANGLE.forces:
        assert from_sliding(p, u).isclose(from_sliding(s, u), 1e-15)


def test_lever(rng):
    assert is_equilibrium(LEVER)
    # the fulcrum R = P/3 + 2Q/3 with P = (-2, 0), Q = (1, 0)
    r = np.array([-2.0, 0.0]) / 3 + 2 * np.array([1.0, 0.0]) / 3
    np.testing.assert_allclose(r, [0, 0])
    m = resultant(LEVER)
    for o in rng.normal(size=(5, 2)):
        assert moment_at(m, o).norm() == 0.0


def test_opposite_pair():
    m = resultant(PAIR)
    assert m == from_couple(Bivector.from_dict(2, {(1, 2): -1}))
    assert classify_planar(m) == "couple"
    assert not is_equilibrium(PAIR)


def test_single_force():
    sys1 = ForceSystem(2, (([1, 2], [0, 1]),))
    assert not is_equilibrium(sys1)
    assert classify_planar(resultant(sys1)) == "sliding"


def test_couples_in_system():
    c = pseudovector_to_bivector([0, 0, 2])
    sys1 = ForceSystem(3, (([0, 0, 0], [1, 0, 0]),), (c,))
    m = resultant(sys1)
    np.testing.assert_array_equal(m.u, [1, 0, 0])
    assert m.m0 == Bivector.from_dict(3, {(1, 2): 2})


def test_mixed_dimensions():
    with pytest.raises(DimensionError):
        ForceSystem(2, (([0, 0, 0], [1, 0, 0]),))
    with pytest.raises(DimensionError):
        ForceSystem(2, (), (Bivector(3),))


def test_classify_planar_rejects_3d():
    with pytest.raises(DimensionError):
        classify_planar(LineBivector.zero(3))


def test_permutation_invariant(rng):
    forces = [(rng.normal(size=3), rng.normal(size=3)) for _ in range(6)]
    couples = [Bivector(3, rng.normal(size=3)) for _ in range(2)]
    base = resultant(ForceSystem(3, forces, couples))
    for _ in range(5):
        order = rng.permutation(len(forces))
        other = resultant(ForceSystem(3, [forces[k] for k in order], couples[::-1]))
        assert other.isclose(base, 1e-12)


def test_sum_zero_has_constant_moment(rng):
    for _ in range(50):
        us = rng.normal(size=(4, 3))
        us[-1] = -us[:-1].sum(axis=0)
        sys1 = ForceSystem(3, list(zip(rng.normal(size=(4, 3)), us)))
        m = resultant(sys1)
        ref = moment_at(m, np.zeros(3))
        for o in rng.normal(scale=10, size=(5, 3)):
            assert moment_at(m, o).isclose(ref, 1e-12, scale=sys1.scale())


@pytest.mark.parametrize("n", [2, 3, 4])
def test_concurrent_lines_in_equilibrium(rng, n):
    for _ in range(100):
        s = rng.normal(size=n)
        us = rng.normal(size=(5, n))
        us[-1] = -us[:-1].sum(axis=0)
        forces = [(s + rng.normal() * u, u) for u in us]
        assert is_equilibrium(ForceSystem(n, forces))


def test_planar_exhaustive(rng):
    for _ in range(2000):
        k = rng.integers(0, 5)
        forces = list(zip(rng.normal(size=(k, 2)), rng.normal(size=(k, 2))))
        couples = [Bivector(2, rng.normal(size=1)) for _ in range(rng.integers(0, 2))]
        sys1 = ForceSystem(2, forces, couples)
        assert classify_planar(resultant(sys1), ref_scale=sys1.scale()) in {"zero", "sliding", "couple"}
