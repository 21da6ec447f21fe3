"""Wrenches and twists: forces as covectors, torques in the dual Lie algebra.

Angular velocities are skew matrices ``ω``; their coordinates are the
entries ``ω[i, j]`` for ``i < j``.  Torques share that pair-indexed layout
and pair with angular velocities by ``<A, ω> = sum_{i<j} A_ij ω_ij``, which
is what makes the moment map identity ``<z ⊓ u, ω> = u(ω z)`` hold.

Forces and displacements are kept apart on purpose: convert explicitly with
:func:`vector_to_covector` and friends when a metric identification is wanted.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .exterior import (
    Bivector,
    SkewMatrix,
    GradedElement,
    as_vector,
    pair_indices,
)


@dataclass(frozen=True, eq=False)
class Covector:
    """Linear function on displacement vectors, e.g. a force."""

    coords: np.ndarray

    def __post_init__(self):
        c = as_vector(self.coords, name="covector")
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)

    @property
    def dim(self):
        return self.coords.shape[0]

    def __call__(self, x):
        return float(self.coords @ as_vector(x, self.dim))

    def __add__(self, other):
        if not isinstance(other, Covector):
            return NotImplemented
        return Covector(self.coords + as_vector(other.coords, self.dim))

    def __mul__(self, s):
        return Covector(float(s) * self.coords)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Covector):
            return NotImplemented
        return np.array_equal(self.coords, other.coords)

    __hash__ = None


class TorqueElement(GradedElement):
    """Element of the dual of the rotation Lie algebra (a torque)."""

    __slots__ = ("dim", "coeffs")
    grade = 2

    def _index_labels(self):
        return pair_indices(self.dim)

    def pair(self, omega):
        """Value ``<A, ω>`` on an angular velocity."""
        if omega.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {omega.dim}")
        return float(self.coeffs @ omega.coords())


@dataclass(frozen=True)
class AngularVelocity:
    skew: SkewMatrix

    @property
    def dim(self):
        return self.skew.dim

    @classmethod
    def from_pairs(cls, dim, mapping):
        """From ``{(i, j): ω_ij}`` with 1-based i < j; ``ω_ji = -ω_ij``."""
        coeffs = Bivector.from_dict(dim, mapping).coeffs
        return cls(SkewMatrix.from_upper(dim, coeffs))

    @classmethod
    def from_coords(cls, dim, coeffs):
        return cls(SkewMatrix.from_upper(dim, coeffs))

    @classmethod
    def zero(cls, dim):
        return cls(SkewMatrix(np.zeros((dim, dim))))

    def coords(self):
        return self.skew.upper()

    def __matmul__(self, z):
        return self.skew @ z


@dataclass(frozen=True, eq=False)
class Wrench:
    """Torque-valued moment function ``M(O) = (P - O) ⊓ u + M(P)``."""

    P: np.ndarray
    u: Covector
    mP: TorqueElement

    def __post_init__(self):
        p = as_vector(self.P, name="P")
        if self.u.dim != p.shape[0] or self.mP.dim != p.shape[0]:
            raise DimensionError("wrench components disagree in dimension")
        p.setflags(write=False)
        object.__setattr__(self, "P", p)

    @property
    def dim(self):
        return self.P.shape[0]

    def __call__(self, o):
        return wrench_eval(self, o)


@dataclass(frozen=True, eq=False)
class Twist:
    """Rigid velocity field ``v(O) = ω (O - Q) + v(Q)``."""

    Q: np.ndarray
    omega: AngularVelocity
    vQ: np.ndarray

    def __post_init__(self):
        q = as_vector(self.Q, name="Q")
        v = as_vector(self.vQ, q.shape[0], name="v(Q)")
        if self.omega.dim != q.shape[0]:
            raise DimensionError("twist components disagree in dimension")
        q.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "Q", q)
        object.__setattr__(self, "vQ", v)

    @property
    def dim(self):
        return self.Q.shape[0]

    def __call__(self, o):
        return twist_eval(self, o)


def moment_map(z, u):
    """Torque ``z ⊓ u`` with coefficients ``u_i z_j - u_j z_i``."""
    z = as_vector(z, u.dim, name="z")
    c = u.coords
    pairs = pair_indices(u.dim)
    i = np.array([p[0] for p in pairs], dtype=int)
    j = np.array([p[1] for p in pairs], dtype=int)
    return TorqueElement(u.dim, c[i] * z[j] - c[j] * z[i])


def twist_eval(t, o):
    o = as_vector(o, t.dim, name="O")
    return t.omega @ (o - t.Q) + t.vQ


def wrench_eval(w, o):
    o = as_vector(o, w.dim, name="O")
    return moment_map(w.P - o, w.u) + w.mP


def scalar_invariant(w, t, o):
    """``u(v(O)) + <M(O), ω>``; independent of the reference point O."""
    if w.dim != t.dim:
        raise DimensionError(f"dimension mismatch: wrench {w.dim}, twist {t.dim}")
    return w.u(twist_eval(t, o)) + wrench_eval(w, o).pair(t.omega)


def aggregate_wrench(forces, p=None, torques=(), dim=None):
    """Single wrench equivalent to point forces ``[(P_i, u_i), ...]`` plus free torques.

    The wrench is referred to the point ``p`` (default: the origin).
    """
    forces = [(as_vector(pi, name="P"), ui) for pi, ui in forces]
    torques = list(torques)
    if dim is None:
        if forces:
            dim = forces[0][1].dim
        elif torques:
            dim = torques[0].dim
        else:
            raise ValueError("dimension is required for an empty system")
    p = np.zeros(dim) if p is None else as_vector(p, dim, name="reference point")
    total = Covector(np.zeros(dim))
    moment = TorqueElement(dim)
    for pi, ui in forces:
        if ui.dim != dim or pi.shape[0] != dim:
            raise DimensionError("forces disagree in dimension")
        total = total + ui
        moment = moment + moment_map(pi - p, ui)
    for a in torques:
        if a.dim != dim:
            raise DimensionError("torques disagree in dimension")
        moment = moment + a
    return Wrench(p, total, moment)


def power(forces, t, torques=()):
    """Power of point forces (and free torques) against a rigid velocity field.

    Each force contributes ``u_i(v(P_i))``, each torque ``<A, ω>``.
    """
    out = 0.0
    for p, u in forces:
        if u.dim != t.dim:
            raise DimensionError(f"force dimension {u.dim}, twist {t.dim}")
        out += u(twist_eval(t, p))
    for a in torques:
        out += a.pair(t.omega)
    return out


def vector_to_covector(v):
    return Covector(as_vector(v))


def covector_to_vector(u):
    return u.coords.copy()


def torque_to_bivector(a):
    return Bivector(a.dim, a.coeffs)


def bivector_to_torque(b):
    return TorqueElement(b.dim, b.coeffs)
