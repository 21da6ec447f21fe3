"""Point-vector space: points of affine space and free vectors in one linear space.

A :class:`PointVector` is stored as ``(level, vpart)`` relative to the
coordinate origin, so a point ``P`` is ``(1, P)`` and a free vector ``u`` is
``(0, u)``.  Points themselves are plain coordinate arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exterior import as_vector
from .errors import DimensionError


@dataclass(frozen=True, eq=False)
class PointVector:
    level: float
    vpart: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "level", float(self.level))
        v = as_vector(self.vpart, name="vector part")
        v.setflags(write=False)
        object.__setattr__(self, "vpart", v)

    @property
    def dim(self):
        return self.vpart.shape[0]

    def _check(self, other):
        if not isinstance(other, PointVector):
            return False
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return PointVector(self.level + other.level, self.vpart + other.vpart)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return PointVector(self.level - other.level, self.vpart - other.vpart)

    def __neg__(self):
        return PointVector(-self.level, -self.vpart)

    def __mul__(self, s):
        if isinstance(s, PointVector):
            return NotImplemented
        s = float(s)
        return PointVector(s * self.level, s * self.vpart)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PointVector):
            return NotImplemented
        return self.level == other.level and np.array_equal(self.vpart, other.vpart)

    def __hash__(self):
        return hash((self.level, self.vpart.tobytes()))

    def is_point(self):
        return self.level == 1.0

    def as_point(self):
        """Coordinates of the point ``A / level``; requires nonzero level."""
        if self.level == 0.0:
            raise ValueError("a level-0 element is a free vector, not a weighted point")
        return self.vpart / self.level


def embed_point(p):
    return PointVector(1.0, as_vector(p, name="point"))


def embed_vector(u):
    return PointVector(0.0, as_vector(u, name="vector"))


def level(a):
    return a.level


def weighted_sum(s, p, t, q):
    """The sum ``s P + t Q`` of two weighted points.

    When ``s + t != 0`` this is the weighted point ``(s + t) R`` located at the
    barycentre ``R``; when ``s + t == 0`` it is the free vector ``t (Q - P)``.
    """
    p = as_vector(p, name="P")
    q = as_vector(q, len(p), name="Q")
    s, t = float(s), float(t)
    w = s + t
    if w == 0.0:
        return PointVector(0.0, t * (q - p))
    r = (s / w) * p + (t / w) * q
    return PointVector(w, w * r)


def resolve(a, p):
    """Unique ``(t, u)`` with ``a = t P + u`` for the fixed point ``P``."""
    p = as_vector(p, a.dim, name="P")
    t = a.level
    return t, a.vpart - t * p


def reconstruct(t, p, u):
    """Inverse of :func:`resolve`: the point vector ``t P + u``."""
    p = as_vector(p, name="P")
    u = as_vector(u, len(p), name="u")
    return PointVector(t, t * p + u)


def level_contract(a, b):
    """Interior product of the level function with ``a ∧ b``: ``ℓ(a) b - ℓ(b) a``.

    The result always has level zero, i.e. it is a free vector.
    """
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return a.level * b - b.level * a


def displacement_eval(t, p, u, o):
    """Evaluate the affine displacement field ``O -> t (P - O) + u``."""
    p = as_vector(p, name="P")
    n = len(p)
    u = as_vector(u, n, name="u")
    o = as_vector(o, n, name="O")
    return float(t) * (p - o) + u
