"""Line bivectors (screws): sliding vectors, couples and their sums.

A line bivector ``M = P ∧ u + α`` is stored canonically as the pair
``(u, M(O₀))`` where ``O₀`` is the coordinate origin and
``M(O) = (P - O) ∧ u + α`` is its moment function.  Two line bivectors are
equal exactly when these pairs are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import DegenerateInputError, DimensionError, InconsistentDataError
from .exterior import (
    DEFAULT_TOL,
    Bivector,
    as_vector,
    bivector_to_pseudovector,
    orthogonal_split,
    pair_indices,
    wedge_vb,
    wedge_vv,
)


@dataclass(frozen=True, eq=False)
class LineBivector:
    """Screw given by its vector invariant ``u`` and its moment ``m0`` at the origin."""

    u: np.ndarray
    m0: Bivector

    def __post_init__(self):
        u = as_vector(self.u, name="u")
        if self.m0.dim != u.shape[0]:
            raise DimensionError(f"u has dimension {u.shape[0]}, m0 has {self.m0.dim}")
        u.setflags(write=False)
        object.__setattr__(self, "u", u)

    @property
    def dim(self):
        return self.u.shape[0]

    @classmethod
    def zero(cls, dim):
        return cls(np.zeros(dim), Bivector(dim))

    def _check(self, other):
        if not isinstance(other, LineBivector):
            return False
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return LineBivector(self.u + other.u, self.m0 + other.m0)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return LineBivector(self.u - other.u, self.m0 - other.m0)

    def __neg__(self):
        return LineBivector(-self.u, -self.m0)

    def __mul__(self, c):
        if isinstance(c, LineBivector):
            return NotImplemented
        return LineBivector(float(c) * self.u, float(c) * self.m0)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LineBivector):
            return NotImplemented
        return np.array_equal(self.u, other.u) and self.m0 == other.m0

    def __hash__(self):
        return hash((self.u.tobytes(), self.m0))

    def coefficients(self):
        """The ``n + n(n-1)/2`` free coefficients ``(u, m0)`` as one flat array."""
        return np.concatenate([self.u, self.m0.coeffs])

    @classmethod
    def from_coefficients(cls, dim, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        return cls(coeffs[:dim], Bivector(dim, coeffs[dim:]))

    def scale(self):
        """Size of the canonical data, used for relative tolerances."""
        return max(float(np.linalg.norm(self.u)), self.m0.norm())

    def isclose(self, other, tol=DEFAULT_TOL, scale=None):
        if scale is None:
            scale = max(self.scale(), other.scale(), 1.0)
        diff = self.coefficients() - other.coefficients()
        return float(np.linalg.norm(diff)) <= tol * scale

    def moment_at(self, o):
        return moment_at(self, o)

    def __repr__(self):
        return f"LineBivector(u={self.u.tolist()}, m0={self.m0!r})"


@dataclass(frozen=True, eq=False)
class SlidingVector:
    """A vector ``u`` bound to the line through ``point`` with direction ``u``."""

    point: np.ndarray
    u: np.ndarray

    def __post_init__(self):
        p = as_vector(self.point, name="point")
        u = as_vector(self.u, p.shape[0], name="u")
        p.setflags(write=False)
        u.setflags(write=False)
        object.__setattr__(self, "point", p)
        object.__setattr__(self, "u", u)

    @property
    def dim(self):
        return self.u.shape[0]

    def as_screw(self):
        return from_sliding(self.point, self.u)

    def is_equivalent(self, other, tol=DEFAULT_TOL):
        """Same vector on the same line: ``u == v`` and ``(Q - P) ∧ u == 0``."""
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        un = float(np.linalg.norm(self.u))
        scale = max(un, float(np.linalg.norm(other.u)), 1.0)
        if np.linalg.norm(self.u - other.u) > tol * scale:
            return False
        d = other.point - self.point
        return wedge_vv(d, self.u).norm() <= tol * max(un * float(np.linalg.norm(d)), 1.0)

    def __eq__(self, other):
        if not isinstance(other, SlidingVector):
            return NotImplemented
        return self.is_equivalent(other)

    __hash__ = None


@dataclass(frozen=True)
class Classification:
    """Kind of a line bivector plus the data identifying it.

    ``kind`` is one of ``"zero"``, ``"sliding"``, ``"couple"``, ``"general"``.
    For ``"sliding"``, ``point`` is the axis point nearest the origin and
    ``direction`` the vector invariant; for ``"couple"``, ``couple`` is the
    constant moment.
    """

    kind: str
    point: Optional[np.ndarray] = None
    direction: Optional[np.ndarray] = None
    couple: Optional[Bivector] = None


@dataclass(frozen=True)
class AxisDecomposition:
    """Central-axis form ``M = Q ∧ u + beta`` with ``u ⌟ beta = 0``.

    ``kind`` is ``"sliding_plus_couple"`` or ``"pure_couple"``; ``Q`` is
    ``None`` for a pure couple, where every point lies on the axis.
    """

    kind: str
    Q: Optional[np.ndarray]
    u: np.ndarray
    beta: Bivector

    def recompose(self):
        if self.Q is None:
            return from_couple(self.beta)
        return from_sliding(self.Q, self.u) + from_couple(self.beta)


def from_sliding(p, u):
    p = as_vector(p, name="P")
    u = as_vector(u, p.shape[0], name="u")
    return LineBivector(u, wedge_vv(p, u))


def from_couple(a):
    return LineBivector(np.zeros(a.dim), a)


def add(m1, m2):
    return m1 + m2


def scale(c, m):
    return float(c) * m


def moment_at(m, o):
    """Moment ``M(O) = M(O₀) + (O₀ - O) ∧ u``."""
    o = as_vector(o, m.dim, name="O")
    return m.m0 - wedge_vv(o, m.u)


def vector_invariant(m):
    return m.u.copy()


def trivector_invariant(m):
    """``u ∧ M(O)``, the same for every reference point O."""
    return wedge_vb(m.u, m.m0)


def bilinear_trivector_invariant(m1, m2):
    """Symmetric bilinear form whose diagonal is twice the trivector invariant."""
    if m1.dim != m2.dim:
        raise DimensionError(f"dimension mismatch: {m1.dim} vs {m2.dim}")
    return wedge_vb(m1.u, m2.m0) + wedge_vb(m2.u, m1.m0)


def _axis_point(u, m0):
    # m0 = beta + u ∧ z with z ⊥ u, and u ∧ z = (-z) ∧ u
    beta, z = orthogonal_split(u, m0)
    return -z, beta


def central_axis(m):
    """Poinsot reduction of ``m`` to a sliding vector on its central axis plus a couple.

    The returned axis point ``Q`` is the one nearest the coordinate origin
    (``Q · u == 0``).  Every point on the line ``Q + t u`` minimises
    ``|M(O)|``.
    """
    if not np.any(m.u):
        return AxisDecomposition("pure_couple", None, m.u.copy(), m.m0)
    q, beta = _axis_point(m.u, m.m0)
    return AxisDecomposition("sliding_plus_couple", q, m.u.copy(), beta)


def classify(m, tol=DEFAULT_TOL, ref_scale=1.0):
    """Sort ``m`` into zero, sliding vector, couple, or general screw.

    ``u`` counts as zero when ``|u| <= tol * max(ref_scale, |m0|)``; the
    whole screw is zero when additionally ``|m0| <= tol * ref_scale``.  A
    screw with ``u != 0`` is a sliding vector when its trivector invariant
    satisfies ``|u ∧ m0| <= tol * |u| * |m0|``.
    """
    un = float(np.linalg.norm(m.u))
    mn = m.m0.norm()
    if un <= tol * ref_scale and mn <= tol * ref_scale:
        return Classification("zero")
    if un <= tol * max(ref_scale, mn):
        return Classification("couple", couple=m.m0)
    if trivector_invariant(m).norm() <= tol * un * mn:
        q, _ = _axis_point(m.u, m.m0)
        return Classification("sliding", point=q, direction=m.u.copy())
    return Classification("general")


def _dependent(vectors, tol):
    """True when the rows of ``vectors`` are numerically linearly dependent."""
    mat = np.atleast_2d(np.asarray(vectors, dtype=float))
    if mat.shape[0] > mat.shape[1]:
        return True
    s = np.linalg.svd(mat, compute_uv=False)
    return s[-1] <= tol * max(s[0], np.finfo(float).tiny)


def decompose_at_points(m, points, tol=DEFAULT_TOL):
    """Write ``m`` as ``sum_i P_i ∧ u_i`` over the first ``n`` of ``n + 1`` given points.

    Expands ``m`` in the basis ``P_i ∧ P_j`` (i < j) of line bivectors and
    collects ``u_i = sum_{j>i} c_ij (P_j - P_i)``.  The points must be
    affinely independent.
    """
    n = m.dim
    pts = [as_vector(p, n, name=f"points[{k}]") for k, p in enumerate(points)]
    if len(pts) != n + 1:
        raise ValueError(f"need {n + 1} points in dimension {n}, got {len(pts)}")
    diffs = np.array([p - pts[0] for p in pts[1:]])
    if _dependent(diffs, tol):
        raise DegenerateInputError("points are affinely dependent")
    pairs = list(combinations(range(n + 1), 2))
    basis = np.column_stack(
        [from_sliding(pts[i], pts[j] - pts[i]).coefficients() for i, j in pairs]
    )
    c = np.linalg.solve(basis, m.coefficients())
    us = [np.zeros(n) for _ in range(n)]
    for (i, j), cij in zip(pairs, c):
        us[i] = us[i] + cij * (pts[j] - pts[i])
    return [SlidingVector(pts[i], us[i]) for i in range(n)]


def decompose_two(p, u, v, w):
    """Split ``P ∧ u + v ∧ w`` as ``P ∧ (u - w) + (P + v) ∧ w``."""
    p = as_vector(p, name="P")
    n = p.shape[0]
    u = as_vector(u, n, name="u")
    v = as_vector(v, n, name="v")
    w = as_vector(w, n, name="w")
    return SlidingVector(p, u - w), SlidingVector(p + v, w)


def _wedge_matrix(d):
    """Matrix of the linear map ``u -> d ∧ u``."""
    n = d.shape[0]
    mat = np.zeros((len(pair_indices(n)), n))
    for s, (i, j) in enumerate(pair_indices(n)):
        mat[s, j] += d[i]
        mat[s, i] -= d[j]
    return mat


def from_three_moments(points, moments, tol=DEFAULT_TOL):
    """Recover a line bivector from its moments at three non-collinear points.

    Solves ``(O1 - O2) ∧ u = m2 - m1`` and ``(O1 - O3) ∧ u = m3 - m1`` in the
    least-squares sense and raises :class:`InconsistentDataError` if the
    residual shows the data is not a moment function.
    """
    if len(points) != 3 or len(moments) != 3:
        raise ValueError("need exactly three points and three moments")
    m1, m2, m3 = moments
    n = m1.dim
    o1, o2, o3 = (as_vector(o, n, name=f"O{k + 1}") for k, o in enumerate(points))
    for mk in (m2, m3):
        if mk.dim != n:
            raise DimensionError(f"moment dimension {mk.dim}, expected {n}")
    d2, d3 = o1 - o2, o1 - o3
    if _dependent(np.array([d2, d3]), tol):
        raise DegenerateInputError("sample points are collinear")
    a = np.vstack([_wedge_matrix(d2), _wedge_matrix(d3)])
    rhs = np.concatenate([(m2 - m1).coeffs, (m3 - m1).coeffs])
    u = np.linalg.lstsq(a, rhs, rcond=None)[0]
    residual = float(np.linalg.norm(a @ u - rhs))
    data_scale = max(
        float(np.linalg.norm(rhs)), max(mk.norm() for mk in moments),
        float(np.linalg.norm(a, 2) * np.linalg.norm(u)), np.finfo(float).tiny,
    )
    if residual > tol * data_scale:
        raise InconsistentDataError(
            f"moments are not those of a line bivector (residual {residual:.3g})"
        )
    return LineBivector(u, m1 + wedge_vv(o1, u))


def is_sliding_criterion_3d(m, tol=DEFAULT_TOL):
    """Classical 3-d test ``u · m = 0`` using the pseudovector of the moment."""
    pv = bivector_to_pseudovector(m.m0)
    return abs(float(m.u @ pv)) <= tol * float(np.linalg.norm(m.u)) * float(np.linalg.norm(pv))


__all__ = [
    "LineBivector", "SlidingVector", "Classification", "AxisDecomposition",
    "from_sliding", "from_couple", "add", "scale", "moment_at", "vector_invariant",
    "trivector_invariant", "bilinear_trivector_invariant", "central_axis", "classify",
    "decompose_at_points", "decompose_two", "from_three_moments",
]
