"""Exterior algebra of a small real inner-product space.

Vectors are plain 1-D float arrays.  Bivectors and trivectors are stored as
dense coefficient arrays over the index pairs ``i < j`` (resp. triples
``i < j < k``) of the standard orthonormal basis, in lexicographic order.
Indices are 0-based internally; :meth:`Bivector.to_dict` and
:meth:`Bivector.from_dict` use the 1-based labels found in problem files.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .errors import DegenerateInputError, DimensionError

DEFAULT_TOL = 1e-9


@lru_cache(maxsize=None)
def pair_indices(n):
    """Lexicographic list of 0-based pairs ``(i, j)`` with ``i < j < n``."""
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def triple_indices(n):
    return tuple(combinations(range(n), 3))


@lru_cache(maxsize=None)
def _pair_arrays(n):
    pairs = pair_indices(n)
    first = np.array([p[0] for p in pairs], dtype=int)
    second = np.array([p[1] for p in pairs], dtype=int)
    return first, second


@lru_cache(maxsize=None)
def _triple_arrays(n):
    """Index arrays for the wedge of a vector with a bivector.

    For each triple (i, j, k) return i, j, k and the positions of the pairs
    (j, k), (i, k), (i, j) inside the bivector coefficient array.
    """
    pos = {p: s for s, p in enumerate(pair_indices(n))}
    trip = triple_indices(n)
    i = np.array([t[0] for t in trip], dtype=int)
    j = np.array([t[1] for t in trip], dtype=int)
    k = np.array([t[2] for t in trip], dtype=int)
    jk = np.array([pos[(t[1], t[2])] for t in trip], dtype=int)
    ik = np.array([pos[(t[0], t[2])] for t in trip], dtype=int)
    ij = np.array([pos[(t[0], t[1])] for t in trip], dtype=int)
    return i, j, k, jk, ik, ij


def as_vector(x, dim=None, name="vector"):
    """Convert ``x`` to a finite 1-D float array, optionally checking its length."""
    arr = np.array(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} has non-finite entries")
    if dim is not None and arr.shape[0] != dim:
        raise DimensionError(f"{name} has dimension {arr.shape[0]}, expected {dim}")
    return arr


def _same_dim(*dims):
    if len(set(dims)) > 1:
        raise DimensionError(f"dimension mismatch: {dims}")
    return dims[0]


class GradedElement:
    """Shared arithmetic for fixed-grade coefficient arrays."""

    __slots__ = ()
    grade = 0

    def __init__(self, dim, coeffs=None):
        dim = int(dim)
        if dim < 1:
            raise ValueError("dimension must be positive")
        size = comb(dim, self.grade)
        if coeffs is None:
            arr = np.zeros(size)
        else:
            arr = np.array(coeffs, dtype=float).reshape(-1)
            if arr.shape[0] != size:
                raise DimensionError(
                    f"grade-{self.grade} element in dimension {dim} needs {size} "
                    f"coefficients, got {arr.shape[0]}"
                )
            if not np.isfinite(arr).all():
                raise ValueError("coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def _wrap(cls, dim, arr):
        # internal results: shape already right, no copy or validation
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        object.__setattr__(obj, "dim", dim)
        object.__setattr__(obj, "coeffs", arr)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    def _check(self, other):
        if type(other) is not type(self):
            return NotImplemented
        _same_dim(self.dim, other.dim)
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._wrap(self.dim, self.coeffs + other.coeffs)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._wrap(self.dim, self.coeffs - other.coeffs)

    def __neg__(self):
        return self._wrap(self.dim, -self.coeffs)

    def __mul__(self, scalar):
        if isinstance(scalar, GradedElement):
            return NotImplemented
        return type(self)(self.dim, float(scalar) * self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return type(self)(self.dim, self.coeffs / float(scalar))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((type(self).__name__, self.dim, self.coeffs.tobytes()))

    def norm(self):
        return float(np.linalg.norm(self.coeffs))

    def isclose(self, other, tol=DEFAULT_TOL, scale=None):
        """Compare with a tolerance relative to ``scale`` (default: larger norm, at least 1)."""
        _same_dim(self.dim, other.dim)
        if scale is None:
            scale = max(self.norm(), other.norm(), 1.0)
        return float(np.linalg.norm(self.coeffs - other.coeffs)) <= tol * scale

    def _index_labels(self):
        raise NotImplementedError

    def to_dict(self, skip_zeros=False):
        """Map of 1-based index tuples to coefficients."""
        out = {}
        for idx, c in zip(self._index_labels(), self.coeffs):
            if skip_zeros and c == 0.0:
                continue
            out[tuple(i + 1 for i in idx)] = float(c)
        return out

    @classmethod
    def from_dict(cls, dim, mapping):
        """Build from ``{(i, j, ...): value}`` with 1-based, strictly increasing indices."""
        obj = cls(dim)
        labels = {idx: s for s, idx in enumerate(obj._index_labels())}
        coeffs = np.zeros(len(labels))
        for key, value in mapping.items():
            idx = tuple(int(i) - 1 for i in key)
            if idx not in labels:
                raise ValueError(f"invalid index {key} for grade {cls.grade} in dimension {dim}")
            coeffs[labels[idx]] += float(value)
        return cls(dim, coeffs)

    def __repr__(self):
        terms = ", ".join(
            f"{''.join(str(i) for i in k)}: {v:g}" for k, v in self.to_dict(skip_zeros=True).items()
        )
        return f"{type(self).__name__}(dim={self.dim}, {{{terms}}})"


class Bivector(GradedElement):
    """Element of the second exterior power, coefficients over pairs i < j."""

    __slots__ = ("dim", "coeffs")
    grade = 2

    def _index_labels(self):
        return pair_indices(self.dim)

    @classmethod
    def basis(cls, dim, i, j):
        """The unit bivector e_i ∧ e_j (1-based, i < j)."""
        return cls.from_dict(dim, {(i, j): 1.0})

    def matrix(self):
        """Antisymmetric array ``A`` with ``A[i, j]`` the coefficient of e_i ∧ e_j."""
        first, second = _pair_arrays(self.dim)
        out = np.zeros((self.dim, self.dim))
        out[first, second] = self.coeffs
        out[second, first] = -self.coeffs
        return out

    @classmethod
    def from_matrix(cls, mat):
        mat = np.asarray(mat, dtype=float)
        n = mat.shape[0]
        first, second = _pair_arrays(n)
        return cls(n, 0.5 * (mat[first, second] - mat[second, first]))


class Trivector(GradedElement):
    """Element of the third exterior power, coefficients over triples i < j < k."""

    __slots__ = ("dim", "coeffs")
    grade = 3

    def _index_labels(self):
        return triple_indices(self.dim)


@dataclass(frozen=True, eq=False)
class SkewMatrix:
    """Antisymmetric linear map of R^n (an infinitesimal rotation)."""

    entries: np.ndarray

    def __post_init__(self):
        mat = np.array(self.entries, dtype=float)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("skew matrix must be square")
        if not np.all(np.isfinite(mat)):
            raise ValueError("skew matrix has non-finite entries")
        scale = max(float(np.max(np.abs(mat), initial=0.0)), 1.0)
        if np.max(np.abs(mat + mat.T), initial=0.0) > DEFAULT_TOL * scale:
            raise ValueError("matrix is not antisymmetric")
        mat = 0.5 * (mat - mat.T)
        mat.setflags(write=False)
        object.__setattr__(self, "entries", mat)

    @property
    def dim(self):
        return self.entries.shape[0]

    @classmethod
    def from_upper(cls, dim, coeffs):
        """Skew matrix whose entry (i, j), i < j, is the matching pair coefficient."""
        coeffs = np.asarray(coeffs, dtype=float)
        first, second = _pair_arrays(dim)
        mat = np.zeros((dim, dim))
        mat[first, second] = coeffs
        mat[second, first] = -coeffs
        return cls(mat)

    def upper(self):
        """Pair coefficients ``entries[i, j]`` for i < j, lexicographic."""
        first, second = _pair_arrays(self.dim)
        return self.entries[first, second].copy()

    def __matmul__(self, x):
        return self.entries @ as_vector(x, self.dim)

    def apply(self, x):
        return self @ x

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())


def wedge_vv(v, w):
    """Exterior product of two vectors: coefficient (i, j) is v_i w_j - v_j w_i."""
    v = as_vector(v, name="v")
    w = as_vector(w, name="w")
    n = _same_dim(v.shape[0], w.shape[0])
    first, second = _pair_arrays(n)
    return Bivector._wrap(n, v[first] * w[second] - v[second] * w[first])


def wedge_vb(u, a):
    """Exterior product of a vector with a bivector."""
    u = as_vector(u, name="u")
    n = _same_dim(u.shape[0], a.dim)
    i, j, k, jk, ik, ij = _triple_arrays(n)
    c = a.coeffs
    return Trivector._wrap(n, u[i] * c[jk] - u[j] * c[ik] + u[k] * c[ij])


def interior_vb(u, a):
    """Interior product u ⌟ a.

    On decomposable bivectors this is ``(u·v) w - (u·w) v``; in coordinates
    the j-th component is ``sum_i u_i a_ij``.
    """
    u = as_vector(u, name="u")
    _same_dim(u.shape[0], a.dim)
    return u @ a.matrix()


def dot_bb(a, b):
    """Scalar product of bivectors (the Gram determinant on decomposables)."""
    _same_dim(a.dim, b.dim)
    return float(a.coeffs @ b.coeffs)


def magnitude_b(a):
    return float(np.sqrt(dot_bb(a, a)))


def trivector_factor(u, a, tol=DEFAULT_TOL):
    """Solve ``u ∧ w = a`` for w.

    Returns the solution orthogonal to ``u`` or ``None`` if ``u ∧ a`` is not
    zero (then no solution exists).  The tolerance is relative to
    ``|u| |a|``.
    """
    u = as_vector(u, name="u")
    _same_dim(u.shape[0], a.dim)
    uu = float(u @ u)
    if uu == 0.0:
        raise DegenerateInputError("cannot factor out the zero vector")
    if wedge_vb(u, a).norm() > tol * np.sqrt(uu) * max(a.norm(), np.finfo(float).tiny):
        return None
    return interior_vb(u, a) / uu


def orthogonal_split(u, a):
    """Split ``a = beta + u ∧ z`` with ``u ⌟ beta = 0`` and ``z ⊥ u``.

    The two parts are orthogonal under :func:`dot_bb`.
    """
    u = as_vector(u, name="u")
    _same_dim(u.shape[0], a.dim)
    uu = float(u @ u)
    if uu == 0.0:
        raise DegenerateInputError("orthogonal split needs a nonzero vector")
    z = interior_vb(u, a) / uu
    # u ⌟ a is always orthogonal to u; strip rounding residue
    z = z - (z @ u) / uu * u
    beta = a - wedge_vv(u, z)
    return beta, z


def bivector_to_skew(a):
    """Skew matrix X of ``a`` with ``X @ u == interior_vb(u, a)``."""
    return SkewMatrix(a.matrix().T)


def skew_to_bivector(x):
    """Inverse of :func:`bivector_to_skew`."""
    return Bivector.from_matrix(x.entries.T)


def bivector_to_pseudovector(a):
    """Right-handed dual vector of a 3-d bivector, so that e1∧e2 ↦ e3."""
    if a.dim != 3:
        raise DimensionError("pseudovectors exist only in dimension 3")
    c12, c13, c23 = a.coeffs
    return np.array([c23, -c13, c12])


def pseudovector_to_bivector(p):
    p = as_vector(p, 3, name="pseudovector")
    return Bivector(3, [p[2], -p[1], p[0]])
