"""Rigid-body statics: force systems, resultants and equilibrium."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError
from .exterior import DEFAULT_TOL, Bivector, as_vector
from .screw import LineBivector, classify, from_couple, from_sliding


@dataclass(frozen=True)
class ForceSystem:
    """Forces applied at points, plus free couples, all in dimension ``dim``."""

    dim: int
    forces: tuple = ()
    couples: tuple = field(default=())

    def __post_init__(self):
        forces = []
        for k, (p, u) in enumerate(self.forces):
            p = as_vector(p, self.dim, name=f"forces[{k}].point")
            u = as_vector(u, self.dim, name=f"forces[{k}].vector")
            forces.append((p, u))
        for k, c in enumerate(self.couples):
            if c.dim != self.dim:
                raise DimensionError(f"couples[{k}] has dimension {c.dim}, expected {self.dim}")
        object.__setattr__(self, "forces", tuple(forces))
        object.__setattr__(self, "couples", tuple(self.couples))

    def scale(self):
        """Magnitude against which equilibrium residuals are judged."""
        s = 0.0
        for p, u in self.forces:
            un = float(np.linalg.norm(u))
            s = max(s, un, un * float(np.linalg.norm(p)))
        for c in self.couples:
            s = max(s, c.norm())
        return s


def resultant(system):
    total = LineBivector.zero(system.dim)
    for p, u in system.forces:
        total = total + from_sliding(p, u)
    for c in system.couples:
        total = total + from_couple(c)
    return total


def residuals(system):
    """Norms of the net force and of the net moment about the origin."""
    r = resultant(system)
    return float(np.linalg.norm(r.u)), r.m0.norm()


def is_equilibrium(system, tol=DEFAULT_TOL):
    force, moment = residuals(system)
    limit = tol * system.scale()
    return force <= limit and moment <= limit


def classify_planar(m, tol=DEFAULT_TOL, ref_scale=1.0):
    """Return ``"zero"``, ``"sliding"`` or ``"couple"`` for a planar screw."""
    if m.dim != 2:
        raise DimensionError(f"planar classification needs dimension 2, got {m.dim}")
    kind = classify(m, tol, ref_scale).kind
    # no trivectors in the plane, so "general" cannot occur
    assert kind != "general", kind
    return kind


def couple_from_pairs(dim, pairs):
    """Couple bivector from a ``{(i, j): value}`` map with 1-based indices."""
    return Bivector.from_dict(dim, pairs)
