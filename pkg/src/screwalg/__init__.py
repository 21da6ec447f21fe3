"""Sliding vectors, line bivectors (screws), statics and wrench/twist duality."""

__version__ = "0.1.0"

from .errors import DegenerateInputError, DimensionError, InconsistentDataError, ScrewAlgError
from .exterior import (
    DEFAULT_TOL,
    Bivector,
    SkewMatrix,
    Trivector,
    bivector_to_pseudovector,
    bivector_to_skew,
    dot_bb,
    interior_vb,
    magnitude_b,
    orthogonal_split,
    pseudovector_to_bivector,
    skew_to_bivector,
    trivector_factor,
    wedge_vb,
    wedge_vv,
)
from .points import (
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
from .screw import (
    AxisDecomposition,
    Classification,
    LineBivector,
    SlidingVector,
    bilinear_trivector_invariant,
    central_axis,
    classify,
    decompose_at_points,
    decompose_two,
    from_couple,
    from_sliding,
    from_three_moments,
    moment_at,
    trivector_invariant,
    vector_invariant,
)
from .statics import ForceSystem, classify_planar, is_equilibrium, resultant
from .duality import (
    AngularVelocity,
    Covector,
    TorqueElement,
    Twist,
    Wrench,
    aggregate_wrench,
    moment_map,
    power,
    scalar_invariant,
    twist_eval,
    wrench_eval,
)
