"""JSON problem, twist and point-list files.

Pair-indexed quantities are written as ``{"pairs": {"i,j": value}}`` with
1-based ``i < j``; in dimension 3 a ``{"pseudovector": [x, y, z]}`` form is
also accepted on input (right-handed: e1∧e2 ↔ e3).
"""
from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .exterior import Bivector, pair_indices, pseudovector_to_bivector
from .statics import ForceSystem


class ProblemParseError(Exception):
    """File is not valid JSON."""


class ProblemValidationError(Exception):
    """File is JSON but does not match the expected schema."""


@dataclass
class ProblemFile:
    dimension: int
    forces: list = field(default_factory=list)
    couples: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def force_system(self):
        return ForceSystem(self.dimension, tuple(self.forces), tuple(self.couples))


@dataclass
class TwistFile:
    dimension: int
    q: np.ndarray
    omega: Bivector  # pair coordinates ω_ij of the angular velocity
    v_q: np.ndarray
    metadata: dict = field(default_factory=dict)


def read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_json(text, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemParseError(
            f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def _fail(where, msg):
    raise ProblemValidationError(f"{where}: {msg}")


def _real(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        _fail(where, f"expected a number, got {type(x).__name__}")
    if not math.isfinite(x):
        _fail(where, "number must be finite")
    return float(x)


def _reals(x, n, where):
    if not isinstance(x, list):
        _fail(where, f"expected a list of {n} numbers")
    if len(x) != n:
        _fail(where, f"expected {n} entries, got {len(x)}")
    return np.array([_real(v, f"{where}[{k}]") for k, v in enumerate(x)])


def _dimension(data, where="dimension"):
    n = data.get("dimension")
    if isinstance(n, bool) or not isinstance(n, int):
        _fail(where, "required positive integer")
    if n < 1:
        _fail(where, "must be at least 1")
    return n


def parse_pair_key(key, n, where):
    parts = key.split(",")
    if len(parts) != 2:
        _fail(where, f"pair key {key!r} must look like 'i,j'")
    try:
        i, j = (int(p.strip()) for p in parts)
    except ValueError:
        _fail(where, f"pair key {key!r} must hold integers")
    if not 1 <= i < j <= n:
        _fail(where, f"pair key {key!r} needs 1 <= i < j <= {n}")
    return i, j


def parse_pair_quantity(obj, n, where):
    """Read ``{"pairs": {...}}`` or, in dimension 3, ``{"pseudovector": [...]}``."""
    if not isinstance(obj, dict):
        _fail(where, "expected an object with 'pairs' or 'pseudovector'")
    keys = set(obj)
    if keys == {"pairs"}:
        pairs = obj["pairs"]
        if not isinstance(pairs, dict):
            _fail(f"{where}.pairs", "expected an object mapping 'i,j' to numbers")
        mapping = {}
        for key, value in pairs.items():
            idx = parse_pair_key(key, n, f"{where}.pairs")
            if idx in mapping:
                _fail(f"{where}.pairs", f"duplicate pair {key!r}")
            mapping[idx] = _real(value, f"{where}.pairs[{key!r}]")
        return Bivector.from_dict(n, mapping)
    if keys == {"pseudovector"}:
        if n != 3:
            _fail(where, "pseudovector form is only valid in dimension 3")
        return pseudovector_to_bivector(_reals(obj["pseudovector"], 3, f"{where}.pseudovector"))
    _fail(where, f"expected exactly one of 'pairs' or 'pseudovector', got {sorted(keys)}")


def _metadata(data, where="metadata"):
    meta = data.get("metadata", {})
    if not isinstance(meta, dict):
        _fail(where, "expected an object")
    return meta


def _check_keys(data, allowed, where):
    if not isinstance(data, dict):
        _fail(where, "expected a JSON object")
    extra = set(data) - set(allowed)
    if extra:
        _fail(where, f"unknown field(s) {sorted(extra)}")


def problem_from_dict(data):
    _check_keys(data, {"dimension", "forces", "couples", "metadata"}, "<root>")
    n = _dimension(data)
    forces_raw = data.get("forces", [])
    if not isinstance(forces_raw, list):
        _fail("forces", "expected a list")
    forces = []
    for k, f in enumerate(forces_raw):
        where = f"forces[{k}]"
        _check_keys(f, {"point", "vector"}, where)
        for key in ("point", "vector"):
            if key not in f:
                _fail(where, f"missing '{key}'")
        forces.append((_reals(f["point"], n, f"{where}.point"), _reals(f["vector"], n, f"{where}.vector")))
    couples_raw = data.get("couples", [])
    if not isinstance(couples_raw, list):
        _fail("couples", "expected a list")
    couples = [parse_pair_quantity(c, n, f"couples[{k}]") for k, c in enumerate(couples_raw)]
    return ProblemFile(n, forces, couples, _metadata(data))


def twist_from_dict(data):
    _check_keys(data, {"dimension", "q", "omega", "v_q", "metadata"}, "<root>")
    n = _dimension(data)
    for key in ("q", "omega", "v_q"):
        if key not in data:
            _fail("<root>", f"missing '{key}'")
    q = _reals(data["q"], n, "q")
    omega = parse_pair_quantity(data["omega"], n, "omega")
    v_q = _reals(data["v_q"], n, "v_q")
    return TwistFile(n, q, omega, v_q, _metadata(data))


def points_from_data(data, n=None):
    """Point list given either as a bare list or as ``{"points": [...]}``."""
    if isinstance(data, dict):
        _check_keys(data, {"points", "metadata"}, "<root>")
        data = data.get("points")
    if not isinstance(data, list) or not data:
        _fail("points", "expected a non-empty list of points")
    if n is None:
        n = len(data[0]) if isinstance(data[0], list) else 0
    return [_reals(p, n, f"points[{k}]") for k, p in enumerate(data)]


def load_problem(path):
    return problem_from_dict(load_json(read_text(path), path))


def load_twist(path):
    return twist_from_dict(load_json(read_text(path), path))


def load_points(path, n=None):
    return points_from_data(load_json(read_text(path), path), n)


def clean_float(x):
    """Plain float with negative zero folded to zero, for stable output."""
    x = float(x)
    return 0.0 if x == 0.0 else x


def pairs_to_json(b):
    return {f"{i + 1},{j + 1}": clean_float(c) for (i, j), c in zip(pair_indices(b.dim), b.coeffs)}


def triples_to_json(t):
    return {",".join(str(i) for i in key): clean_float(c) for key, c in t.to_dict().items()}


def vector_to_json(v):
    return [clean_float(x) for x in v]


def problem_to_dict(problem):
    """Canonical form: fixed key order, couples always in pair form."""
    out = {
        "dimension": problem.dimension,
        "forces": [{"point": vector_to_json(p), "vector": vector_to_json(u)} for p, u in problem.forces],
        "couples": [{"pairs": pairs_to_json(c)} for c in problem.couples],
    }
    if problem.metadata:
        out["metadata"] = problem.metadata
    return out


def twist_to_dict(twist):
    out = {
        "dimension": twist.dimension,
        "q": vector_to_json(twist.q),
        "omega": {"pairs": pairs_to_json(twist.omega)},
        "v_q": vector_to_json(twist.v_q),
    }
    if twist.metadata:
        out["metadata"] = twist.metadata
    return out


def dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False)
