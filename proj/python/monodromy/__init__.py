"""Exact SL2(Z) monodromy factorization toolkit.

The compiled core lives in ``monodromy._core``. Report-style functions are
returned from the core as JSON text; the wrappers below decode them.
"""

import json as _json

from ._core import (  # noqa: F401
    Factorization,
    HurwitzIndexError,
    InvalidVector,
    Mat2,
    MonodromyError,
    NotRealizable,
    NotSL2,
    ParseError,
    PrimVec,
    ProductError,
    ShapeError,
    abelianize,
    apply_moves,
    conjugate,
    eta12_example,
    eta_act,
    eta_power,
    garside_act,
    hurwitz_move,
    order_of,
    period3_tuple,
    rotate,
    run_cli,
    search_eta_fixed_count,
    search_tau_fixed_count,
    sixth_power_sum_at,
    solve_vector_transporter,
    standard_tuple,
    tau_act,
    trace_polynomial_in_norm,
    trace_polynomial_str,
    transvection,
    transvection_vector,
    two_vector_trace,
)
from . import _core

__all__ = [name for name in dir(_core) if not name.startswith("_") and not name.endswith("_json")]
__all__ += [
    "classify",
    "oracle",
    "conic_points",
    "decide_sim_conjugacy",
    "solve_shift_conjugator",
    "trace_polynomial",
    "eta_analysis",
    "half_rotation",
    "eta_derivation",
    "verify_generators",
    "norm_head",
]


def classify(n):
    """Rotation-invariant classes for the standard length-n tuple."""
    return _json.loads(_core.classify_json(n))


def oracle(n, box, jobs=1):
    return _json.loads(_core.oracle_json(n, box, jobs))


def conic_points(case):
    return _json.loads(_core.conic_points_json(str(case)))


def decide_sim_conjugacy(a, b, fallback_bound=6):
    return _json.loads(_core.decide_sim_conjugacy_json(a, b, fallback_bound))


def solve_shift_conjugator(f, s):
    return _json.loads(_core.solve_shift_conjugator_json(f, s))


def trace_polynomial(case):
    """Coefficients keyed by (i, j) exponent pairs in p and q."""
    raw = _json.loads(_core.trace_polynomial_json(str(case)))
    return {tuple(int(e) for e in k.split(",")): int(v) for k, v in raw.items()}


def eta_analysis(max_s=12, probe=12):
    return _json.loads(_core.eta_analysis_json(max_s, probe))


def half_rotation(n=12):
    return _json.loads(_core.half_rotation_json(n))


def eta_derivation():
    return _json.loads(_core.eta_derivation_json())


def verify_generators(case):
    return _json.loads(_core.verify_generators_json(case))


def norm_head(case):
    return _json.loads(_core.norm_head_json(str(case)))
