# -*- coding: utf-8 -*-
"""
Shared configuration constants for the biersphere toolkit.

Every budget can be overridden through an environment variable named
``BIER_<KEY>`` (for example ``BIER_MAX_PIVOTS=100000``); CLI flags override
both for a single invocation.
"""

import os
from typing import Any, Dict

# Example inputs shipped with the repository
HEXAGON_PATH = "data/hexagon.json"
CUBE_PATHS = (
    "data/cube_skeleton1.json",
    "data/cube_mixed.json",
    "data/cube_skeleton2.json",
)
THRESHOLD_WEIGHTS_PATH = "data/threshold_weights.json"
TRIANGLE_BOUNDARY_PATH = "data/triangle_boundary.json"

# Enumeration budgets
DEFAULT_BUDGETS = {
    "MAX_N": 20,             # 2^n membership table
    "FVECTOR_MAX_N": 12,     # 3^n ordered disjoint pairs
    "FAN_MAX_N": 8,          # n! permutation cones
    "VERTEX_ENUM_MAX_N": 8,  # tight-subset solves for the polar of Ω_n
    "REALIZE_MAX_N": 6,
    "MAX_PIVOTS": 50000,
    "MAX_RIDGES": 20000,
    "MAX_HYPERSIMPLEX_VERTICES": 100000,  # C(n, r) 0/1 vectors
    "CROSS_CHECK_MAX_N": 6,  # ridge inequalities re-derived from ray dependences
}

# Sampling defaults for randomized checks
DEFAULT_SAMPLING = {
    "DEFAULT_SEED": 0,
    "FAN_SAMPLE_PAIRS": 100,
    "FAN_SAMPLE_POINTS": 20,
    "POINT_DENOMINATOR": 12,
}


def _get_setting(key: str, default: int) -> int:
    """Environment value ``BIER_<key>`` if set and numeric, else ``default``."""
    raw = os.getenv(f"BIER_{key}", "")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


CONFIG: Dict[str, Any] = {}
CONFIG.update({k: _get_setting(k, v) for k, v in DEFAULT_BUDGETS.items()})
CONFIG.update({k: _get_setting(k, v) for k, v in DEFAULT_SAMPLING.items()})
