# -*- coding: utf-8 -*-
"""
dual / threshold commands.
"""

from argparse import Namespace
from typing import Any, Dict

from shared.io import load_complex, load_weights
from utils.complex_core import (
    alexander_dual,
    is_balanced,
    labels_of,
    m_vector,
    minimal_nonfaces,
    threshold_complex,
)
from utils.polytopality import threshold_witness, verify_witness


def run_dual_command(args: Namespace) -> Dict[str, Any]:
    K = load_complex(args.input)
    return {
        "complex": K.to_json(),
        "dual": alexander_dual(K).to_json(),
        "minimal_nonfaces": [labels_of(b) for b in minimal_nonfaces(K)],
        "m_vector": m_vector(K),
        "balanced": is_balanced(K),
    }


def run_threshold_command(args: Namespace) -> Dict[str, Any]:
    w = load_weights(args.input)
    K = threshold_complex(w)
    f = threshold_witness(w)
    return {
        "complex": K.to_json(),
        "dual": alexander_dual(K).to_json(),
        "witness": f.to_json(),
        "verified": verify_witness(K, f),
    }
