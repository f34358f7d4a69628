# -*- coding: utf-8 -*-
"""
volume / delta-volume / star-contains
"""

from argparse import Namespace
from typing import Any, Dict

from shared.io import load_complex, parse_labels, parse_point
from shared.rationals import format_rational
from utils.complex_core import labels_of, mask_from_labels, with_face
from utils.geometry import locate_in_star, normalized_volume, volume_delta, volume_report


def run_volume_command(args: Namespace) -> Dict[str, Any]:
    return volume_report(load_complex(args.input))


def run_delta_volume_command(args: Namespace) -> Dict[str, Any]:
    K = load_complex(args.input)
    B = mask_from_labels(parse_labels(args.face), K.n)
    delta = volume_delta(K, B)
    return {
        "face": labels_of(B),
        "delta": delta,
        "before": normalized_volume(K),
        "after": normalized_volume(with_face(K, B)),
    }


def run_star_contains_command(args: Namespace) -> Dict[str, Any]:
    K = load_complex(args.input)
    loc = locate_in_star(K, parse_point(args.x))
    return {
        "inside": loc.total <= 1,
        "gauge": format_rational(loc.total),
        "facet": loc.facet.to_json(),
    }
