# -*- coding: utf-8 -*-
"""
vkf face | minkowski | polar-iso, and hypersimplex
"""

from argparse import Namespace
from typing import Any, Dict

from shared.io import parse_labels, parse_point
from shared.rationals import format_rational
from utils.bier_fan import delta_circuit
from utils.complex_core import mask_from_labels
from utils.errors import DomainError
from utils.geometry import (
    hypersimplex_vertices,
    minkowski,
    polar_iso_check,
    vkf_exact_face,
    vkf_f_vector,
    vkf_gauge,
    vkf_is_face,
)


def run_vkf_command(args: Namespace) -> Dict[str, Any]:
    if args.action == "face":
        I = mask_from_labels(parse_labels(args.i or ""), args.n)
        J = mask_from_labels(parse_labels(args.j or ""), args.n)
        return {
            "n": args.n,
            "is_face": vkf_is_face(args.n, I, J),
            "exact_face": vkf_exact_face(args.n, I, J),
            "f_vector": vkf_f_vector(args.n),
        }
    if args.action == "minkowski":
        x = parse_point(args.x)
        values = minkowski(delta_circuit(len(x)), x)
        return {**values.to_json(), "vkf": format_rational(vkf_gauge(x))}
    if args.action == "polar-iso":
        report = polar_iso_check(args.n)
        return {"iso": report["iso"], "vertices": report["vertices"], "passed": report["passed"]}
    raise DomainError("INVALID_INPUT", f"unknown vkf action {args.action!r}")


def run_hypersimplex_command(args: Namespace) -> Dict[str, Any]:
    vertices = hypersimplex_vertices(args.n, args.r)
    return {"n": args.n, "r": args.r, "count": len(vertices), "vertices": [list(v) for v in vertices]}
