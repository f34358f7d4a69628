# -*- coding: utf-8 -*-
"""
fan verify | cone | rays
"""

from argparse import Namespace
from typing import Any, Dict

from shared.io import load_complex, parse_labels
from utils.bier_fan import cone_of_face, facet_of_permutation, face_rays, facet_rays, preposet_of_face, verify_fan
from utils.bier_sphere import BierFace, is_face
from utils.complex_core import SimplicialComplex, mask_from_labels
from utils.errors import DomainError


def _face_from_args(K: SimplicialComplex, args: Namespace) -> BierFace:
    """--perm picks the facet of a permutation; otherwise --a1/--a2 name the face."""
    if getattr(args, "perm", None):
        perm = parse_labels(args.perm)
        if sorted(perm) != list(range(1, K.n + 1)):
            raise DomainError("INVALID_INPUT", f"--perm must list 1..{K.n} once each")
        return facet_of_permutation(K, [v - 1 for v in perm])
    a1 = mask_from_labels(parse_labels(args.a1 or ""), K.n)
    a2 = mask_from_labels(parse_labels(args.a2 or ""), K.n)
    if (a1 or a2) and not is_face(K, a1, a2):
        raise DomainError("INVALID_INPUT", "(A1, A2) is not a face of Bier(K)",
                          {"a1": parse_labels(args.a1 or ""), "a2": parse_labels(args.a2 or "")})
    return BierFace(K.n, a1, a2)


def run_fan_command(args: Namespace) -> Dict[str, Any]:
    K = load_complex(args.input)
    if args.action == "verify":
        return verify_fan(K, seed=args.seed).to_json()
    tau = _face_from_args(K, args)
    if args.action == "cone":
        return {"face": tau.to_json(), "cone": cone_of_face(tau).to_json(),
                "preposet": preposet_of_face(tau).to_json()}
    if args.action == "rays":
        rays = facet_rays(tau) if tau.is_facet else face_rays(tau)
        return {"face": tau.to_json(), "rays": [list(r) for r in rays],
                "vertices": [v.label for v in tau.vertices]}
    raise DomainError("INVALID_INPUT", f"unknown fan action {args.action!r}")
