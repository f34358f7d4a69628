# -*- coding: utf-8 -*-
"""
polytopality solve | verify | realize
"""

from argparse import Namespace
from typing import Any, Dict

from shared.io import heights_from_json, load_complex, read_json
from utils.errors import DomainError
from utils.polytopality import HeightVector, realize_polytope, solve, verify_witness


def _witness(args: Namespace, n: int) -> HeightVector:
    if not args.witness:
        raise DomainError("INVALID_INPUT", "--witness is required for this action")
    return HeightVector.from_json(heights_from_json(read_json(args.witness)), n)


def run_polytopality_command(args: Namespace) -> Dict[str, Any]:
    K = load_complex(args.input)
    if args.action == "solve":
        return solve(K, max_pivots=args.max_pivots).to_json()
    if args.action == "verify":
        f = _witness(args, K.n)
        return {"witness": f.to_json(), "valid": verify_witness(K, f)}
    if args.action == "realize":
        if args.witness:
            f = _witness(args, K.n)
        else:
            result = solve(K, max_pivots=args.max_pivots)
            if not result.feasible:
                return result.to_json()
            f = result.witness
        return {"witness": f.to_json(), **realize_polytope(K, f)}
    raise DomainError("INVALID_INPUT", f"unknown polytopality action {args.action!r}")
