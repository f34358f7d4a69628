# -*- coding: utf-8 -*-
"""
bier facets | fvector | ridges
"""

from argparse import Namespace
from collections import Counter
from typing import Any, Dict

from shared.io import load_complex
from utils.bier_sphere import f_vector, facets, ridges
from utils.errors import DomainError


def run_bier_command(args: Namespace) -> Dict[str, Any]:
    K = load_complex(args.input)
    if args.action == "facets":
        facet_list = facets(K)
        return {"count": len(facet_list), "facets": [tau.to_json() for tau in facet_list]}
    if args.action == "fvector":
        return {"f_vector": f_vector(K)}
    if args.action == "ridges":
        ridge_list = ridges(K)
        counts = Counter(r.tag for r in ridge_list)
        return {"count": len(ridge_list), "tags": dict(sorted(counts.items())),
                "ridges": [r.to_json() for r in ridge_list]}
    raise DomainError("INVALID_INPUT", f"unknown bier action {args.action!r}")
