# -*- coding: utf-8 -*-
"""
biersphere: Bier spheres, their canonical fans, volumes and polytopality.
Entry point for the command-line interface.

Every command prints one JSON document on stdout. Exit codes: 0 on success,
2 on domain, input or parse errors, 3 when a budget would be exceeded.
"""

import argparse
import logging
import os
import re
import sys
from typing import Callable, Dict, List, Optional

from shared.config import CONFIG
from shared.io import dumps
from utils.errors import BierError

from commands.bier import run_bier_command
from commands.complexes import run_dual_command, run_threshold_command
from commands.fan import run_fan_command
from commands.polytopality import run_polytopality_command
from commands.vkf import run_hypersimplex_command, run_vkf_command
from commands.volume import run_delta_volume_command, run_star_contains_command, run_volume_command

LOGLEVEL = os.getenv("LOGLEVEL", "WARNING").upper()
logger = logging.getLogger("biersphere")

COMMANDS: Dict[str, Callable] = {
    "dual": run_dual_command,
    "bier": run_bier_command,
    "fan": run_fan_command,
    "volume": run_volume_command,
    "delta-volume": run_delta_volume_command,
    "star-contains": run_star_contains_command,
    "vkf": run_vkf_command,
    "hypersimplex": run_hypersimplex_command,
    "threshold": run_threshold_command,
    "polytopality": run_polytopality_command,
}

# --max-n caps every enumeration budget for one invocation
MAX_N_KEYS = ("FVECTOR_MAX_N", "FAN_MAX_N", "VERTEX_ENUM_MAX_N", "REALIZE_MAX_N")

RATIONAL_LIST = re.compile(r"^-\.?\d[\d/.,-]*$")


class _JsonArgumentParser(argparse.ArgumentParser):
    """Usage errors become PARSE_ERROR objects instead of argparse's exit code 2 text."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # "-2/3,1/3,1/3" is a value, not an option
        self._negative_number_matcher = RATIONAL_LIST

    def error(self, message):
        raise BierError("PARSE_ERROR", message)


def build_parser() -> argparse.ArgumentParser:
    parser = _JsonArgumentParser(prog="biersphere", description=__doc__.strip().splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    common.add_argument("--max-n", dest="max_n", type=int, default=None, help="enumeration budget on n")
    common.add_argument("--max-pivots", dest="max_pivots", type=int, default=None, help="simplex pivot budget")

    sub = parser.add_subparsers(dest="command", parser_class=_JsonArgumentParser)
    sub.required = True

    def with_input(name: str, help_text: str, actions: Optional[List[str]] = None):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if actions:
            p.add_argument("action", choices=actions)
        p.add_argument("--input", required=True, help="complex JSON file")
        return p

    with_input("dual", "Alexander dual, minimal non-faces, m-vector")
    with_input("bier", "faces of the Bier sphere", ["facets", "fvector", "ridges"])
    fan = with_input("fan", "the canonical fan", ["verify", "cone", "rays"])
    fan.add_argument("--a1", default="", help="A1 as 1-based labels, e.g. 1,2")
    fan.add_argument("--a2", default="", help="A2 as 1-based labels")
    fan.add_argument("--perm", default="", help="permutation of 1..n; selects its facet")
    with_input("volume", "normalized and Euclidean volume of Star(K)")
    delta = with_input("delta-volume", "volume change when adding a minimal non-face")
    delta.add_argument("--face", required=True, help="the minimal non-face, e.g. 1,2")
    star = with_input("star-contains", "membership of a point of H_0 in Star(K)")
    star.add_argument("--x", required=True, help="coordinates, e.g. -2/3,1/3,1/3")
    threshold = sub.add_parser("threshold", parents=[common], help="threshold complex and witness")
    threshold.add_argument("--input", required=True, help="weights JSON file")
    poly = with_input("polytopality", "wall-crossing feasibility", ["solve", "verify", "realize"])
    poly.add_argument("--witness", default="", help="heights JSON file")

    vkf = sub.add_parser("vkf", parents=[common], help="the Van Kampen-Flores polytope")
    vkf.add_argument("action", choices=["face", "minkowski", "polar-iso"])
    vkf.add_argument("--n", type=int, default=None)
    vkf.add_argument("--i", default="", help="I as 1-based labels")
    vkf.add_argument("--j", default="", help="J as 1-based labels")
    vkf.add_argument("--x", default="", help="point of H_0")
    hyper = sub.add_parser("hypersimplex", parents=[common], help="vertices of Δ(n, r)")
    hyper.add_argument("--n", type=int, required=True)
    hyper.add_argument("--r", type=int, required=True)
    return parser


def _check_vkf_args(args) -> None:
    if args.command != "vkf":
        return
    if args.action == "minkowski" and not args.x:
        raise BierError("PARSE_ERROR", "vkf minkowski needs --x")
    if args.action != "minkowski" and args.n is None:
        raise BierError("PARSE_ERROR", f"vkf {args.action} needs --n")


def run(argv: Optional[List[str]] = None, out=None) -> int:
    """Parse ``argv``, run one command, print its JSON report; returns the exit code."""
    out = out or sys.stdout
    saved = dict(CONFIG)
    try:
        args = build_parser().parse_args(argv)
        _check_vkf_args(args)
        if args.max_n is not None:
            for key in MAX_N_KEYS:
                CONFIG[key] = args.max_n
        if args.max_pivots is not None:
            CONFIG["MAX_PIVOTS"] = args.max_pivots
        report = COMMANDS[args.command](args)
    except BierError as e:
        logger.info(f"{e.code}: {e.message}")
        out.write(dumps(e.to_dict()) + "\n")
        return e.exit_code
    finally:
        CONFIG.clear()
        CONFIG.update(saved)
    out.write(dumps(report) + "\n")
    return 0


def main() -> None:
    logging.basicConfig(level=LOGLEVEL, stream=sys.stderr)
    sys.exit(run())


if __name__ == "__main__":
    main()
