#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
scripts/survey_polytopality.py

Run the wall-crossing feasibility check over random proper complexes and
summarise the outcomes per n.

Usage:
    python scripts/survey_polytopality.py --n 4 5 6 --count 50 --seed 0
    python scripts/survey_polytopality.py --n 5 --count 200 --csv survey.csv
    python scripts/survey_polytopality.py --n 4 --json results/survey.json
"""

import argparse
import json
import os
import sys
from collections import Counter
from typing import Dict, List

import pandas as pd

# project root on the import path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from shared.io import write_json
from utils.bier_sphere import ridges
from utils.complex_core import is_balanced, labels_of
from utils.errors import BierError
from utils.geometry import normalized_volume
from utils.polytopality import solve
from utils.sampling import make_rng, random_complex


def survey_row(K) -> Dict:
    tags = Counter(r.tag for r in ridges(K))
    row = {
        "n": K.n,
        "facets": str([labels_of(f) for f in K.facets]),
        "volume": normalized_volume(K),
        "balanced": is_balanced(K),
        "lambda": tags.get("Lambda", 0),
        "v": tags.get("V", 0),
        "cross": tags.get("Cross", 0),
    }
    try:
        result = solve(K)
        row.update(status=result.status, pivots=result.pivots)
    except BierError as e:
        row.update(status=e.code, pivots=None)
    return row


def run_survey(sizes: List[int], count: int, seed: int) -> pd.DataFrame:
    rng = make_rng(seed)
    rows = []
    for n in sizes:
        seen = set()
        for _ in range(count):
            K = random_complex(n, rng)
            if K in seen:
                continue
            seen.add(K)
            rows.append(survey_row(K))
        print(f"[survey] n={n}: {len(seen)} distinct complexes")
    return pd.DataFrame(rows)


def summarise(df: pd.DataFrame) -> pd.DataFrame:
    return df.groupby(["n", "status"]).agg(
        complexes=("volume", "size"),
        mean_volume=("volume", "mean"),
        max_volume=("volume", "max"),
        mean_pivots=("pivots", "mean"),
    ).reset_index()


def write_summary(summary: pd.DataFrame, path: str, sizes: List[int], count: int, seed: int) -> None:
    """Summary table plus the survey parameters as one JSON document."""
    write_json(path, {
        "sizes": sizes,
        "count": count,
        "seed": seed,
        "summary": json.loads(summary.to_json(orient="records")),
    })


def main():
    parser = argparse.ArgumentParser(description="Polytopality survey over random complexes")
    parser.add_argument("--n", type=int, nargs="+", default=[4, 5])
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--csv", default="", help="write the per-complex table here")
    parser.add_argument("--json", default="", help="write the summary and parameters here")
    args = parser.parse_args()

    print("=" * 60)
    print(f"Polytopality survey: n={args.n}, {args.count} samples each, seed {args.seed}")
    print("=" * 60)
    df = run_survey(args.n, args.count, args.seed)
    summary = summarise(df)
    print(summary.to_string(index=False))
    if args.csv:
        df.to_csv(args.csv, index=False)
        print(f"\n[survey] table written to {args.csv}")
    if args.json:
        write_summary(summary, args.json, args.n, args.count, args.seed)
        print(f"[survey] summary written to {args.json}")


if __name__ == "__main__":
    main()
