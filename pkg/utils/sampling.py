# -*- coding: utf-8 -*-
"""
Seeded random inputs for property checks: complexes, weight vectors, permutations,
points of H_0 and points inside cones. Everything is driven by a
``numpy.random.Generator`` so a seed reproduces a run exactly.
"""

import logging
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from shared.config import CONFIG
from utils.complex_core import (
    SimplicialComplex,
    WeightVector,
    all_masks,
    from_facets,
    mask_of,
    mask_sizes,
)
from utils.errors import check_budget

logger = logging.getLogger("sampling")


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(CONFIG["DEFAULT_SEED"] if seed is None else seed)


def random_complex(n: int, rng: np.random.Generator, max_generators: Optional[int] = None) -> SimplicialComplex:
    """Closure of a few random proper subsets; sizes are drawn uniformly from 0..n-1."""
    count = int(rng.integers(1, (max_generators or n + 2) + 1))
    generators = []
    for _ in range(count):
        size = int(rng.integers(0, n))
        generators.append(mask_of(int(v) for v in rng.choice(n, size=size, replace=False)))
    return from_facets(n, generators)


def random_permutation(n: int, rng: np.random.Generator) -> Tuple[int, ...]:
    return tuple(int(v) for v in rng.permutation(n))


def random_weights(n: int, rng: np.random.Generator, max_weight: int = 20) -> WeightVector:
    """Generic weights: integer masses over their total S, nu an odd multiple of 1/(2S)."""
    masses = [int(v) for v in rng.integers(1, max_weight + 1, size=n)]
    total = sum(masses)
    nu = Fraction(2 * int(rng.integers(0, total)) + 1, 2 * total)
    return WeightVector(tuple(Fraction(m, total) for m in masses), nu)


def random_h0_point(n: int, rng: np.random.Generator, denominator: Optional[int] = None) -> Tuple[Fraction, ...]:
    """Random rational point with coordinate sum 0."""
    den = denominator or CONFIG["POINT_DENOMINATOR"]
    raw = [int(v) for v in rng.integers(-den, den + 1, size=n)]
    shift = sum(raw)
    return tuple(Fraction(n * r - shift, n * den) for r in raw)


def random_cone_point(rays: Sequence[Sequence[Fraction]], n: int, rng: np.random.Generator,
                      denominator: Optional[int] = None) -> Tuple[Fraction, ...]:
    """Random non-negative rational combination of ``rays`` (the origin when there are none)."""
    den = denominator or CONFIG["POINT_DENOMINATOR"]
    point = [Fraction(0)] * n
    for ray in rays:
        coeff = Fraction(int(rng.integers(0, den + 1)), den)
        for k in range(n):
            point[k] += coeff * ray[k]
    return tuple(point)


def all_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every proper complex on [n] containing the empty set (n <= 4; n = 5 has millions)."""
    check_budget("n", n, 4)
    full = (1 << n) - 1
    sizes = mask_sizes(n)
    order = sorted((int(m) for m in all_masks(n) if 0 < m < full), key=lambda m: (int(sizes[m]), m))
    table = np.zeros(1 << n, dtype=bool)
    table[0] = True

    def extend(idx: int) -> Iterator[SimplicialComplex]:
        if idx == len(order):
            yield SimplicialComplex(n, table.copy(), validate=False)
            return
        m = order[idx]
        yield from extend(idx + 1)
        if all(table[m ^ (1 << b)] for b in range(n) if m & (1 << b)):
            table[m] = True
            yield from extend(idx + 1)
            table[m] = False

    yield from extend(0)


def sample_pairs(items: List, count: int, rng: np.random.Generator) -> List[Tuple]:
    """``count`` random ordered pairs drawn with replacement."""
    if not items:
        return []
    idx = rng.integers(0, len(items), size=(count, 2))
    return [(items[int(i)], items[int(j)]) for i, j in idx]
