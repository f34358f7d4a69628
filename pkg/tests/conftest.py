# -*- coding: utf-8 -*-
"""Shared fixtures: the small complexes every module is checked against."""

from pathlib import Path
from typing import List

import pytest

from shared.config import CUBE_PATHS, HEXAGON_PATH, THRESHOLD_WEIGHTS_PATH, TRIANGLE_BOUNDARY_PATH
from shared.io import load_complex
from utils.complex_core import SimplicialComplex, boundary_complex, from_labels, skeleton_complex, trivial_complex
from utils.sampling import make_rng, random_complex

ROOT = Path(__file__).resolve().parent.parent


def data_path(relative: str) -> str:
    return str(ROOT / relative)


def random_complexes(n: int, count: int, seed: int = 0) -> List[SimplicialComplex]:
    rng = make_rng(seed)
    return [random_complex(n, rng) for _ in range(count)]


@pytest.fixture
def hexagon() -> SimplicialComplex:
    """0-skeleton on [3]; its Bier sphere is a hexagon."""
    return load_complex(data_path(HEXAGON_PATH))


@pytest.fixture
def triangle() -> SimplicialComplex:
    """Boundary of the triangle on [3]."""
    return load_complex(data_path(TRIANGLE_BOUNDARY_PATH))


@pytest.fixture
def cross_complex() -> SimplicialComplex:
    """Closure of {1,2} and {3}: the ridge ({1}, [3]) is a Cross ridge."""
    return from_labels(3, [[1, 2], [3]])


@pytest.fixture
def cubes() -> List[SimplicialComplex]:
    """The three balanced complexes on [4]; each Star(K) is the cube Ω_4."""
    return [load_complex(data_path(p)) for p in CUBE_PATHS]


@pytest.fixture
def weights_path() -> str:
    return data_path(THRESHOLD_WEIGHTS_PATH)


@pytest.fixture
def standard_complexes() -> List[SimplicialComplex]:
    return [
        trivial_complex(3),
        boundary_complex(3),
        skeleton_complex(3, 1),
        from_labels(3, [[1, 2], [3]]),
        skeleton_complex(4, 1),
        skeleton_complex(4, 2),
        from_labels(4, [[1, 2], [3]]),
        boundary_complex(4),
    ]
