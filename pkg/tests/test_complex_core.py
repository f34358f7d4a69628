# -*- coding: utf-8 -*-
"""Complexes on [n]: duals, minimal non-faces, m-vectors, balance and threshold complexes."""

from fractions import Fraction

import numpy as np
import pytest

from utils.complex_core import (
    GroundSet,
    WeightVector,
    alexander_dual,
    boundary_complex,
    boundary_nonsimplices,
    boundary_pairs,
    boundary_simplices,
    from_labels,
    is_balanced,
    is_threshold_realized,
    labels_of,
    m_vector,
    mask_of,
    minimal_nonfaces,
    skeleton_complex,
    threshold_complex,
    trivial_complex,
    vertices_of,
    with_face,
)
from utils.errors import BudgetError, DomainError
from utils.sampling import all_complexes, make_rng, random_weights


def test_masks_and_labels():
    assert mask_of([0, 2]) == 5
    assert vertices_of(5) == [0, 2]
    assert labels_of(6) == [2, 3]


def test_from_labels_closes_downward():
    K = from_labels(3, [[1, 2], [3]])
    assert K.facets == [3, 4]
    assert K.faces == [0, 1, 2, 3, 4]
    assert K.vertices == [0, 1, 2]
    assert K.to_json() == {"n": 3, "facets": [[1, 2], [3]]}


def test_non_maximal_generators_are_absorbed():
    assert from_labels(3, [[1, 2], [1], []]) == from_labels(3, [[1, 2]])


def test_ghost_vertices_are_allowed():
    K = from_labels(4, [[1, 2], [3]])
    assert K.vertices == [0, 1, 2]
    assert 8 not in K


def test_improper_inputs_are_rejected():
    with pytest.raises(DomainError) as e:
        from_labels(3, [[1, 2, 3]])
    assert e.value.code == "FULL_COMPLEX"
    with pytest.raises(DomainError) as e:
        from_labels(3, [[4]])
    assert e.value.code == "INVALID_INPUT"
    with pytest.raises(DomainError) as e:
        GroundSet(1)
    assert e.value.code == "EMPTY_GROUND"
    with pytest.raises(BudgetError):
        GroundSet(21)


def test_dual_examples(hexagon, triangle):
    assert alexander_dual(hexagon) == hexagon
    assert alexander_dual(triangle) == trivial_complex(3)
    assert alexander_dual(trivial_complex(4)) == boundary_complex(4)
    assert alexander_dual(skeleton_complex(4, 1)) == skeleton_complex(4, 2)


def test_dual_is_an_involution():
    for K in all_complexes(3):
        assert alexander_dual(alexander_dual(K)) == K


def test_dual_and_complex_split_every_subset():
    for K in all_complexes(4):
        D = alexander_dual(K)
        for s in range(1 << 4):
            assert (s in K) != ((K.full & ~s) in D)


def test_minimal_nonfaces(hexagon, triangle):
    assert minimal_nonfaces(hexagon) == [3, 5, 6]
    assert minimal_nonfaces(triangle) == [7]
    found = minimal_nonfaces(from_labels(4, [[1, 2], [3]]))
    assert 5 in found  # {1,3}
    assert 8 in found  # ghost vertex {4}
    assert 9 not in found  # {1,4} contains the non-face {4}


def test_m_vector(hexagon, triangle):
    assert m_vector(hexagon) == [2, 2, 2]
    assert m_vector(triangle) == [1, 1, 1]
    assert m_vector(skeleton_complex(4, 1)) == [3, 3, 3, 3]
    assert m_vector(trivial_complex(4)) == [1, 1, 1, 1]


def test_m_vector_counts_boundary_pairs():
    for K in all_complexes(4):
        assert sum(m_vector(K)) == len(boundary_pairs(K))


def test_boundary_simplices_and_nonsimplices(hexagon):
    assert boundary_simplices(hexagon) == [1, 2, 4]
    assert boundary_nonsimplices(hexagon) == [3, 5, 6]


def test_balanced(hexagon, triangle, cubes):
    assert is_balanced(hexagon)
    assert not is_balanced(triangle)
    assert all(is_balanced(K) for K in cubes)
    assert not is_balanced(trivial_complex(4))
    assert not is_balanced(boundary_complex(4))


def test_skeleton_range():
    with pytest.raises(DomainError) as e:
        skeleton_complex(3, 3)
    assert e.value.code == "RANGE"


def test_with_face(hexagon):
    bigger = with_face(hexagon, 3)
    assert 3 in bigger and 5 not in bigger
    with pytest.raises(DomainError) as e:
        with_face(hexagon, 1)
    assert e.value.code == "NOT_MINIMAL_NONFACE"
    with pytest.raises(DomainError) as e:
        with_face(bigger, 7)
    assert e.value.code == "FULL_COMPLEX"
    with pytest.raises(DomainError) as e:
        with_face(skeleton_complex(4, 1), 7)
    assert e.value.code == "NOT_MINIMAL_NONFACE"


def test_threshold_complex_example(hexagon):
    w = WeightVector((Fraction(3, 10), Fraction(3, 10), Fraction(2, 5)), Fraction(1, 2))
    assert threshold_complex(w) == hexagon
    assert is_threshold_realized(hexagon, w)
    assert not is_threshold_realized(boundary_complex(3), w)


def test_threshold_ties_are_reported():
    w = WeightVector((Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)), Fraction(1, 2))
    with pytest.raises(DomainError) as e:
        threshold_complex(w)
    assert e.value.code == "NOT_GENERIC"
    assert e.value.details["subset"] == [1, 2]


def test_weight_validation():
    with pytest.raises(DomainError) as e:
        WeightVector((Fraction(1, 2), Fraction(1, 3), Fraction(1, 3)), Fraction(1, 2))
    assert e.value.code == "NOT_NORMALIZED"
    with pytest.raises(DomainError) as e:
        WeightVector((Fraction(1, 2), Fraction(1, 2)), Fraction(1))
    assert e.value.code == "RANGE"
    with pytest.raises(DomainError):
        WeightVector((Fraction(3, 2), Fraction(-1, 2)), Fraction(1, 2))


def test_dual_of_threshold_complex_is_threshold():
    rng = make_rng(7)
    for _ in range(40):
        w = random_weights(int(rng.integers(2, 7)), rng)
        K = threshold_complex(w)
        assert alexander_dual(K) == threshold_complex(WeightVector(w.l, 1 - w.nu))


def test_all_complexes_counts():
    assert sum(1 for _ in all_complexes(3)) == 18
    assert sum(1 for _ in all_complexes(4)) == 166
    assert all(np.count_nonzero(K.table) >= 1 for K in all_complexes(3))
