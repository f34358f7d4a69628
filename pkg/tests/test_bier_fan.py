# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from utils.bier_fan import (
    Circuit,
    Preposet,
    cone_contains,
    cone_intersection,
    cone_of_face,
    complex_from_fan,
    delta_circuit,
    facet_of_permutation,
    facet_rays,
    permutation_cone_generators,
    preposet_of_face,
    verify_fan,
)
from utils.bier_sphere import BierFace, facets
from utils.complex_core import skeleton_complex, threshold_complex, trivial_complex
from utils.errors import BudgetError, DomainError
from utils.sampling import make_rng, random_weights

from tests.conftest import random_complexes

CYCLIC = Circuit(((1, -1, 0), (0, 1, -1), (-1, 0, 1)))


def test_preposet_closure_and_classes():
    chain = Preposet(3, [(0, 1), (1, 2)])
    assert chain.le(0, 2)
    assert chain.is_tree_poset()
    assert chain.non_leaves() == [1]
    loop = Preposet(3, [(0, 1), (1, 0)])
    assert loop.equivalence_classes() == [(0, 1), (2,)]
    assert not loop.is_poset()
    assert Preposet(3, [(0, 1), (1, 2), (0, 2)]) == chain


def test_preposet_of_facet():
    assert preposet_of_face(BierFace(3, 1, 4)).to_json() == [[1, 2], [1, 3], [2, 3]]


def test_cone_json():
    assert cone_of_face(BierFace(3, 1, 4)).to_json() == {"le": [[1, 2], [2, 3]], "eq": []}
    assert cone_of_face(BierFace(3, 1, 0)).to_json() == {"le": [[1, 2]], "eq": [[2, 3]]}
    assert cone_of_face(BierFace(3, 0, 0)).is_zero_cone
    assert not cone_of_face(BierFace(3, 1, 4)).is_zero_cone


def test_cone_contains():
    cone = cone_of_face(BierFace(3, 1, 4))
    assert cone_contains(cone, (-1, 0, 1))
    assert cone_contains(cone, (0, 0, 0))
    assert not cone_contains(cone, (1, 0, -1))
    with pytest.raises(DomainError) as e:
        cone_contains(cone, (1, 1, 1))
    assert e.value.code == "NOT_IN_H0"


def test_cone_intersection():
    assert cone_intersection(BierFace(3, 1, 4), BierFace(3, 1, 2)) == BierFace(3, 1, 0)
    assert cone_intersection(BierFace(3, 1, 4), BierFace(3, 2, 1)).is_empty_face


def test_facet_of_permutation(hexagon):
    assert facet_of_permutation(hexagon, (0, 1, 2)) == BierFace(3, 1, 4)
    assert facet_of_permutation(trivial_complex(3), (1, 0, 2)) == BierFace(3, 0, 5)
    with pytest.raises(DomainError):
        facet_of_permutation(hexagon, (0, 0, 2))


def test_permutation_cone_generators_are_in_h0():
    for ray in permutation_cone_generators((2, 0, 1, 3)):
        assert sum(ray) == 0


def test_facet_rays():
    assert facet_rays(BierFace(3, 1, 4)) == [(-2, 1, 1), (-1, -1, 2)]
    assert facet_rays(BierFace(3, 0, 5)) == [(2, -1, -1), (-1, -1, 2)]
    with pytest.raises(DomainError) as e:
        facet_rays(BierFace(3, 1, 0))
    assert e.value.code == "NOT_FACET"


def test_verify_fan_small(hexagon, triangle, cross_complex):
    for K in (hexagon, triangle, cross_complex):
        report = verify_fan(K)
        assert report.passed, report.failures
        assert report.permutations == 6
        assert sum(report.facet_hits.values()) == 6


def test_trivial_complex_hits_each_facet_twice():
    report = verify_fan(trivial_complex(3))
    assert report.passed
    assert report.facets == 3
    assert set(report.facet_hits.values()) == {2}


def test_verify_fan_cubes_and_threshold(cubes):
    rng = make_rng(3)
    complexes = cubes + [threshold_complex(random_weights(4, rng)) for _ in range(3)]
    for K in complexes:
        report = verify_fan(K, pair_samples=30, point_samples=8)
        assert report.passed, report.failures
        assert report.permutations == 24


def test_verify_fan_with_another_circuit(hexagon):
    assert verify_fan(hexagon, c=CYCLIC).passed


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_verify_fan_random(n):
    for K in random_complexes(n, 50, seed=n):
        report = verify_fan(K, seed=n, pair_samples=0)
        assert report.passed, report.failures
        assert sum(report.facet_hits.values()) == report.permutations


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_intersection_law_random(n):
    for K in random_complexes(n, 10, seed=60 + n):
        report = verify_fan(K, seed=n, pair_samples=100, point_samples=100)
        assert report.checks["intersection_law"], report.failures


def test_verify_fan_budget():
    with pytest.raises(BudgetError):
        verify_fan(skeleton_complex(9, 1))


def test_complex_from_fan(hexagon, cross_complex):
    for K in (hexagon, cross_complex, trivial_complex(3), skeleton_complex(4, 1)):
        posets = [preposet_of_face(t) for t in facets(K)]
        assert complex_from_fan(K.n, posets) == K
    with pytest.raises(DomainError) as e:
        complex_from_fan(2, [])
    assert e.value.code == "RANGE"


def test_circuit_coordinates():
    assert CYCLIC.coordinates((1, -1, 0)) == (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))
    assert CYCLIC.combine((Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))) == (1, -1, 0)
    assert delta_circuit(3).coordinates((1, -1, 0)) == (1, -1, 0)


def test_circuit_validation():
    with pytest.raises(DomainError) as e:
        Circuit(((1, -1, 0), (0, 1, -1), (0, 1, -1)))
    assert e.value.code == "INVALID_INPUT"
    with pytest.raises(DomainError) as e:
        Circuit(((1, 0, 0), (0, 1, 0), (-1, -1, 0)))
    assert e.value.code == "NOT_IN_H0"
    with pytest.raises(DomainError) as e:
        Circuit(((1, -1, 0), (-1, 1, 0), (0, 0, 0)))
    assert e.value.code == "INVALID_INPUT"
