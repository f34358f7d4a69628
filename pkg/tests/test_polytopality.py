# -*- coding: utf-8 -*-
"""Wall-crossing inequalities, the feasibility decision and polytope realizations."""

from fractions import Fraction

import pytest

from utils.bier_sphere import BierVertex, facets
from utils.complex_core import WeightVector, skeleton_complex, threshold_complex
from utils.errors import BudgetError, DomainError
from utils.polytopality import (
    HeightVector,
    _positively_proportional,
    realize_polytope,
    ridge_system,
    solve,
    threshold_witness,
    verify_certificate,
    verify_witness,
    wall_dependence,
)
from utils.sampling import all_complexes, make_rng, random_weights

from tests.conftest import random_complexes

F = Fraction


def inequalities(K):
    return {w.key: w for w in ridge_system(K)}


def test_hexagon_inequalities(hexagon):
    system = inequalities(hexagon)
    assert len(system) == 6
    assert system["|1,2"].coefficients == (1, 1, 0, 0, 0, -1)
    assert system["|1,2"].to_text() == "f(1) + f(2) - f(3bar) > 0"
    assert system["1|1,2,3"].coefficients == (-1, 0, 0, 0, 1, 1)
    assert system["1|1,2,3"].to_text() == "- f(1) + f(2bar) + f(3bar) > 0"


def test_cross_inequality(cross_complex):
    wall = inequalities(cross_complex)["1|1,2,3"]
    assert wall.ridge.tag == "Cross"
    assert wall.coefficients == (0, 1, 0, 0, 1, 0)
    assert wall.to_text() == "f(2) + f(2bar) > 0"
    assert wall.to_json()["tag"] == "Cross"


def test_shortcut_matches_ray_dependence(standard_complexes):
    for K in standard_complexes:
        for wall in ridge_system(K, cross_check=False):
            assert _positively_proportional(wall.coefficients, wall_dependence(K, wall.ridge))


@pytest.mark.slow
def test_shortcut_matches_ray_dependence_everywhere():
    for K in all_complexes(4):
        ridge_system(K, cross_check=True)
    for K in random_complexes(5, 50, seed=11) + random_complexes(6, 50, seed=12):
        ridge_system(K, cross_check=True)


def test_height_vector_json():
    f = HeightVector.from_json({"1bar": "1/2", "2": "3", "1": "-1"}, 2)
    assert f.to_json() == {"1": "-1", "2": "3", "1bar": "1/2"}
    assert f[BierVertex(1, True)] == 0
    assert f.as_vector() == (-1, 3, F(1, 2), 0)
    with pytest.raises(DomainError):
        HeightVector.from_json({"3": "1"}, 2)


def test_verify_witness(hexagon):
    ones = HeightVector.constant(hexagon)
    assert verify_witness(hexagon, ones)
    assert not verify_witness(hexagon, HeightVector.constant(hexagon, 0))
    skewed = ones + HeightVector(3, {BierVertex(0, False): F(-11)})
    assert not verify_witness(hexagon, skewed)
    assert not verify_witness(skeleton_complex(4, 1), ones)


def test_solve_hexagon(hexagon):
    result = solve(hexagon)
    assert result.feasible
    assert result.inequalities == 6
    assert verify_witness(hexagon, result.witness)
    assert all(h.denominator == 1 for h in result.witness.as_vector())
    report = result.to_json()
    assert report["status"] == "feasible"
    assert list(report["witness"]) == ["1", "2", "3", "1bar", "2bar", "3bar"]


def test_solve_small_complexes(triangle, cross_complex, cubes):
    for K in [triangle, cross_complex] + cubes:
        result = solve(K)
        assert result.feasible
        assert verify_witness(K, result.witness)


def test_witnesses_use_genuine_vertices_only(triangle):
    # the boundary of the triangle has no dual vertices
    labels = set(solve(triangle).witness.to_json())
    assert labels == {"1", "2", "3"}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_solve_random_complexes(n):
    for K in random_complexes(n, 8, seed=20 + n):
        result = solve(K)
        if result.feasible:
            assert verify_witness(K, result.witness)
        else:
            assert verify_certificate(K, result.certificate)


def test_certificate_checks(hexagon):
    assert not verify_certificate(hexagon, [])
    assert not verify_certificate(hexagon, [("|1,2", F(1))])
    assert not verify_certificate(hexagon, [("|1,2", F(-1))])
    assert not verify_certificate(hexagon, [("no-such-ridge", F(1))])


def test_threshold_witness_example(hexagon):
    w = WeightVector((F(3, 10), F(3, 10), F(2, 5)), F(1, 2))
    f = threshold_witness(w)
    assert f[BierVertex(0, False)] == F(3, 20)
    assert f[BierVertex(2, True)] == F(1, 5)
    assert verify_witness(hexagon, f)


def test_threshold_witness_random():
    rng = make_rng(5)
    for _ in range(20):
        w = random_weights(int(rng.integers(3, 6)), rng)
        K = threshold_complex(w)
        f = threshold_witness(w)
        assert verify_witness(K, f)
        assert solve(K).feasible
        report = realize_polytope(K, f)
        assert report["vertex_count"] == len(facets(K))


@pytest.mark.slow
def test_threshold_witness_random_large():
    rng = make_rng(6)
    realized = 0
    for _ in range(200):
        w = random_weights(int(rng.integers(3, 8)), rng)
        K = threshold_complex(w)
        f = threshold_witness(w)
        assert verify_witness(K, f, ridge_system(K, cross_check=False))
        assert solve(K).feasible
        if K.n <= 5:
            report = realize_polytope(K, f)
            assert report["vertex_count"] == len(facets(K))
            realized += 1
    assert realized > 0


def test_witnesses_form_a_cone(hexagon):
    f = solve(hexagon).witness
    g = HeightVector.constant(hexagon, 2)
    assert verify_witness(hexagon, f + g)
    assert verify_witness(hexagon, f.scaled(F(5, 2)))
    assert not verify_witness(hexagon, f.scaled(0))


def test_realize_hexagon(hexagon):
    report = realize_polytope(hexagon, HeightVector.constant(hexagon))
    assert report["vertex_count"] == 6
    points = {tuple(F(p) for p in v["point"]) for v in report["vertices"]}
    assert (F(-1, 3), 0, F(1, 3)) in points
    assert {tuple(-p for p in pt) for pt in points} == points


def test_realize_scales_with_heights(hexagon):
    ones = realize_polytope(hexagon, HeightVector.constant(hexagon))
    twos = realize_polytope(hexagon, HeightVector.constant(hexagon, 2))
    for a, b in zip(ones["vertices"], twos["vertices"]):
        assert a["facet"] == b["facet"]
        assert [2 * F(p) for p in a["point"]] == [F(p) for p in b["point"]]


def test_realize_triangle(triangle):
    report = realize_polytope(triangle, solve(triangle).witness)
    assert report["vertex_count"] == 3


def test_realize_rejects_bad_heights(hexagon):
    with pytest.raises(DomainError) as e:
        realize_polytope(hexagon, HeightVector.constant(hexagon, 0))
    assert e.value.code == "WITNESS_INVALID"


def test_realize_budget():
    K = skeleton_complex(7, 3)
    with pytest.raises(BudgetError):
        realize_polytope(K, HeightVector.constant(K))


def test_realize_reports_degenerate_heights(hexagon, monkeypatch):
    # zero heights collapse every facet cone onto the origin
    monkeypatch.setattr("utils.polytopality.verify_witness", lambda *args, **kwargs: True)
    with pytest.raises(DomainError) as e:
        realize_polytope(hexagon, HeightVector.constant(hexagon, 0))
    assert e.value.code == "DEGENERATE"
