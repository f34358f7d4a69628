# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from utils.errors import BudgetError
from utils.lp_solver import (
    FEASIBLE,
    INFEASIBLE,
    decide_strict_feasibility,
    is_farkas_certificate,
    is_strict_solution,
)

F = Fraction


def test_opposite_rows_are_infeasible():
    result = decide_strict_feasibility([[1], [-1]])
    assert result.status == INFEASIBLE
    assert result.certificate == (F(1, 2), F(1, 2))


def test_single_row_is_feasible():
    result = decide_strict_feasibility([[1]])
    assert result.feasible
    assert result.witness == (1,)


def test_witness_satisfies_rows():
    A = [[1, -1], [0, 1], [1, 1]]
    result = decide_strict_feasibility(A)
    assert result.status == FEASIBLE
    assert is_strict_solution(A, result.witness)


def test_triangle_of_rows_is_infeasible():
    A = [[1, 0], [0, 1], [-1, -1]]
    result = decide_strict_feasibility(A)
    assert not result.feasible
    assert result.certificate == (F(1, 3), F(1, 3), F(1, 3))
    assert is_farkas_certificate(A, result.certificate)


def test_repeated_rows():
    A = [[1, 0], [1, 0], [0, 1], [2, 1]]
    result = decide_strict_feasibility(A)
    assert result.feasible and is_strict_solution(A, result.witness)


def test_no_rows():
    result = decide_strict_feasibility([], width=3)
    assert result.witness == (1, 1, 1)


def test_certificate_checks():
    A = [[1], [-1]]
    assert is_farkas_certificate(A, [1, 1])
    assert not is_farkas_certificate(A, [0, 0])
    assert not is_farkas_certificate(A, [1, 0])
    assert not is_farkas_certificate(A, [-1, -1])


def test_pivot_budget():
    with pytest.raises(BudgetError) as e:
        decide_strict_feasibility([[1], [-1]], max_pivots=0)
    assert e.value.code == "BUDGET_EXCEEDED"
    assert e.value.exit_code == 3
