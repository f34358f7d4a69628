# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from shared.io import (
    complex_from_json,
    heights_from_json,
    load_weights,
    parse_labels,
    parse_point,
    read_json,
    weights_from_json,
    write_json,
)
from shared.rationals import format_rational, parse_rational, primitive_integer_vector
from utils.errors import DomainError


def test_complex_round_trip(tmp_path, hexagon):
    path = tmp_path / "out" / "k.json"
    write_json(str(path), hexagon.to_json())
    assert complex_from_json(read_json(str(path))) == hexagon
    assert not (tmp_path / "out" / "k.json.tmp").exists()


@pytest.mark.parametrize("data", [[], {"n": 3}, {"n": "3", "facets": []}, {"n": 3, "facets": [1, 2]}])
def test_malformed_complexes(data):
    with pytest.raises(DomainError) as e:
        complex_from_json(data)
    assert e.value.code == "PARSE_ERROR"


def test_read_errors(tmp_path):
    with pytest.raises(DomainError) as e:
        read_json(str(tmp_path / "nothing.json"))
    assert e.value.code == "IO_ERROR"
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(DomainError) as e:
        read_json(str(broken))
    assert e.value.code == "PARSE_ERROR"


def test_non_utf8_files_are_parse_errors(tmp_path):
    binary = tmp_path / "binary.json"
    binary.write_bytes(b"\xff\xfe{}")
    with pytest.raises(DomainError) as e:
        read_json(str(binary))
    assert e.value.code == "PARSE_ERROR"
    assert e.value.details == {"path": str(binary)}


def test_weights(weights_path):
    w = load_weights(weights_path)
    assert w.l == (Fraction(3, 10), Fraction(3, 10), Fraction(2, 5))
    with pytest.raises(DomainError):
        weights_from_json({"l": "3/10", "nu": "1/2"})
    with pytest.raises(DomainError) as e:
        weights_from_json({"l": [0.5, 0.5], "nu": "1/2"})
    assert e.value.code == "PARSE_ERROR"


def test_heights_accept_solve_reports():
    witness = {"1": "1", "1bar": "2"}
    assert heights_from_json({"status": "feasible", "witness": witness}) == witness
    assert heights_from_json(witness) == witness
    with pytest.raises(DomainError):
        heights_from_json([1, 2])


def test_points_and_labels():
    assert parse_point("1/3, -1/3,0") == (Fraction(1, 3), Fraction(-1, 3), 0)
    assert parse_labels("1,3") == [1, 3]
    assert parse_labels("") == []
    with pytest.raises(DomainError):
        parse_point("")
    with pytest.raises(DomainError):
        parse_labels("1,x")


def test_rationals():
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(4)) == "4"
    assert primitive_integer_vector([Fraction(-2, 3), Fraction(1, 3), Fraction(1, 3)]) == (-2, 1, 1)
    with pytest.raises(DomainError):
        parse_rational("1/0")
    with pytest.raises(DomainError):
        parse_rational(True)
