# -*- coding: utf-8 -*-
"""
Exact rational helpers.

All scalars in the toolkit are ``fractions.Fraction``; linear algebra goes through
sympy matrices, so this module converts in both directions and provides the
"p/q" string form used on the JSON boundary.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple, Union

import sympy as sp

from utils.errors import DomainError

RationalLike = Union[Fraction, int, str, sp.Rational]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse ``"3/10"``, ``"-2"``, ints or sympy rationals into a Fraction.

    Floats are rejected: a decimal literal is not an exact input.
    """
    if isinstance(value, bool):
        raise DomainError("PARSE_ERROR", f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DomainError("PARSE_ERROR", f"not a rational: {value!r}")
    raise DomainError("PARSE_ERROR", f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value: RationalLike) -> sp.Rational:
    f = parse_rational(value)
    return sp.Rational(f.numerator, f.denominator)


def from_sympy(value: sp.Expr) -> Fraction:
    """Convert a sympy Rational (or Integer) into a Fraction."""
    value = sp.sympify(value)
    if not value.is_Rational:
        raise ValueError(f"expected a rational, got {value}")
    return Fraction(int(value.p), int(value.q))


def to_matrix(rows: Sequence[Sequence[RationalLike]]) -> sp.Matrix:
    """Build a sympy matrix with exact Rational entries."""
    return sp.Matrix([[to_sympy(v) for v in row] for row in rows])


def column(values: Sequence[RationalLike]) -> sp.Matrix:
    return to_matrix([[v] for v in values])


def matrix_to_fractions(m: sp.Matrix) -> List[Fraction]:
    """Flatten a sympy column/row vector into Fractions."""
    return [from_sympy(v) for v in m]


def common_denominator(values: Iterable[Fraction]) -> int:
    return reduce(lcm, (v.denominator for v in values), 1)


def primitive_integer_vector(values: Sequence[Fraction]) -> Tuple[int, ...]:
    """Positive multiple of ``values`` with coprime integer entries.

    Only positive rescaling is applied, so rays keep their direction.
    """
    den = common_denominator(values)
    ints = [int(v * den) for v in values]
    g = reduce(gcd, (abs(v) for v in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(v // g for v in ints)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
