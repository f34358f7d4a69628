# -*- coding: utf-8 -*-
"""
utils/geometry.py

Exact geometry of the starshaped realization Star(K) in H_0:
- volumes: Vol_0 (one facet simplex), normalized and Euclidean volume, bistellar deltas
- star membership / radial gauge of Star(K)
- the Van Kampen-Flores polytope Ω_n = Conv(Δ ∪ ∇), its faces and Minkowski functionals
- the polar Ω_n° and its affine identification with the (median) hypersimplex
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import sympy as sp

from shared.config import CONFIG
from shared.rationals import (
    column,
    format_rational,
    from_sympy,
    matrix_to_fractions,
    to_matrix,
    to_sympy,
)
from utils.bier_fan import Circuit, delta_circuit, facet_of_permutation, require_h0
from utils.bier_sphere import BierFace, facets
from utils.complex_core import FaceSet, SimplicialComplex, popcount, vertices_of, with_face
from utils.errors import DomainError, check_budget

logger = logging.getLogger("geometry")

RationalVector = Tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# exact volumes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactVolume:
    """The value q·√r with r a squarefree positive integer (r = 1 for rational volumes)."""

    q: Fraction
    r: int

    @classmethod
    def from_squared(cls, squared) -> "ExactVolume":
        squared = to_sympy(squared)
        if squared < 0:
            raise DomainError("RANGE", "a squared volume cannot be negative")
        coeff, rest = sp.sqrt(squared).as_coeff_Mul()
        return cls(from_sympy(coeff), int(rest ** 2))

    @property
    def squared(self) -> Fraction:
        return self.q * self.q * self.r

    def scaled(self, k) -> "ExactVolume":
        k = Fraction(k)
        if k < 0:
            raise DomainError("RANGE", "volumes scale by non-negative factors")
        return ExactVolume(self.q * k, self.r)

    def __float__(self) -> float:
        return float(self.q) * float(self.r) ** 0.5

    def __str__(self) -> str:
        if self.r == 1:
            return format_rational(self.q)
        if self.q == 1:
            return f"sqrt({self.r})"
        return f"{format_rational(self.q)}*sqrt({self.r})"

    def to_json(self):
        return {"q": format_rational(self.q), "r": self.r, "squared": format_rational(self.squared)}


def circuit_coordinates(c: Circuit, x: Sequence) -> RationalVector:
    """λ with Σλ_i = 0 and x = Σ λ_i u_i; for the δ circuit, λ = x."""
    return c.coordinates(x)


def gram_determinant(vectors: Sequence[Sequence]) -> Fraction:
    m = to_matrix(vectors)
    return from_sympy((m * m.T).det())


def facet_gram_determinant(tau: BierFace, c: Optional[Circuit] = None) -> Fraction:
    """Gram determinant of the vertex vectors -u_i (i in A1), +u_j (j in A2) of a facet simplex."""
    c = c or delta_circuit(tau.n)
    rows = [[-v for v in c.vectors[i]] for i in vertices_of(tau.a1)]
    rows += [list(c.vectors[j]) for j in vertices_of(tau.a2)]
    return gram_determinant(rows)


def vol0(n: int) -> ExactVolume:
    """(n-1)-volume of the simplex spanned by 0 and n-1 of the ±δ_i: √(Gram det) / (n-1)!."""
    if n < 2:
        raise DomainError("EMPTY_GROUND", f"ground set needs n >= 2, got {n}", {"n": n})
    c = delta_circuit(n)
    det = gram_determinant(c.vectors[: n - 1])
    return ExactVolume.from_squared(det / factorial(n - 1) ** 2)


def normalized_volume(K: SimplicialComplex) -> int:
    """Vol(Star(K)) / Vol_0, the number of facets of Bier(K)."""
    return len(facets(K))


def euclidean_volume(K: SimplicialComplex) -> ExactVolume:
    return vol0(K.n).scaled(normalized_volume(K))


def volume_report(K: SimplicialComplex) -> Dict:
    base = vol0(K.n)
    total = base.scaled(normalized_volume(K))
    return {
        "normalized": normalized_volume(K),
        "vol0_sq": format_rational(base.squared),
        "euclid_sq": format_rational(total.squared),
        "vol0": str(base),
        "euclid": str(total),
    }


def volume_delta(K: SimplicialComplex, B: FaceSet) -> int:
    """Change of normalized volume when the minimal non-face B is added: |[n] - B| - |B|.

    The |B| boundary pairs (B - {c}, c) disappear and the |[n] - B| pairs (B, c) appear.
    """
    with_face(K, B)
    return (K.n - popcount(B)) - popcount(B)


# ---------------------------------------------------------------------------
# the star body Star(K)
# ---------------------------------------------------------------------------

class StarLocation(NamedTuple):
    facet: BierFace
    a: Dict[int, Fraction]
    b: Dict[int, Fraction]

    @property
    def total(self) -> Fraction:
        return sum(self.a.values(), Fraction(0)) + sum(self.b.values(), Fraction(0))


def locate_in_star(K: SimplicialComplex, x: Sequence, order: Optional[Sequence[int]] = None) -> StarLocation:
    """Facet cone containing x and the coefficients x = Σ a_i(-δ_i) + Σ b_j δ_j.

    Ties in the sort are broken by vertex index unless ``order`` (0-based, sorting
    x non-decreasingly) is given; every such order lands on a facet cone holding x.
    """
    x = require_h0(x)
    if len(x) != K.n:
        raise DomainError("INVALID_INPUT", f"point has {len(x)} coordinates, expected {K.n}")
    if order is None:
        order = sorted(range(K.n), key=lambda i: (x[i], i))
    tau = facet_of_permutation(K, order)
    if any(x[order[k]] > x[order[k + 1]] for k in range(K.n - 1)):
        raise DomainError("INVALID_INPUT", "order does not sort the point", {"order": list(order)})
    top = x[tau.apex]
    a = {i: top - x[i] for i in vertices_of(tau.a1)}
    b = {j: x[j] - top for j in vertices_of(tau.a2)}
    return StarLocation(tau, a, b)


def star_gauge(K: SimplicialComplex, x: Sequence) -> Fraction:
    """Radial gauge of Star(K): x is inside iff the value is at most 1."""
    return locate_in_star(K, x).total


def star_contains(K: SimplicialComplex, x: Sequence) -> bool:
    return star_gauge(K, x) <= 1


# ---------------------------------------------------------------------------
# simplices Δ, ∇ and the Van Kampen-Flores polytope
# ---------------------------------------------------------------------------

class MinkowskiValues(NamedTuple):
    delta: Fraction
    nabla: Fraction
    polar: Fraction

    def to_json(self):
        return {"delta": format_rational(self.delta), "nabla": format_rational(self.nabla),
                "polar": format_rational(self.polar)}


def minkowski(c: Circuit, x: Sequence) -> MinkowskiValues:
    """(μ_Δ, μ_∇, μ_{Ω°}) = (n·max λ⁻, n·max λ⁺, n·max |λ|)."""
    lam = c.coordinates(x)
    n = c.n
    neg = max(max(-v for v in lam), Fraction(0))
    pos = max(max(lam), Fraction(0))
    return MinkowskiValues(n * neg, n * pos, n * max(abs(v) for v in lam))


def simplex_contains(c: Circuit, x: Sequence, sign: int = 1) -> bool:
    """Barycentric membership of x in Conv(sign·u_1, ..., sign·u_n)."""
    if sign not in (1, -1):
        raise DomainError("INVALID_INPUT", "sign must be +1 (Δ) or -1 (∇)")
    n = c.n
    x = require_h0(x)
    rows = [[sign * c.vectors[i][k] for i in range(n)] for k in range(n)] + [[1] * n]
    try:
        t, _ = to_matrix(rows).gauss_jordan_solve(column(list(x) + [1]))
    except ValueError:
        raise DomainError("NOT_IN_SPAN", "point is not in the affine hull of the simplex")
    return all(v >= 0 for v in matrix_to_fractions(t))


def vkf_gauge(x: Sequence, c: Optional[Circuit] = None) -> Fraction:
    """Minkowski functional of Ω_n = Conv(±u_i): Σ |λ_i - median(λ)|."""
    x = tuple(Fraction(v) for v in x)
    c = c or delta_circuit(len(x))
    lam = c.coordinates(x)
    median = sorted(lam)[len(lam) // 2]
    return sum((abs(v - median) for v in lam), Fraction(0))


@dataclass(frozen=True)
class VKFPolytope:
    n: int
    circuit: Circuit

    @classmethod
    def standard(cls, n: int) -> "VKFPolytope":
        return cls(n, delta_circuit(n))

    @property
    def vertices(self) -> List[RationalVector]:
        """u_1..u_n followed by -u_1..-u_n."""
        return list(self.circuit.vectors) + [tuple(-v for v in u) for u in self.circuit.vectors]

    def contains(self, x: Sequence) -> bool:
        return vkf_gauge(x, self.circuit) <= 1

    def to_json(self):
        return {"n": self.n, "vertices": [[format_rational(v) for v in u] for u in self.vertices]}


def _check_face_pair(n: int, I: FaceSet, J: FaceSet) -> None:
    full = (1 << n) - 1
    if (I | J) & ~full:
        raise DomainError("INVALID_INPUT", f"index sets must lie in [{n}]")
    if I == 0 and J == 0:
        raise DomainError("INVALID_INPUT", "(I, J) = (∅, ∅) does not name a face")


def vkf_is_face(n: int, I: FaceSet, J: FaceSet) -> bool:
    """I ∩ J = ∅ and |I|, |J| <= n/2: the vertices u_I, -u_J lie on a common proper face."""
    _check_face_pair(n, I, J)
    return not I & J and 2 * popcount(I) <= n and 2 * popcount(J) <= n


def vkf_exact_face(n: int, I: FaceSet, J: FaceSet) -> bool:
    """{u_i}_I ∪ {-u_j}_J is exactly the vertex set of a proper face of Ω_n."""
    _check_face_pair(n, I, J)
    if I & J:
        return False
    rest = n - popcount(I) - popcount(J)
    gap = abs(popcount(I) - popcount(J))
    return gap == 0 if rest == 0 else gap < rest


def _face_dimension(n: int, size_i: int, size_j: int) -> int:
    if size_i + size_j == n:
        return n - 2
    return size_i + size_j - 1


def vkf_f_vector(n: int) -> List[int]:
    """(f_0, ..., f_{n-2}) of Ω_n, counted by vertex-set sizes."""
    counts = [0] * (n - 1)
    for size_i in range(n + 1):
        for size_j in range(n + 1 - size_i):
            if size_i + size_j == 0:
                continue
            rest = n - size_i - size_j
            gap = abs(size_i - size_j)
            if (gap == 0) if rest == 0 else (gap < rest):
                counts[_face_dimension(n, size_i, size_j)] += comb(n, size_i) * comb(n - size_i, size_j)
    return counts


# ---------------------------------------------------------------------------
# vertex enumeration, polar body and hypersimplices
# ---------------------------------------------------------------------------

def _has_opposite_rows(rows: Sequence[Sequence[Fraction]]) -> bool:
    seen = {tuple(r) for r in rows}
    return any(tuple(-v for v in r) in seen for r in rows)


def enumerate_vertices(A: Sequence[Sequence], b: Sequence) -> List[RationalVector]:
    """Vertices of {y : A y <= b} by solving every full-rank tight subsystem (sorted, distinct)."""
    A = [tuple(Fraction(v) for v in row) for row in A]
    b = [Fraction(v) for v in b]
    d = len(A[0]) if A else 0
    found = set()
    for rows in itertools.combinations(range(len(A)), d):
        sub = [A[k] for k in rows]
        if _has_opposite_rows(sub):
            continue
        m = to_matrix(sub)
        if m.rank() < d:
            continue
        y = tuple(matrix_to_fractions(m.LUsolve(column([b[k] for k in rows]))))
        if all(sum((a * v for a, v in zip(A[k], y)), Fraction(0)) <= b[k] for k in range(len(A))):
            found.add(y)
    logger.debug(f"enumerate_vertices rows={len(A)} dim={d} vertices={len(found)}")
    return sorted(found)


def polar_vertices(n: int) -> List[RationalVector]:
    """Vertices of Ω_n° = {λ : Σλ = 0, |λ_i| <= 1} in λ coordinates."""
    if n < 2:
        raise DomainError("EMPTY_GROUND", f"ground set needs n >= 2, got {n}", {"n": n})
    check_budget("n", n, CONFIG["VERTEX_ENUM_MAX_N"])
    # chart: λ_1..λ_{n-1} free, λ_n = -(λ_1 + ... + λ_{n-1})
    A, b = [], []
    for i in range(n - 1):
        unit = [0] * (n - 1)
        unit[i] = 1
        A += [unit, [-v for v in unit]]
        b += [1, 1]
    A += [[-1] * (n - 1), [1] * (n - 1)]
    b += [1, 1]
    out = []
    for y in enumerate_vertices(A, b):
        out.append(tuple(y) + (-sum(y, Fraction(0)),))
    return sorted(out)


def hypersimplex_vertices(n: int, r: int) -> List[Tuple[int, ...]]:
    """0/1 vectors of length n with r ones; lexicographically descending."""
    if n < 2 or not 1 <= r <= n - 1:
        raise DomainError("RANGE", f"hypersimplex needs 1 <= r <= n-1, got n={n}, r={r}", {"n": n, "r": r})
    check_budget("C(n, r)", comb(n, r), CONFIG["MAX_HYPERSIMPLEX_VERTICES"])
    out = []
    for ones in itertools.combinations(range(n), r):
        out.append(tuple(1 if k in ones else 0 for k in range(n)))
    return out


def _odd_hull_vertices(n: int) -> List[Tuple[Fraction, ...]]:
    """Vectors with k zeros, k ones and one 1/2 (n = 2k + 1)."""
    k = n // 2
    out = []
    for half in range(n):
        rest = [v for v in range(n) if v != half]
        for ones in itertools.combinations(rest, k):
            vec = [Fraction(0)] * n
            vec[half] = Fraction(1, 2)
            for v in ones:
                vec[v] = Fraction(1)
            out.append(tuple(vec))
    return out


def polar_iso_check(n: int) -> Dict:
    """Map the vertices of Ω_n° through x = (λ + 1)/2 and compare with the hypersimplex model."""
    lam_vertices = polar_vertices(n)
    mapped = {tuple((v + 1) / 2 for v in lam) for lam in lam_vertices}
    k = n // 2
    if n % 2 == 0:
        expected = {tuple(Fraction(v) for v in vec) for vec in hypersimplex_vertices(n, k)}
        label = f"Delta({n},{k})"
    else:
        expected = set(_odd_hull_vertices(n))
        label = f"Hull({n},{k})"
    passed = mapped == expected and len(mapped) == len(lam_vertices)
    if not passed:
        logger.warning(f"polar_iso_check n={n}: {len(mapped)} mapped vs {len(expected)} expected")
    return {
        "n": n,
        "iso": label,
        "vertices": len(lam_vertices),
        "passed": passed,
        "mapped": [[format_rational(v) for v in vec] for vec in sorted(mapped)],
    }
