# -*- coding: utf-8 -*-
"""
utils/polytopality.py

Is Fan(K) the normal fan of a polytope?

Every ridge of Bier(K) gives one strict wall-crossing inequality over the heights
f of the Bier vertices (f(i) on the ray through -δ_i, f(ībar) on +δ_i). Fan(K) is
a normal fan exactly when the system is feasible; a feasible f realizes the
polytope P_f = {x in H_0 : G x <= f} with G the primitive ray rows.

Provided here:
- ridge_system / wall_dependence (Λ / V / Cross shortcut and its generic check)
- solve (exact LP decision with witness or certificate), verify_witness, verify_certificate
- threshold_witness for threshold complexes
- realize_polytope (vertices of P_f with the facet-cone correspondence)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from shared.config import CONFIG
from shared.rationals import (
    column,
    dot,
    format_rational,
    matrix_to_fractions,
    parse_rational,
    primitive_integer_vector,
    to_matrix,
)
from utils.bier_fan import cone_contains, cone_of_face, delta_circuit, vertex_ray
from utils.bier_sphere import (
    LAMBDA,
    V_CONFIG,
    BierVertex,
    RidgeClass,
    cross_element,
    facets,
    ridges,
    vertices,
)
from utils.complex_core import SimplicialComplex, WeightVector, threshold_complex, vertices_of
from utils.errors import DomainError, check_budget
from utils.lp_solver import FEASIBLE, INFEASIBLE, decide_strict_feasibility

logger = logging.getLogger("polytopality")


def variable_index(v: BierVertex, n: int) -> int:
    """Column of a Bier vertex: i -> i, ībar -> n + i."""
    return v.index + n if v.dual else v.index


class HeightVector:
    """Heights on Bier vertices; vertices without an entry have height 0."""

    def __init__(self, n: int, values: Mapping[BierVertex, Fraction]):
        self.n = n
        self.values: Dict[BierVertex, Fraction] = {v: Fraction(h) for v, h in values.items()}
        for v in self.values:
            if not 0 <= v.index < n:
                raise DomainError("INVALID_INPUT", f"vertex {v.label} is not in [{n}]")

    def __getitem__(self, v: BierVertex) -> Fraction:
        return self.values.get(v, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeightVector):
            return NotImplemented
        return self.n == other.n and self.as_vector() == other.as_vector()

    def as_vector(self) -> Tuple[Fraction, ...]:
        out = [Fraction(0)] * (2 * self.n)
        for v, h in self.values.items():
            out[variable_index(v, self.n)] = h
        return tuple(out)

    def scaled(self, k) -> "HeightVector":
        k = Fraction(k)
        return HeightVector(self.n, {v: k * h for v, h in self.values.items()})

    def __add__(self, other: "HeightVector") -> "HeightVector":
        keys = set(self.values) | set(other.values)
        return HeightVector(self.n, {v: self[v] + other[v] for v in keys})

    @classmethod
    def constant(cls, K: SimplicialComplex, value=1) -> "HeightVector":
        return cls(K.n, {v: Fraction(value) for v in vertices(K)})

    @classmethod
    def from_json(cls, data: Mapping[str, object], n: int) -> "HeightVector":
        return cls(n, {BierVertex.from_label(k, n): parse_rational(v) for k, v in data.items()})

    def to_json(self) -> Dict[str, str]:
        ordered = sorted(self.values, key=lambda v: (v.dual, v.index))
        return {v.label: format_rational(self.values[v]) for v in ordered}


@dataclass(frozen=True)
class WallInequality:
    """Σ coefficients · f > 0, one per ridge; columns ordered 1..n, 1bar..nbar."""

    ridge: RidgeClass
    coefficients: Tuple[Fraction, ...]

    @property
    def key(self) -> str:
        return self.ridge.key

    def evaluate(self, f: HeightVector) -> Fraction:
        return dot(self.coefficients, f.as_vector())

    def holds(self, f: HeightVector) -> bool:
        return self.evaluate(f) > 0

    def to_text(self) -> str:
        n = self.ridge.n
        terms = []
        for k, a in enumerate(self.coefficients):
            if a == 0:
                continue
            label = BierVertex(k % n, k >= n).label
            sign = "+" if a > 0 else "-"
            mag = "" if abs(a) == 1 else f"{format_rational(abs(a))}*"
            terms.append(f"{sign} {mag}f({label})")
        text = " ".join(terms)
        return (text[2:] if text.startswith("+ ") else text) + " > 0"

    def to_json(self):
        return {"id": self.key, "tag": self.ridge.tag, "inequality": self.to_text(),
                "coefficients": [format_rational(a) for a in self.coefficients]}


def _shortcut_coefficients(K: SimplicialComplex, ridge: RidgeClass) -> List[Fraction]:
    n = K.n
    coeffs = [Fraction(0)] * (2 * n)
    co_y = vertices_of(K.full & ~ridge.y)
    x = vertices_of(ridge.x)
    if ridge.tag == LAMBDA:
        for i in [ridge.c1, ridge.c2] + x:
            coeffs[i] += 1
        for j in co_y:
            coeffs[n + j] -= 1
    elif ridge.tag == V_CONFIG:
        for j in [ridge.c1, ridge.c2] + co_y:
            coeffs[n + j] += 1
        for i in x:
            coeffs[i] -= 1
    else:
        d = cross_element(ridge, K)
        coeffs[d] += 1
        coeffs[n + d] += 1
    return coeffs


def wall_dependence(K: SimplicialComplex, ridge: RidgeClass) -> Tuple[Fraction, ...]:
    """The linear dependence among the rays of the two facets at a ridge.

    Scaled so the first crossing ray has coefficient 1; the second crossing
    coefficient must come out positive as well.
    """
    n = K.n
    c = delta_circuit(n)
    first, second = ridge.facets
    verts = sorted(set(first.vertices) | set(second.vertices), key=lambda v: (v.dual, v.index))
    rays = [vertex_ray(v, c) for v in verts]
    null = to_matrix(rays).T.nullspace()
    if len(null) != 1:
        logger.error(f"ridge {ridge.key}: {len(null)}-dimensional ray dependence")
        raise RuntimeError("rays around a ridge must have a one-dimensional dependence")
    dep = matrix_to_fractions(null[0])
    crossing = [v for v in verts if (v in first.vertices) != (v in second.vertices)]
    pos = {v: k for k, v in enumerate(verts)}
    scale = dep[pos[crossing[0]]]
    if scale == 0 or dep[pos[crossing[1]]] / scale <= 0:
        raise RuntimeError(f"ridge {ridge.key}: crossing rays do not lie on opposite sides")
    coeffs = [Fraction(0)] * (2 * n)
    for v, a in zip(verts, dep):
        coeffs[variable_index(v, n)] = a / scale
    return tuple(coeffs)


def _positively_proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    ratio = None
    for a, b in zip(u, v):
        if (a == 0) != (b == 0):
            return False
        if a != 0:
            r = b / a
            if r <= 0 or (ratio is not None and r != ratio):
                return False
            ratio = r
    return True


def ridge_system(K: SimplicialComplex, cross_check: Optional[bool] = None) -> List[WallInequality]:
    """One wall-crossing inequality per ridge of Bier(K), in ridge order."""
    ridge_list = ridges(K)
    check_budget("ridges", len(ridge_list), CONFIG["MAX_RIDGES"])
    if cross_check is None:
        cross_check = K.n <= CONFIG["CROSS_CHECK_MAX_N"]
    system = []
    for ridge in ridge_list:
        coeffs = _shortcut_coefficients(K, ridge)
        if cross_check and not _positively_proportional(coeffs, wall_dependence(K, ridge)):
            logger.error(f"ridge {ridge.key} ({ridge.tag}): shortcut disagrees with the ray dependence")
            raise RuntimeError(f"wall inequality mismatch at ridge {ridge.key}")
        system.append(WallInequality(ridge, tuple(coeffs)))
    logger.debug(f"ridge_system n={K.n} inequalities={len(system)} cross_check={cross_check}")
    return system


def verify_witness(K: SimplicialComplex, f: HeightVector, system: Optional[List[WallInequality]] = None) -> bool:
    if f.n != K.n:
        return False
    system = ridge_system(K, cross_check=False) if system is None else system
    return all(w.holds(f) for w in system)


def verify_certificate(K: SimplicialComplex, certificate: Iterable[Tuple[str, Fraction]],
                       system: Optional[List[WallInequality]] = None) -> bool:
    """Non-negative multipliers on ridge inequalities whose combination is 0 > 0."""
    system = ridge_system(K, cross_check=False) if system is None else system
    by_key = {w.key: w for w in system}
    total = [Fraction(0)] * (2 * K.n)
    seen_positive = False
    for key, mult in certificate:
        mult = Fraction(mult)
        if key not in by_key or mult < 0:
            return False
        seen_positive = seen_positive or mult > 0
        for k, a in enumerate(by_key[key].coefficients):
            total[k] += mult * a
    return seen_positive and all(v == 0 for v in total)


@dataclass
class FeasibilityResult:
    status: str
    witness: Optional[HeightVector] = None
    certificate: List[Tuple[str, Fraction]] = field(default_factory=list)
    inequalities: int = 0
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def to_json(self):
        out = {"status": self.status}
        if self.feasible:
            out["witness"] = self.witness.to_json()
        else:
            out["certificate"] = [[key, format_rational(m)] for key, m in self.certificate]
        out["inequalities"] = self.inequalities
        out["pivots"] = self.pivots
        return out


def solve(K: SimplicialComplex, max_pivots: Optional[int] = None) -> FeasibilityResult:
    """Decide whether K admits heights satisfying every wall inequality.

    Witnesses are scaled to coprime integers and only use genuine Bier vertices.
    """
    system = ridge_system(K)
    genuine = vertices(K)
    columns = [variable_index(v, K.n) for v in genuine]
    A = [[w.coefficients[k] for k in columns] for w in system]
    decision = decide_strict_feasibility(A, width=len(columns), max_pivots=max_pivots)

    if decision.status == INFEASIBLE:
        certificate = [(w.key, y) for w, y in zip(system, decision.certificate) if y != 0]
        if not verify_certificate(K, certificate, system):
            logger.error(f"solve n={K.n}: certificate failed re-verification")
            raise RuntimeError("infeasibility certificate failed re-verification")
        logger.info(f"solve n={K.n} infeasible ({len(certificate)} ridges in the certificate)")
        return FeasibilityResult(INFEASIBLE, certificate=certificate, inequalities=len(system),
                                 pivots=decision.pivots)

    ints = primitive_integer_vector(list(decision.witness))
    witness = HeightVector(K.n, {v: Fraction(h) for v, h in zip(genuine, ints)})
    if not verify_witness(K, witness, system):
        logger.error(f"solve n={K.n}: witness failed re-verification")
        raise RuntimeError("witness failed re-verification")
    logger.info(f"solve n={K.n} feasible after {decision.pivots} pivots")
    return FeasibilityResult(FEASIBLE, witness=witness, inequalities=len(system), pivots=decision.pivots)


def threshold_witness(w: WeightVector) -> HeightVector:
    """f(i) = (1 - ν) l_i and f(ībar) = ν l_i."""
    threshold_complex(w)
    values = {}
    for i, li in enumerate(w.l):
        values[BierVertex(i, False)] = (1 - w.nu) * li
        values[BierVertex(i, True)] = w.nu * li
    return HeightVector(w.n, values)


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

def realize_polytope(K: SimplicialComplex, f: HeightVector) -> Dict:
    """Vertices of P_f = {x in H_0 : <g_v, x> <= f(v)}, one per facet of Bier(K)."""
    check_budget("n", K.n, CONFIG["REALIZE_MAX_N"])
    if not verify_witness(K, f):
        raise DomainError("WITNESS_INVALID", "heights violate a wall-crossing inequality", {"witness": f.to_json()})
    n = K.n
    c = delta_circuit(n)
    genuine = vertices(K)
    rows = {v: vertex_ray(v, c) for v in genuine}

    points = []
    seen: Dict[Tuple[Fraction, ...], Dict] = {}
    for tau in facets(K):
        incident = tau.vertices
        system = to_matrix([rows[v] for v in incident] + [[1] * n])
        x = tuple(matrix_to_fractions(system.LUsolve(column([f[v] for v in incident] + [0]))))
        entry = {"facet": tau.to_json(), "point": [format_rational(v) for v in x],
                 "rays": [v.label for v in incident]}
        if x in seen:
            raise DomainError("DEGENERATE", "two facet cones give the same vertex",
                              {"facets": [seen[x]["facet"], entry["facet"]]})
        cone = cone_of_face(tau, c)
        for v in genuine:
            value = dot(rows[v], x)
            if v in incident:
                if value != f[v] or not cone_contains(cone, rows[v]):
                    raise RuntimeError(f"facet {tau.to_json()}: ray {v.label} is not tight")
            elif value == f[v]:
                raise DomainError("DEGENERATE", f"ray {v.label} is tight at the vertex of another facet cone",
                                  {"facet": entry["facet"], "ray": v.label})
            elif value > f[v]:
                logger.error(f"facet {tau.to_json()}: no strict slack on ray {v.label}")
                raise RuntimeError("normal cone of a vertex is larger than its facet cone")
        seen[x] = entry
        points.append(entry)

    return {
        "n": n,
        "vertex_count": len(points),
        "rows": [{"vertex": v.label, "ray": list(rows[v]), "height": format_rational(f[v])} for v in genuine],
        "vertices": points,
    }
