# -*- coding: utf-8 -*-
"""
utils/bier_fan.py

The canonical (Bier) fan Fan(K) in H_0 = {x in R^n : x_1 + ... + x_n = 0}.

Each face τ = (A1, A2; B) of Bier(K) gives the preposet generated by
A1×B ∪ B×B ∪ B×A2 and, through the preposet / braid cone dictionary, the cone
{x in H_0 : x_i <= x_j for i ≼ j}. Facet cones are simplicial with rays through
-δ_i (i in A1) and +δ_j (j in A2), δ_i = e_i - (1/n)(e_1 + ... + e_n).

Cones remember the circuit they are expressed in: constraints apply to the
circuit coordinates λ of a point (for the default δ circuit, λ = x).
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from shared.config import CONFIG
from shared.rationals import (
    column,
    format_rational,
    matrix_to_fractions,
    primitive_integer_vector,
    to_matrix,
)
from utils.bier_sphere import BierFace, BierVertex, facets, faces
from utils.complex_core import SimplicialComplex, from_facets, mask_of, vertices_of
from utils.errors import DomainError, check_budget
from utils.sampling import make_rng, random_cone_point, random_h0_point, sample_pairs

logger = logging.getLogger("bier_fan")

RationalVector = Tuple[Fraction, ...]


def require_h0(x: Sequence) -> RationalVector:
    """Exact coordinates of ``x``; raises NOT_IN_H0 when they do not sum to 0."""
    vec = tuple(Fraction(v) for v in x)
    if sum(vec) != 0:
        raise DomainError("NOT_IN_H0", f"coordinate sum is {format_rational(sum(vec))}, expected 0",
                          {"sum": format_rational(sum(vec))})
    return vec


# ---------------------------------------------------------------------------
# circuits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Circuit:
    """n zero-sum vectors of R^n summing to 0, any n-1 of them independent."""

    vectors: Tuple[RationalVector, ...]
    is_delta: bool = field(default=False, compare=False)

    def __post_init__(self):
        vectors = tuple(tuple(Fraction(v) for v in u) for u in self.vectors)
        object.__setattr__(self, "vectors", vectors)
        n = len(vectors)
        if n < 2 or any(len(u) != n for u in vectors):
            raise DomainError("INVALID_INPUT", "a circuit needs n vectors of length n, n >= 2")
        if any(sum(u) != 0 for u in vectors):
            raise DomainError("NOT_IN_H0", "circuit vectors must have coordinate sum 0")
        if any(sum(u[k] for u in vectors) != 0 for k in range(n)):
            raise DomainError("INVALID_INPUT", "circuit vectors must sum to 0")
        if not self.is_delta and to_matrix(vectors[:-1]).rank() != n - 1:
            raise DomainError("INVALID_INPUT", "circuit vectors do not span H_0")

    @property
    def n(self) -> int:
        return len(self.vectors)

    def coordinates(self, x: Sequence) -> RationalVector:
        """The unique λ with Σλ_i = 0 and Σ λ_i u_i = x."""
        x = tuple(Fraction(v) for v in x)
        if self.is_delta:
            return require_h0(x)
        n = self.n
        system = to_matrix([[self.vectors[i][k] for i in range(n)] for k in range(n)] + [[1] * n])
        try:
            solution, params = system.gauss_jordan_solve(column(list(x) + [0]))
        except ValueError:
            raise DomainError("NOT_IN_SPAN", "point is not in the span of the circuit")
        return tuple(matrix_to_fractions(solution))

    def combine(self, lam: Sequence) -> RationalVector:
        """Σ λ_i u_i."""
        n = self.n
        return tuple(sum((Fraction(lam[i]) * self.vectors[i][k] for i in range(n)), Fraction(0))
                     for k in range(n))

    def to_json(self):
        return [[format_rational(v) for v in u] for u in self.vectors]


@lru_cache(maxsize=None)
def delta_circuit(n: int) -> Circuit:
    vectors = tuple(
        tuple(Fraction(n - 1, n) if k == i else Fraction(-1, n) for k in range(n)) for i in range(n)
    )
    return Circuit(vectors, is_delta=True)


# ---------------------------------------------------------------------------
# preposets and braid cones
# ---------------------------------------------------------------------------

class Preposet:
    """Reflexive-transitive closure of a relation on {0, ..., n-1}."""

    def __init__(self, n: int, pairs: Sequence[Tuple[int, int]]):
        self.n = n
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(pairs)
        self.closure = nx.transitive_closure(graph, reflexive=True)
        self.relation = frozenset(self.closure.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Preposet):
            return NotImplemented
        return self.n == other.n and self.relation == other.relation

    def __hash__(self) -> int:
        return hash((self.n, self.relation))

    def le(self, i: int, j: int) -> bool:
        return (i, j) in self.relation

    def contains(self, other: "Preposet") -> bool:
        """Every relation of ``other`` holds here (``self`` is a contraction of ``other``)."""
        return other.relation <= self.relation

    def equivalence_classes(self) -> List[Tuple[int, ...]]:
        classes = [tuple(sorted(c)) for c in nx.strongly_connected_components(self.closure)]
        return sorted(classes)

    def is_poset(self) -> bool:
        return all(len(c) == 1 for c in self.equivalence_classes())

    def quotient_hasse(self) -> nx.DiGraph:
        """Hasse diagram on class representatives (the smallest element of each class)."""
        rep = {v: c[0] for c in self.equivalence_classes() for v in c}
        dag = nx.DiGraph()
        dag.add_nodes_from(sorted(set(rep.values())))
        dag.add_edges_from((rep[i], rep[j]) for i, j in self.relation if rep[i] != rep[j])
        return nx.transitive_reduction(dag)

    def is_tree_poset(self) -> bool:
        """A poset whose Hasse diagram is a spanning tree."""
        if not self.is_poset():
            return False
        return self.n == 1 or nx.is_tree(self.quotient_hasse().to_undirected())

    def non_leaves(self) -> List[int]:
        hasse = self.quotient_hasse().to_undirected()
        return sorted(v for v in hasse.nodes if hasse.degree(v) > 1)

    def to_json(self):
        return sorted([i + 1, j + 1] for i, j in self.relation if i != j)


def preposet_of_face(tau: BierFace) -> Preposet:
    a1, b, a2 = vertices_of(tau.a1), vertices_of(tau.b), vertices_of(tau.a2)
    pairs = [(i, v) for i in a1 for v in b]
    pairs += [(u, v) for u in b for v in b]
    pairs += [(v, j) for v in b for j in a2]
    return Preposet(tau.n, pairs)


@dataclass(frozen=True)
class BraidCone:
    """{x in H_0 : λ_i <= λ_j for (i, j) in le_pairs, blocks of eq_classes equal}."""

    n: int
    le_pairs: Tuple[Tuple[int, int], ...]
    eq_classes: Tuple[Tuple[int, ...], ...]
    circuit: Circuit = field(compare=False)

    def holds(self, lam: Sequence[Fraction]) -> bool:
        for block in self.eq_classes:
            if any(lam[v] != lam[block[0]] for v in block[1:]):
                return False
        return all(lam[i] <= lam[j] for i, j in self.le_pairs)

    @property
    def is_zero_cone(self) -> bool:
        return any(len(block) == self.n for block in self.eq_classes)

    def to_json(self):
        return {
            "le": [[i + 1, j + 1] for i, j in self.le_pairs],
            "eq": [[v + 1 for v in block] for block in self.eq_classes],
        }


def cone_of_face(tau: BierFace, c: Optional[Circuit] = None) -> BraidCone:
    """Braid cone of the face's preposet: Hasse relations between classes, classes as equalities."""
    c = c or delta_circuit(tau.n)
    poset = preposet_of_face(tau)
    le_pairs = tuple(sorted(poset.quotient_hasse().edges))
    eq_classes = tuple(block for block in poset.equivalence_classes() if len(block) > 1)
    return BraidCone(tau.n, le_pairs, eq_classes, c)


def cone_contains(cone: BraidCone, x: Sequence) -> bool:
    """Exact membership of a point of H_0."""
    x = require_h0(x)
    return cone.holds(cone.circuit.coordinates(x))


def cone_intersection(tau: BierFace, other: BierFace) -> BierFace:
    """Cone(τ) ∩ Cone(τ') = Cone(τ'') with A1'' = A1 ∩ A1', A2'' = A2 ∩ A2'."""
    if tau.n != other.n:
        raise DomainError("INVALID_INPUT", "faces live on different ground sets")
    return BierFace(tau.n, tau.a1 & other.a1, tau.a2 & other.a2)


# ---------------------------------------------------------------------------
# permutations and rays
# ---------------------------------------------------------------------------

def _check_permutation(perm: Sequence[int], n: int) -> Tuple[int, ...]:
    perm = tuple(int(v) for v in perm)
    if sorted(perm) != list(range(n)):
        raise DomainError("INVALID_INPUT", f"not a permutation of [{n}]")
    return perm


def facet_of_permutation(K: SimplicialComplex, perm: Sequence[int]) -> BierFace:
    """The facet whose cone contains C_π: cut π at the first prefix outside K."""
    perm = _check_permutation(perm, K.n)
    prefix = 0
    for p, v in enumerate(perm):
        if not K.table[prefix | (1 << v)]:
            return BierFace(K.n, prefix, mask_of(perm[p + 1:]))
        prefix |= 1 << v
    raise RuntimeError("[n] is in K; the complex is not proper")


def permutation_cone_generators(perm: Sequence[int]) -> List[Tuple[int, ...]]:
    """Rays of C_π: the first k entries of π at -(n-k), the rest at k (k = 1..n-1)."""
    n = len(perm)
    rays = []
    for k in range(1, n):
        ray = [0] * n
        for pos, v in enumerate(perm):
            ray[v] = -(n - k) if pos < k else k
        rays.append(tuple(ray))
    return rays


def permutation_interior_point(perm: Sequence[int]) -> Tuple[int, ...]:
    """Sum of the generators: strictly increasing along π."""
    gens = permutation_cone_generators(perm)
    return tuple(sum(g[k] for g in gens) for k in range(len(perm)))


def vertex_ray(v: BierVertex, c: Circuit) -> Tuple[int, ...]:
    """Primitive integer ray of a Bier vertex: -u_i for i, +u_j for j̄."""
    u = c.vectors[v.index]
    return primitive_integer_vector([x if v.dual else -x for x in u])


def face_rays(tau: BierFace, c: Optional[Circuit] = None) -> List[Tuple[int, ...]]:
    """Rays of Cone(τ) for any face: A1 rays first, then A2, each ascending."""
    c = c or delta_circuit(tau.n)
    return [vertex_ray(v, c) for v in tau.vertices]


def facet_rays(tau: BierFace, c: Optional[Circuit] = None) -> List[Tuple[int, ...]]:
    if not tau.is_facet:
        raise DomainError("NOT_FACET", f"|B| = {len(vertices_of(tau.b))}, expected 1", tau.to_json())
    return face_rays(tau, c)


def rays_are_independent(rays: Sequence[Sequence]) -> bool:
    return not rays or to_matrix(rays).rank() == len(rays)


def _simplicial_check(tau: BierFace, c: Circuit) -> bool:
    """Rays lie in the cone, are independent, and each Hasse constraint is slack on exactly one ray."""
    cone = cone_of_face(tau, c)
    rays = facet_rays(tau, c)
    if len(rays) != tau.n - 1 or not rays_are_independent(rays):
        return False
    lams = [c.coordinates(r) for r in rays]
    if not all(cone.holds(lam) for lam in lams):
        return False
    if len(cone.le_pairs) != tau.n - 1 or cone.eq_classes:
        return False
    for i, j in cone.le_pairs:
        slack = [lam[j] - lam[i] for lam in lams]
        if sum(1 for s in slack if s != 0) != 1:
            return False
    return True


def complex_from_fan(n: int, preposets: Sequence[Preposet]) -> SimplicialComplex:
    """Recover K from the facet preposets: A1 is everything strictly below the star center.

    Needs n >= 3; for n = 2 a complex and its dual have the same fan.
    """
    if n < 3:
        raise DomainError("RANGE", "a fan determines its complex only for n >= 3", {"n": n})
    generators = []
    for poset in preposets:
        centers = poset.non_leaves()
        if len(centers) != 1 or not poset.is_tree_poset():
            raise DomainError("INVALID_INPUT", "preposet is not a facet preposet", {"relation": poset.to_json()})
        center = centers[0]
        generators.append(mask_of(u for u in range(n) if u != center and poset.le(u, center)))
    return from_facets(n, generators)


# ---------------------------------------------------------------------------
# completeness check
# ---------------------------------------------------------------------------

@dataclass
class FanReport:
    n: int
    passed: bool = True
    permutations: int = 0
    facets: int = 0
    facet_hits: Dict[str, int] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    failures: List[Dict] = field(default_factory=list)

    def fail(self, check: str, witness: Dict) -> None:
        self.passed = False
        self.checks[check] = False
        if len(self.failures) < 20:
            self.failures.append({"check": check, **witness})

    def to_json(self):
        return {
            "n": self.n,
            "passed": self.passed,
            "permutations": self.permutations,
            "facets": self.facets,
            "facet_hits": self.facet_hits,
            "checks": self.checks,
            "failures": self.failures,
        }


def _face_key(tau: BierFace) -> str:
    j = tau.to_json()
    return f"{j['a1']}|{j['a2']}|{j['b']}"


def verify_fan(K: SimplicialComplex, seed: Optional[int] = None, pair_samples: Optional[int] = None,
               point_samples: Optional[int] = None, c: Optional[Circuit] = None) -> FanReport:
    """Check that Fan(K) is a complete simplicial fan refined by the braid fan."""
    n = K.n
    check_budget("n", n, CONFIG["FAN_MAX_N"])
    c = c or delta_circuit(n)
    rng = make_rng(seed)
    pair_samples = CONFIG["FAN_SAMPLE_PAIRS"] if pair_samples is None else pair_samples
    point_samples = CONFIG["FAN_SAMPLE_POINTS"] if point_samples is None else point_samples

    report = FanReport(n=n)
    report.checks = {"permutation_cover": True, "intersection_law": True, "simplicial": True,
                     "tree_posets": True, "faithful": True}
    facet_list = facets(K)
    report.facets = len(facet_list)
    cones = {tau: cone_of_face(tau, c) for tau in facet_list}
    hits = {tau: 0 for tau in facet_list}

    for perm in itertools.permutations(range(n)):
        report.permutations += 1
        tau = facet_of_permutation(K, perm)
        gens = [c.combine(g) for g in permutation_cone_generators(perm)]
        if not all(cone_contains(cones[tau], g) for g in gens):
            report.fail("permutation_cover", {"permutation": [v + 1 for v in perm], "facet": tau.to_json()})
        interior = c.combine(permutation_interior_point(perm))
        owners = [t for t in facet_list if cone_contains(cones[t], interior)]
        if owners != [tau]:
            report.fail("permutation_cover", {"permutation": [v + 1 for v in perm],
                                              "owners": [t.to_json() for t in owners]})
        hits[tau] += 1
    report.facet_hits = {_face_key(t): h for t, h in hits.items()}
    if any(h == 0 for h in hits.values()):
        report.fail("permutation_cover", {"unhit_facets": [t.to_json() for t, h in hits.items() if h == 0]})

    for tau in facet_list:
        if not _simplicial_check(tau, c):
            report.fail("simplicial", {"facet": tau.to_json()})
        poset = preposet_of_face(tau)
        if not poset.is_tree_poset() or (n > 2 and poset.non_leaves() != [tau.apex]):
            report.fail("tree_posets", {"facet": tau.to_json()})

    all_faces = faces(K, include_empty=True)
    for tau, other in sample_pairs(all_faces, pair_samples, rng):
        meet = cone_intersection(tau, other)
        cone_a, cone_b, cone_m = cone_of_face(tau, c), cone_of_face(other, c), cone_of_face(meet, c)
        if preposet_of_face(meet) != _joined(tau, other):
            report.fail("intersection_law", {"faces": [tau.to_json(), other.to_json()], "reason": "closure"})
        for k in range(point_samples):
            source = (tau, other, meet, None)[k % 4]
            if source is None:
                x = random_h0_point(n, rng)
            else:
                x = random_cone_point(face_rays(source, c), n, rng)
            joint = cone_contains(cone_a, x) and cone_contains(cone_b, x)
            if joint != cone_contains(cone_m, x):
                report.fail("intersection_law", {"faces": [tau.to_json(), other.to_json()],
                                                 "point": [format_rational(v) for v in x]})

    # n = 2: K and its dual share one fan, so K is only recoverable from n = 3 on
    if n > 2 and complex_from_fan(n, [preposet_of_face(t) for t in facet_list]) != K:
        report.fail("faithful", {})
    logger.info(f"verify_fan n={n} facets={report.facets} passed={report.passed}")
    return report


def _joined(tau: BierFace, other: BierFace) -> Preposet:
    """Transitive closure of ≼_τ ∪ ≼_τ'."""
    pairs = list(preposet_of_face(tau).relation | preposet_of_face(other).relation)
    return Preposet(tau.n, pairs)
