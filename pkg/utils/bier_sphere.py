# -*- coding: utf-8 -*-
"""
utils/bier_sphere.py

Faces of the Bier sphere Bier(K) = K *_Δ K°, the deleted join of K with its
Alexander dual.

A face is an ordered triple (A1, A2; B) partitioning [n] with A1 in K, A2 in K°;
B = [n] - (A1 ∪ A2). Facets have |B| = 1 and correspond to boundary pairs
(A, A + {c}); ridges have |B| = 2 and are read in interval notation (X, Y) with
X = A1 and Y = [n] - A2. The face with B = [n] is the extended empty face: it
takes part in the fan's face poset but is never listed as a proper face.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Tuple

from shared.config import CONFIG
from utils.complex_core import (
    FaceSet,
    SimplicialComplex,
    alexander_dual,
    boundary_pairs,
    labels_of,
    popcount,
    vertices_of,
)
from utils.errors import DomainError, check_budget

logger = logging.getLogger("bier_sphere")

LAMBDA = "Lambda"
V_CONFIG = "V"
CROSS = "Cross"


class BierVertex(NamedTuple):
    """Vertex i of K (``dual=False``) or vertex ī of K° (``dual=True``); 0-based index."""

    index: int
    dual: bool

    @property
    def label(self) -> str:
        return f"{self.index + 1}bar" if self.dual else str(self.index + 1)

    @classmethod
    def from_label(cls, label: str, n: int) -> "BierVertex":
        text = str(label).strip()
        dual = text.endswith("bar")
        digits = text[:-3] if dual else text
        if not digits.isdigit() or not 1 <= int(digits) <= n:
            raise DomainError("PARSE_ERROR", f"not a Bier vertex label: {label!r}")
        return cls(int(digits) - 1, dual)


@dataclass(frozen=True, order=True)
class BierFace:
    n: int
    a1: FaceSet
    a2: FaceSet

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.a1 & self.a2:
            raise DomainError("INVALID_INPUT", "A1 and A2 must be disjoint")
        if (self.a1 | self.a2) & ~full:
            raise DomainError("INVALID_INPUT", f"face is not inside [{self.n}]")

    @property
    def full(self) -> FaceSet:
        return (1 << self.n) - 1

    @property
    def b(self) -> FaceSet:
        return self.full & ~(self.a1 | self.a2)

    @property
    def dim(self) -> int:
        return popcount(self.a1) + popcount(self.a2) - 1

    @property
    def is_facet(self) -> bool:
        return popcount(self.b) == 1

    @property
    def is_empty_face(self) -> bool:
        return self.a1 == 0 and self.a2 == 0

    @property
    def apex(self) -> int:
        """The vertex ν of a facet (A1, A2; {ν})."""
        if not self.is_facet:
            raise DomainError("NOT_FACET", "only facets have a single free vertex")
        return vertices_of(self.b)[0]

    @property
    def vertices(self) -> List[BierVertex]:
        return [BierVertex(i, False) for i in vertices_of(self.a1)] + [
            BierVertex(j, True) for j in vertices_of(self.a2)
        ]

    def swapped(self) -> "BierFace":
        return BierFace(self.n, self.a2, self.a1)

    def to_interval(self) -> "IntervalFace":
        return IntervalFace(self.n, self.a1, self.full & ~self.a2)

    def to_json(self) -> Dict[str, List[int]]:
        return {"a1": labels_of(self.a1), "a2": labels_of(self.a2), "b": labels_of(self.b)}


def empty_face(n: int) -> BierFace:
    return BierFace(n, 0, 0)


@dataclass(frozen=True, order=True)
class IntervalFace:
    """Interval notation (X, Y): X in K, Y not in K, X ⊊ Y."""

    n: int
    x: FaceSet
    y: FaceSet

    def to_face(self) -> BierFace:
        return BierFace(self.n, self.x, ((1 << self.n) - 1) & ~self.y)


@dataclass(frozen=True)
class RidgeClass:
    tag: str
    n: int
    x: FaceSet
    y: FaceSet
    c1: int
    c2: int
    facets: Tuple[BierFace, BierFace] = field(compare=False)

    @property
    def face(self) -> BierFace:
        return IntervalFace(self.n, self.x, self.y).to_face()

    @property
    def key(self) -> str:
        """Stable id "X|Y" with 1-based labels, e.g. "1|1,2,3"."""
        return ",".join(map(str, labels_of(self.x))) + "|" + ",".join(map(str, labels_of(self.y)))

    def to_json(self):
        return {
            "id": self.key,
            "tag": self.tag,
            "x": labels_of(self.x),
            "y": labels_of(self.y),
            "c": [self.c1 + 1, self.c2 + 1],
            "facets": [f.to_json() for f in self.facets],
        }


def _in_dual(K: SimplicialComplex, mask: FaceSet) -> bool:
    return not K.table[K.full & ~mask]


def is_face(K: SimplicialComplex, a1: FaceSet, a2: FaceSet) -> bool:
    """Proper-face test; the extended empty face (∅, ∅) answers False."""
    if a1 == 0 and a2 == 0:
        return False
    if a1 & a2 or (a1 | a2) & ~K.full or (a1 | a2) == K.full:
        return False
    return bool(K.table[a1]) and _in_dual(K, a2)


def vertices(K: SimplicialComplex) -> List[BierVertex]:
    """Vertices of Bier(K): i for {i} in K, ī for {i} in K°."""
    out = [BierVertex(i, False) for i in range(K.n) if K.table[1 << i]]
    out += [BierVertex(i, True) for i in range(K.n) if _in_dual(K, 1 << i)]
    return out


def _submasks(mask: FaceSet) -> Iterator[FaceSet]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def faces(K: SimplicialComplex, include_empty: bool = False) -> List[BierFace]:
    """All faces by enumerating disjoint pairs (A1, A2); sorted by (A1, A2)."""
    check_budget("n", K.n, CONFIG["FVECTOR_MAX_N"])
    out = []
    for a1 in K.faces:
        for a2 in _submasks(K.full & ~a1):
            if a1 == 0 and a2 == 0:
                if include_empty:
                    out.append(empty_face(K.n))
                continue
            if _in_dual(K, a2):
                out.append(BierFace(K.n, a1, a2))
    out.sort()
    logger.debug(f"faces n={K.n} count={len(out)}")
    return out


def facets(K: SimplicialComplex) -> List[BierFace]:
    """Facets (A, [n] - (A + {c}); {c}) for every boundary pair (A, c)."""
    out = [BierFace(K.n, a, K.full & ~(a | (1 << c))) for a, c in boundary_pairs(K)]
    out.sort()
    return out


def f_vector(K: SimplicialComplex) -> List[int]:
    """(f_0, ..., f_{n-2}); the last entry is the facet count."""
    counts = [0] * (K.n - 1)
    for face in faces(K):
        counts[face.dim] += 1
    return counts


def euler_characteristic(fv: List[int]) -> int:
    return sum(f if i % 2 == 0 else -f for i, f in enumerate(fv))


def sphere_euler_characteristic(n: int) -> int:
    """χ(S^{n-2}) = 1 + (-1)^{n-2}."""
    return 1 + (-1) ** (n - 2)


def ridges(K: SimplicialComplex) -> List[RidgeClass]:
    """Every ridge (X, Y), |Y - X| = 2, classified Λ / V / Cross with its two facets."""
    full = K.full
    out = []
    for x in K.faces:
        free = vertices_of(full & ~x)
        for i, c1 in enumerate(free):
            for c2 in free[i + 1:]:
                y = x | (1 << c1) | (1 << c2)
                if K.table[y] or (x == 0 and y == full):
                    continue
                co_y = full & ~y
                in1 = bool(K.table[x | (1 << c1)])
                in2 = bool(K.table[x | (1 << c2)])
                if in1 and in2:
                    tag = LAMBDA
                    pair = (
                        BierFace(K.n, x | (1 << c1), co_y),
                        BierFace(K.n, x | (1 << c2), co_y),
                    )
                elif not in1 and not in2:
                    tag = V_CONFIG
                    pair = (
                        BierFace(K.n, x, co_y | (1 << c2)),
                        BierFace(K.n, x, co_y | (1 << c1)),
                    )
                else:
                    tag = CROSS
                    d = c1 if in1 else c2
                    pair = (
                        BierFace(K.n, x | (1 << d), co_y),
                        BierFace(K.n, x, co_y | (1 << d)),
                    )
                out.append(RidgeClass(tag, K.n, x, y, c1, c2, pair))
    out.sort(key=lambda r: (r.x, r.y))
    logger.debug(f"ridges n={K.n} count={len(out)}")
    return out


def cross_element(ridge: RidgeClass, K: SimplicialComplex) -> int:
    """For a Cross ridge, the element d in {c1, c2} with X + {d} in K."""
    if ridge.tag != CROSS:
        raise DomainError("INVALID_INPUT", "only Cross ridges have a constrained element")
    return ridge.c1 if K.table[ridge.x | (1 << ridge.c1)] else ridge.c2


def dual_facet_map(K: SimplicialComplex) -> Dict[BierFace, BierFace]:
    """(A1, A2; B) -> (A2, A1; B), a bijection facets(K) -> facets(K°)."""
    mapping = {tau: tau.swapped() for tau in facets(K)}
    if sorted(mapping.values()) != facets(alexander_dual(K)):
        logger.error(f"dual facet map is not onto facets of the dual for n={K.n}")
        raise RuntimeError("swapping A1 and A2 did not produce the facets of Bier(K°)")
    return mapping
