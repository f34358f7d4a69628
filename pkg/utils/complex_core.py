# -*- coding: utf-8 -*-
"""
utils/complex_core.py

Proper simplicial complexes on the ground set [n] = {1, ..., n}.

Faces are n-bit masks (vertex i <-> bit i-1). A complex stores the full 2^n
membership table as a read-only numpy boolean array, so membership is O(1) and
the Alexander dual is a reversal of that array (the complement of a mask S is
``full - S``). Vertices are 0-based inside the library and 1-based in JSON.

Provided here:
- SimplicialComplex / GroundSet / WeightVector value types
- from_facets, alexander_dual, minimal_nonfaces, m_vector, is_balanced
- threshold_complex (with the dual threshold identity checked internally)
- skeleton / boundary / trivial complexes, with_face (adding a minimal non-face)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from shared.config import CONFIG
from utils.errors import BudgetError, DomainError

logger = logging.getLogger("complex_core")

FaceSet = int


# ---------------------------------------------------------------------------
# bitmask helpers
# ---------------------------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> FaceSet:
    """Bitmask of 0-based vertices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: FaceSet) -> List[int]:
    """0-based vertices of ``mask`` in ascending order."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask: FaceSet) -> int:
    return bin(mask).count("1")


def mask_from_labels(labels: Iterable[int], n: int) -> FaceSet:
    """Bitmask of 1-based vertex labels, validated against [n]."""
    mask = 0
    for label in labels:
        if isinstance(label, bool) or not isinstance(label, int) or not 1 <= label <= n:
            raise DomainError("INVALID_INPUT", f"vertex {label!r} is not in [{n}]", {"n": n})
        mask |= 1 << (label - 1)
    return mask


def labels_of(mask: FaceSet) -> List[int]:
    """1-based labels of ``mask``; the JSON form of a FaceSet."""
    return [v + 1 for v in vertices_of(mask)]


@lru_cache(maxsize=None)
def all_masks(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    masks.setflags(write=False)
    return masks


@lru_cache(maxsize=None)
def mask_sizes(n: int) -> np.ndarray:
    """Popcount of every mask in [0, 2^n)."""
    masks = all_masks(n)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        sizes += (masks >> b) & 1
    sizes.setflags(write=False)
    return sizes


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroundSet:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("EMPTY_GROUND", f"ground set needs n >= 2, got {self.n}", {"n": self.n})
        if self.n > CONFIG["MAX_N"]:
            raise BudgetError(f"n={self.n} exceeds MAX_N={CONFIG['MAX_N']}", {"n": self.n})

    @property
    def full(self) -> FaceSet:
        return (1 << self.n) - 1


class SimplicialComplex:
    """A proper simplicial complex: downward closed, contains the empty set, misses [n]."""

    def __init__(self, n: int, table: np.ndarray, validate: bool = True):
        self.ground = GroundSet(n)
        table = np.ascontiguousarray(table, dtype=bool)
        if table.shape != (1 << n,):
            raise DomainError("INVALID_INPUT", f"membership table must have length 2^{n}")
        table.setflags(write=False)
        self.table = table
        if validate:
            self._validate()

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> FaceSet:
        return self.ground.full

    def _validate(self):
        if not self.table[0]:
            raise DomainError("INVALID_INPUT", "the empty set must be a face")
        if self.table[self.full]:
            raise DomainError("FULL_COMPLEX", "[n] is a face; the complex is not proper", {"n": self.n})
        masks = all_masks(self.n)
        for b in range(self.n):
            bit = 1 << b
            with_bit = masks[(masks & bit) != 0]
            if np.any(self.table[with_bit] & ~self.table[with_bit ^ bit]):
                raise DomainError("INVALID_INPUT", "membership table is not downward closed")

    def __contains__(self, mask: FaceSet) -> bool:
        return bool(self.table[mask])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={[labels_of(f) for f in self.facets]})"

    @cached_property
    def faces(self) -> List[FaceSet]:
        """All faces, ascending by mask (the empty face first)."""
        return [int(m) for m in np.nonzero(self.table)[0]]

    @cached_property
    def facets(self) -> List[FaceSet]:
        """Maximal faces, ascending by mask."""
        masks = all_masks(self.n)
        maximal = self.table.copy()
        for b in range(self.n):
            bit = 1 << b
            without = masks[(masks & bit) == 0]
            maximal[without] &= ~self.table[without | bit]
        return [int(m) for m in np.nonzero(maximal)[0]]

    @cached_property
    def vertices(self) -> List[int]:
        """0-based vertices v with {v} in K."""
        return [v for v in range(self.n) if self.table[1 << v]]

    def to_json(self):
        return {"n": self.n, "facets": [labels_of(f) for f in self.facets]}


@dataclass(frozen=True)
class WeightVector:
    """Positive weights l (summing to 1) and a threshold 0 < nu < 1."""

    l: Tuple[Fraction, ...]
    nu: Fraction

    def __post_init__(self):
        l = tuple(Fraction(v) for v in self.l)
        nu = Fraction(self.nu)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "nu", nu)
        GroundSet(len(l))
        if any(v <= 0 for v in l):
            raise DomainError("INVALID_INPUT", "weights must be strictly positive")
        if sum(l) != 1:
            raise DomainError("NOT_NORMALIZED", f"weights sum to {sum(l)}, expected 1", {"sum": str(sum(l))})
        if not 0 < nu < 1:
            raise DomainError("RANGE", f"threshold nu={nu} must satisfy 0 < nu < 1")

    @property
    def n(self) -> int:
        return len(self.l)

    def measure(self, mask: FaceSet) -> Fraction:
        return sum((self.l[v] for v in vertices_of(mask)), Fraction(0))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def _closure_table(n: int, generators: Sequence[FaceSet]) -> np.ndarray:
    """Downward closure of ``generators`` plus the empty set (superset-OR sweep)."""
    masks = all_masks(n)
    table = np.zeros(1 << n, dtype=bool)
    table[0] = True
    if generators:
        table[np.array(generators, dtype=np.int64)] = True
    for b in range(n):
        bit = 1 << b
        with_bit = masks[(masks & bit) != 0]
        table[with_bit ^ bit] |= table[with_bit]
    return table


def from_facets(ground: Union[GroundSet, int], facets: Sequence[FaceSet]) -> SimplicialComplex:
    """Downward closure of ``facets`` (need not be maximal) together with the empty set."""
    if not isinstance(ground, GroundSet):
        ground = GroundSet(ground)
    for f in facets:
        if f < 0 or f & ~ground.full:
            raise DomainError("INVALID_INPUT", f"face mask {f} is not a subset of [{ground.n}]")
        if f == ground.full:
            raise DomainError("FULL_COMPLEX", "a listed facet equals [n]", {"n": ground.n})
    table = _closure_table(ground.n, list(facets))
    logger.debug(f"from_facets n={ground.n} generators={len(facets)} faces={int(table.sum())}")
    return SimplicialComplex(ground.n, table, validate=False)


def from_labels(n: int, facets: Sequence[Sequence[int]]) -> SimplicialComplex:
    """``from_facets`` with 1-based vertex labels, e.g. ``from_labels(3, [[1, 2], [3]])``."""
    GroundSet(n)
    return from_facets(n, [mask_from_labels(f, n) for f in facets])


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """S is in the dual iff [n] - S is not in K."""
    return SimplicialComplex(K.n, ~K.table[::-1], validate=False)


def minimal_nonfaces(K: SimplicialComplex) -> List[FaceSet]:
    """Non-faces all of whose facets-by-one-vertex are faces, ascending by mask."""
    masks = all_masks(K.n)
    minimal = ~K.table
    for b in range(K.n):
        bit = 1 << b
        sel = (masks & bit) != 0
        minimal[sel] &= K.table[masks[sel] ^ bit]
    return [int(m) for m in np.nonzero(minimal)[0]]


def m_vector(K: SimplicialComplex) -> List[int]:
    """m_i = |{S in K : S + {i} not in K}|."""
    masks = all_masks(K.n)
    out = []
    for b in range(K.n):
        bit = 1 << b
        without = masks[(masks & bit) == 0]
        out.append(int(np.count_nonzero(K.table[without] & ~K.table[without | bit])))
    return out


def boundary_pairs(K: SimplicialComplex) -> List[Tuple[FaceSet, int]]:
    """Pairs (A, c) with A in K, c not in A and A + {c} not in K; sorted by (A, c)."""
    pairs = []
    for a in K.faces:
        for c in range(K.n):
            bit = 1 << c
            if not a & bit and not K.table[a | bit]:
                pairs.append((a, c))
    return pairs


def boundary_simplices(K: SimplicialComplex) -> List[FaceSet]:
    """Faces A admitting some c with A + {c} outside K."""
    return sorted({a for a, _ in boundary_pairs(K)})


def boundary_nonsimplices(K: SimplicialComplex) -> List[FaceSet]:
    """Non-faces B admitting some c in B with B - {c} in K."""
    return sorted({a | (1 << c) for a, c in boundary_pairs(K)})


def skeleton_complex(n: int, m: int) -> SimplicialComplex:
    """All subsets of [n] of size at most m (0 <= m <= n-1)."""
    GroundSet(n)
    if not 0 <= m <= n - 1:
        raise DomainError("RANGE", f"skeleton size m={m} must satisfy 0 <= m <= n-1")
    return SimplicialComplex(n, mask_sizes(n) <= m, validate=False)


def boundary_complex(n: int) -> SimplicialComplex:
    """The boundary of the simplex, 2^[n] minus [n]."""
    return skeleton_complex(n, n - 1)


def trivial_complex(n: int) -> SimplicialComplex:
    """The complex {∅}."""
    return skeleton_complex(n, 0)


def is_balanced(K: SimplicialComplex) -> bool:
    """Odd n = 2m+1: K is the m-skeleton; even n = 2m: between the (m-1)- and m-skeleta."""
    sizes = mask_sizes(K.n)
    m = K.n // 2
    if K.n % 2:
        return bool(np.array_equal(K.table, sizes <= m))
    lower = sizes <= m - 1
    upper = sizes <= m
    return bool(np.all(K.table[lower]) and not np.any(K.table[~upper]))


def with_face(K: SimplicialComplex, B: FaceSet) -> SimplicialComplex:
    """K ∪ {B} for a minimal non-face B."""
    if B == K.full:
        raise DomainError("FULL_COMPLEX", "adding [n] makes the complex improper", {"n": K.n})
    if B in K or any(B & (1 << v) and not K.table[B ^ (1 << v)] for v in range(K.n)):
        raise DomainError("NOT_MINIMAL_NONFACE", f"{labels_of(B)} is not a minimal non-face",
                          {"face": labels_of(B)})
    table = K.table.copy()
    table[B] = True
    return SimplicialComplex(K.n, table, validate=False)


def _subset_measures(w: WeightVector) -> Tuple[np.ndarray, int, int]:
    """Integer subset sums of the weights over a common denominator D, with nu*D and D."""
    den = lcm(*(v.denominator for v in w.l), w.nu.denominator)
    ints = [int(v * den) for v in w.l]
    dtype = np.int64 if den < (1 << 62) else object
    masks = all_masks(w.n)
    sums = np.zeros(1 << w.n, dtype=dtype)
    for b, li in enumerate(ints):
        sums[(masks & (1 << b)) != 0] += li
    return sums, int(w.nu * den), den


def threshold_complex(w: WeightVector) -> SimplicialComplex:
    """T_{mu_L < nu} = {I : sum of l_i over I < nu}."""
    sums, nu, den = _subset_measures(w)
    ties = np.nonzero(sums == nu)[0]
    if len(ties):
        tie = int(ties[0])
        raise DomainError("NOT_GENERIC", f"subset {labels_of(tie)} has weight exactly nu",
                          {"subset": labels_of(tie)})
    K = SimplicialComplex(w.n, sums < nu, validate=False)
    dual_threshold = sums < den - nu
    if not np.array_equal(alexander_dual(K).table, dual_threshold):
        logger.error(f"dual threshold identity failed for l={w.l} nu={w.nu}")
        raise RuntimeError("Alexander dual of a threshold complex is not T_{mu < 1 - nu}")
    return K


def is_threshold_realized(K: SimplicialComplex, w: WeightVector) -> bool:
    """True when ``w`` is generic and its threshold complex is exactly K."""
    if w.n != K.n:
        return False
    try:
        return threshold_complex(w) == K
    except DomainError:
        return False
