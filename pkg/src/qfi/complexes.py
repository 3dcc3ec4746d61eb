"""Facet and Stanley-Reisner complexes, f-vectors, vertex covers and height."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import MonomialIdeal, from_mask, sort_key, to_mask


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on vertices 1..n given by its facets.

    Facets are normalized to the inclusion-maximal sets in canonical order.
    The complex ``{∅}`` (every variable lies in the ideal) is represented by
    the single empty facet and has dimension -1.
    """

    n: int
    facets: tuple

    def __post_init__(self):
        masks = sorted({to_mask(f) for f in self.facets}, key=lambda m: -bin(m).count("1"))
        maximal: list[int] = []
        for m in masks:
            if not any(m & k == m for k in maximal):
                maximal.append(m)
        facets = sorted((from_mask(m) for m in maximal), key=sort_key)
        if not facets:
            raise ValueError("the void complex is not modeled")
        object.__setattr__(self, "facets", tuple(facets))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}


@dataclass(frozen=True)
class FVector:
    """Face counts ``(f_{-1}, f_0, ..., f_d)``; ``f(i)`` zero-pads past d."""

    entries: tuple

    min_index = -1

    def f(self, i: int) -> int:
        k = i + 1
        if k < 0:
            return 0
        return self.entries[k] if k < len(self.entries) else 0

    @property
    def dimension(self) -> int:
        return len(self.entries) - 2

    def to_json(self) -> dict:
        return {"f": list(self.entries), "min_index": -1}


def facet_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    return SimplicialComplex(ideal.n, ideal.gens)


def _covers_masks(gen_masks: list[int]) -> list[int]:
    """Minimal transversals of a family of nonempty vertex sets (as bitmasks)."""
    found: set[int] = set()

    def is_minimal(cover: int) -> bool:
        # each chosen vertex needs a generator that only it hits
        v = cover
        while v:
            bit = v & -v
            v ^= bit
            rest = cover ^ bit
            if all(g & rest for g in gen_masks):
                return False
        return True

    def branch(chosen: int, forbidden: int):
        for g in gen_masks:
            if not g & chosen:
                break
        else:
            if is_minimal(chosen):
                found.add(chosen)
            return
        options = g & ~forbidden
        # distinct branches pick distinct vertices of g; earlier picks are barred later
        while options:
            bit = options & -options
            options ^= bit
            branch(chosen | bit, forbidden)
            forbidden |= bit

    branch(0, 0)
    return sorted(found, key=lambda m: sort_key(from_mask(m)))


def minimal_vertex_covers(ideal: MonomialIdeal) -> list[tuple]:
    """Minimal vertex covers of the generator hypergraph (the minimal primes of I)."""
    return [from_mask(m) for m in _covers_masks(ideal.masks)]


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Non-face complex: complements of the minimal vertex covers."""
    full = (1 << ideal.n) - 1
    facets = [from_mask(full ^ c) for c in _covers_masks(ideal.masks)]
    return SimplicialComplex(ideal.n, tuple(facets))


def stanley_reisner_brute_force(ideal: MonomialIdeal) -> SimplicialComplex:
    """Maximal faces found by scanning every subset of the vertices."""
    n = ideal.n
    gens = ideal.masks

    def face(s):
        return not any(g & s == g for g in gens)

    facets = []
    for s in range(1 << n):
        if face(s) and not any(face(s | (1 << v)) for v in range(n) if not s >> v & 1):
            facets.append(from_mask(s))
    return SimplicialComplex(n, tuple(facets))


def f_vector(cx: SimplicialComplex) -> FVector:
    faces: set[int] = set()
    for f in cx.facets:
        m = to_mask(f)
        sub = m
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    counts = [0] * (cx.dimension + 2)
    for s in faces:
        counts[bin(s).count("1")] += 1
    return FVector(tuple(counts))


def height(ideal: MonomialIdeal) -> int:
    return min(len(c) for c in minimal_vertex_covers(ideal))


def is_pure(cx: SimplicialComplex) -> bool:
    return len({len(f) for f in cx.facets}) == 1


def nonface_count(cx: SimplicialComplex, i: int) -> int:
    """Number of i-dimensional subsets of the vertex set that are not faces."""
    return comb(cx.n, i + 1) - f_vector(cx).f(i)
