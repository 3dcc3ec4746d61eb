"""Exhaustive and random discovery of quasi f-ideals at small (n, d).

Candidates are r-subsets of the degree-d squarefree monomials, walked in
colexicographic order.  Encoding a subset as a bitmask over the monomial
list makes colex order the same as increasing integer order, so a subset's
colex rank doubles as a resume cursor.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, permutations
from math import comb, factorial
from typing import Iterator, Sequence

from .complexes import _covers_masks
from .core import MonomialIdeal, all_monomials, sort_key, to_mask
from .errors import DimensionMismatch, RTooLarge, SpecTooLarge, SymmetryCapExceeded
from .quasi import QuasiType, normalize_type, quasi_type

DEFAULT_BUDGET = 2_000_000
DEFAULT_N_CAP = 7
SYMMETRY_CAP = 8


def default_budget() -> int:
    env = os.environ.get("QFI_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class SearchSpec:
    n: int
    d: int
    target_type: tuple
    modulo_symmetry: bool = False
    limit: int | None = None
    budget: int | None = None
    n_cap: int = DEFAULT_N_CAP
    prune: bool = True

    def __post_init__(self):
        if not 2 <= self.d <= self.n:
            raise ValueError(f"need 2 <= d <= n, got d={self.d}, n={self.n}")
        if self.n > self.n_cap:
            raise SpecTooLarge(f"n={self.n} exceeds the cap {self.n_cap}",
                               n=self.n, cap=self.n_cap)
        qt = normalize_type(self.target_type, self.d)
        object.__setattr__(self, "target_type", qt.a)

    @property
    def qtype(self) -> QuasiType:
        return QuasiType(self.target_type)

    @property
    def generator_count(self) -> int | None:
        """r forced by the count condition, or None if parity rules it out."""
        diff = comb(self.n, self.d) - self.target_type[-1]
        if diff % 2:
            return None
        return diff // 2


@dataclass
class SearchStats:
    candidates: int = 0
    visited: int = 0
    matched: int = 0
    pruned_by_parity: bool = False
    pruned_by_count: bool = False
    confirmation_failures: int = 0
    generator_count: int | None = None
    next_rank: int | None = None

    def to_json(self) -> dict:
        return {
            "count": self.matched,
            "pruned_by_parity": self.pruned_by_parity,
            "pruned_by_count": self.pruned_by_count,
            "generator_count": self.generator_count,
            "candidates": self.candidates,
            "visited": self.visited,
            "confirmation_failures": self.confirmation_failures,
            "next_rank": self.next_rank,
        }


def colex_rank(mask: int) -> int:
    rank, i, pos = 0, 0, 0
    while mask:
        if mask & 1:
            i += 1
            rank += comb(pos, i)
        mask >>= 1
        pos += 1
    return rank


def colex_unrank(rank: int, r: int) -> int:
    mask = 0
    for i in range(r, 0, -1):
        pos = i - 1
        while comb(pos + 1, i) <= rank:
            pos += 1
        rank -= comb(pos, i)
        mask |= 1 << pos
    return mask


def _next_subset(x: int) -> int:
    # Gosper's hack: next integer with the same popcount
    c = x & -x
    y = x + c
    return (((x ^ y) >> 2) // c) | y


def _face_counts_below(gen_masks: list[int], d: int) -> list[int]:
    """Number of faces of δ_F of size 1..d-1 (i.e. dimensions 0..d-2)."""
    seen: set[int] = set()
    for g in gen_masks:
        sub = g
        while sub:
            if bin(sub).count("1") < d:
                seen.add(sub)
            sub = (sub - 1) & g
    counts = [0] * d
    for s in seen:
        counts[bin(s).count("1")] += 1
    return counts[1:]


def _scan(spec: SearchSpec, start: int, stop: int, stats: SearchStats | None = None
          ) -> Iterator[tuple[int, MonomialIdeal]]:
    n, d = spec.n, spec.d
    r = spec.generator_count
    monos = all_monomials(n, d)
    mono_masks = [to_mask(m) for m in monos]
    full = (1 << n) - 1
    target = spec.qtype
    lower_target = [target[i] for i in range(d - 1)]
    expected_lower = [comb(n, i + 1) - a for i, a in enumerate(lower_target)]
    x = colex_unrank(start, r)
    for rank in range(start, stop):
        if rank > start:
            x = _next_subset(x)
        if stats is not None:
            stats.visited += 1
            stats.next_rank = rank + 1
        if spec.modulo_symmetry and not x & 1:
            # every orbit representative contains x1*...*xd
            continue
        gens = [mono_masks[j] for j in range(len(monos)) if x >> j & 1]
        cover = 0
        for g in gens:
            cover |= g
        if cover != full:
            continue
        if spec.prune:
            if _face_counts_below(gens, d) != expected_lower:
                continue
            covers = _covers_masks(gens)
            if min(bin(c).count("1") for c in covers) != n - d:
                continue
        ideal = MonomialIdeal(n, tuple(monos[j] for j in range(len(monos)) if x >> j & 1))
        try:
            ok = quasi_type(ideal) == target
        except DimensionMismatch:
            ok = False
        if not ok:
            if spec.prune and stats is not None:
                stats.confirmation_failures += 1
            continue
        if spec.modulo_symmetry and canonical_form(ideal) != ideal:
            continue
        yield rank, ideal


def _scan_chunk(spec, start, stop):
    return [(rank, ideal.gens) for rank, ideal in _scan(spec, start, stop)]


def enumerate_quasi(spec: SearchSpec, stats: SearchStats | None = None,
                    threads: int = 1, start_rank: int = 0) -> Iterator[MonomialIdeal]:
    """Yield every full-support degree-d ideal on n variables of the target type.

    ``stats`` (if given) is filled in as the stream is consumed.  With
    ``threads > 1`` rank ranges are scanned in worker processes and merged
    back in rank order; the stream is identical either way.
    """
    if stats is None:
        stats = SearchStats()
    total = comb(spec.n, spec.d)
    r = spec.generator_count
    stats.generator_count = r
    if r is None:
        stats.pruned_by_parity = True
        return
    if not 1 <= r <= total:
        stats.pruned_by_count = True
        return
    candidates = comb(total, r)
    stats.candidates = candidates
    budget = spec.budget if spec.budget is not None else default_budget()
    if candidates > budget and not spec.modulo_symmetry:
        raise SpecTooLarge(
            f"{candidates} candidate generator sets exceed the budget {budget}",
            candidates=candidates, budget=budget,
        )
    limit = spec.limit
    if threads <= 1:
        stream = (ideal for _, ideal in _scan(spec, start_rank, candidates, stats))
    else:
        stream = _parallel(spec, start_rank, candidates, threads, stats)
    for ideal in islice(stream, limit):
        stats.matched += 1
        yield ideal


def _parallel(spec, start, stop, threads, stats):
    size = max(1, -(-(stop - start) // (threads * 8)))
    bounds = [(a, min(a + size, stop)) for a in range(start, stop, size)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_scan_chunk, spec, a, b) for a, b in bounds]
        try:
            for (a, b), fut in zip(bounds, futures):
                for rank, gens in fut.result():
                    stats.next_rank = rank + 1
                    yield MonomialIdeal(spec.n, gens)
                stats.visited += b - a
                stats.next_rank = b
        finally:
            for fut in futures:
                fut.cancel()


def random_ideal(n: int, d: int, r: int, seed: int) -> MonomialIdeal:
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    total = comb(n, d)
    if not 1 <= r <= total:
        raise RTooLarge(f"only {total} monomials of degree {d} in {n} variables",
                        r=r, available=total)
    rng = random.Random(seed)
    return MonomialIdeal(n, tuple(rng.sample(all_monomials(n, d), r)))


def relabel(ideal: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Apply ``x_i -> x_{perm[i-1]}``."""
    return MonomialIdeal(ideal.n, tuple(tuple(sorted(perm[i - 1] for i in g))
                                        for g in ideal.gens))


def _relabelings(ideal: MonomialIdeal):
    n = ideal.n
    if n > SYMMETRY_CAP:
        raise SymmetryCapExceeded(f"n={n} exceeds the relabeling cap {SYMMETRY_CAP}",
                                  n=n, cap=SYMMETRY_CAP, permutations=factorial(n))
    for perm in permutations(range(1, n + 1)):
        yield tuple(sorted((tuple(sorted(perm[i - 1] for i in g)) for g in ideal.gens),
                           key=sort_key))


def canonical_form(ideal: MonomialIdeal) -> MonomialIdeal:
    """Least relabeling of the ideal, comparing canonically sorted generator lists."""
    best = min(_relabelings(ideal), key=lambda gens: [sort_key(g) for g in gens])
    return MonomialIdeal(ideal.n, best)


def orbit(ideal: MonomialIdeal) -> set[MonomialIdeal]:
    return {MonomialIdeal(ideal.n, gens) for gens in set(_relabelings(ideal))}
