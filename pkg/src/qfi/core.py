"""Squarefree monomials and monomial ideals.

A squarefree monomial over x1..xn is stored as an ascending tuple of
1-based variable indices, e.g. ``x1*x2*x4`` is ``(1, 2, 4)``.  Internally
most algorithms switch to bitmasks (bit ``i - 1`` for variable ``i``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import (
    EmptyIdeal,
    IndexOutOfRange,
    NonSquarefree,
    ParseError,
    UnitGenerator,
)

Monomial = tuple  # ascending tuple of ints in 1..n


def sort_key(m):
    return (len(m), tuple(m))


def to_mask(m: Iterable[int]) -> int:
    mask = 0
    for i in m:
        mask |= 1 << (i - 1)
    return mask


def from_mask(mask: int) -> Monomial:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def all_monomials(n: int, d: int) -> list[Monomial]:
    """All squarefree monomials of degree ``d`` in n variables (sm(R)_d), lex order."""
    if d < 0 or d > n:
        return []
    return [tuple(c) for c in combinations(range(1, n + 1), d)]


def minimalize(monomials: Iterable[Iterable[int]]) -> list[Monomial]:
    """Inclusion-minimal members under divisibility, deduplicated and sorted."""
    uniq = {tuple(sorted(m)) for m in monomials}
    ordered = sorted(uniq, key=sort_key)
    kept: list[Monomial] = []
    kept_masks: list[int] = []
    # sorted by degree, so a divisor is always seen before its multiples
    for m in ordered:
        mask = to_mask(m)
        if any(k & mask == k for k in kept_masks):
            continue
        kept.append(m)
        kept_masks.append(mask)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal of F[x1..xn] given by its minimal generators.

    The constructor validates the generators and normalizes them to G(I) in
    canonical order, so any two equal ideals compare equal.
    """

    n: int
    gens: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        gens = []
        for g in self.gens:
            g = tuple(g)
            if len(set(g)) != len(g):
                raise NonSquarefree(f"monomial {g} repeats a variable", monomial=list(g))
            if not g:
                raise UnitGenerator("the unit monomial generates the whole ring")
            for i in g:
                if not 1 <= i <= self.n:
                    raise IndexOutOfRange(
                        f"variable x{i} outside x1..x{self.n}", index=i, n=self.n
                    )
            gens.append(g)
        if not gens:
            raise EmptyIdeal("an ideal needs at least one generator")
        object.__setattr__(self, "gens", tuple(minimalize(gens)))

    @property
    def r(self) -> int:
        return len(self.gens)

    @property
    def masks(self) -> list[int]:
        return [to_mask(g) for g in self.gens]

    @property
    def degrees(self) -> set[int]:
        return {len(g) for g in self.gens}

    @property
    def is_equigenerated(self) -> bool:
        return len(self.degrees) == 1

    @property
    def degree(self) -> int | None:
        """Common generator degree, or None for mixed degrees."""
        ds = self.degrees
        return next(iter(ds)) if len(ds) == 1 else None

    @property
    def full_support(self) -> bool:
        return len(support(self)) == self.n

    def contains(self, m: Iterable[int]) -> bool:
        """Membership of a squarefree monomial given by its variable set."""
        mask = to_mask(m)
        return any(g & mask == g for g in self.masks)

    def render(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["n"]), tuple(tuple(g) for g in data["generators"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad ideal JSON: {exc}") from exc


def support(ideal: MonomialIdeal) -> set[int]:
    """Union of the generators' variable sets."""
    out: set[int] = set()
    for g in ideal.gens:
        out.update(g)
    return out


def render_monomial(m: Monomial) -> str:
    return "*".join(f"x{i}" for i in m)


def render(ideal: MonomialIdeal) -> str:
    """Canonical text form, e.g. ``x1*x2*x4,x1*x2*x5``."""
    return ",".join(render_monomial(g) for g in ideal.gens)


_TOKEN = re.compile(r"\s*(?:(x(\d+))|(\*)|(,))")


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """Parse ``x1*x2, x3*x4`` into a minimalized ideal over n variables."""
    if n < 1:
        raise ParseError(f"n must be positive, got {n}", position=0)
    monos: list[list[int]] = []
    current: list[int] = []
    pos = 0
    expect_var = True
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[at]!r} at {at}", position=at)
        start = m.start(1) if m.group(1) else m.end() - 1
        if m.group(1):
            if not expect_var:
                raise ParseError(f"missing '*' or ',' before position {start}", position=start)
            idx = int(m.group(2))
            if not 1 <= idx <= n:
                raise IndexOutOfRange(
                    f"variable x{idx} at position {start} outside x1..x{n}",
                    position=start,
                    index=idx,
                    n=n,
                )
            if idx in current:
                raise NonSquarefree(
                    f"x{idx} repeated within a monomial at position {start}",
                    position=start,
                    index=idx,
                )
            current.append(idx)
            expect_var = False
        else:
            if expect_var:
                raise ParseError(f"expected a variable at position {start}", position=start)
            if m.group(4):
                monos.append(current)
                current = []
            expect_var = True
        pos = m.end()
    if not expect_var:
        monos.append(current)
    elif monos or current:
        raise ParseError("dangling separator at end of input", position=len(text))
    if not monos:
        raise EmptyIdeal("empty generator list", position=0)
    return MonomialIdeal(n, tuple(tuple(sorted(m)) for m in monos))
