"""Quasi f-ideal types, the characterization test, and perfect sets."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .complexes import facet_complex, f_vector, height, stanley_reisner_complex
from .core import MonomialIdeal, all_monomials, from_mask, sort_key, support, to_mask
from .errors import (
    DegreeTooSmall,
    DimensionMismatch,
    InconsistencyError,
    InvalidType,
    MixedDegrees,
    NotEquigenerated,
    NotFullSupport,
)


@dataclass(frozen=True)
class QuasiType:
    """``(a_{-1}, a_0, ..., a_{s})`` with ``a_i = f_i(δ_N) - f_i(δ_F)``."""

    a: tuple

    def __getitem__(self, i: int) -> int:
        k = i + 1
        return self.a[k] if 0 <= k < len(self.a) else 0

    @property
    def short(self) -> tuple:
        """The form without the leading ``a_{-1}``."""
        return self.a[1:]

    @property
    def is_zero(self) -> bool:
        return not any(self.a)

    def to_json(self) -> dict:
        return {"a": list(self.a), "min_index": -1}


def normalize_type(values: Sequence[int], d: int) -> QuasiType:
    """Accept a type for degree ``d`` in short (length d) or long (length d+1) form."""
    values = tuple(int(v) for v in values)
    if len(values) == d:
        values = (0,) + values
    elif len(values) != d + 1:
        raise InvalidType(
            f"type for degree {d} needs {d} or {d + 1} entries, got {len(values)}",
            length=len(values),
            degree=d,
        )
    if values[0] != 0:
        raise InvalidType("a_{-1} is always 0 (both complexes contain the empty face)",
                          a_minus_1=values[0])
    return QuasiType(values)


def quasi_type(ideal: MonomialIdeal) -> QuasiType:
    """Componentwise ``f(δ_N) - f(δ_F)``; raises DimensionMismatch if dimensions differ."""
    fF = f_vector(facet_complex(ideal))
    fN = f_vector(stanley_reisner_complex(ideal))
    if fF.dimension != fN.dimension:
        raise DimensionMismatch(fF.dimension, fN.dimension)
    return QuasiType(tuple(b - a for a, b in zip(fF.entries, fN.entries)))


def _require_characterizable(ideal: MonomialIdeal) -> int:
    if not ideal.is_equigenerated:
        raise NotEquigenerated(
            "generators have mixed degrees", degrees=sorted(ideal.degrees)
        )
    d = ideal.degree
    if d < 2:
        raise DegreeTooSmall(f"degree {d} < 2", degree=d)
    if not ideal.full_support:
        missing = sorted(set(range(1, ideal.n + 1)) - support(ideal))
        raise NotFullSupport("some variables divide no generator", missing=missing)
    return d


def nonface_counts(ideal: MonomialIdeal) -> tuple:
    """Non-faces of δ_F in each dimension 0..d-2."""
    if not ideal.is_equigenerated:
        raise NotEquigenerated(
            "generators have mixed degrees", degrees=sorted(ideal.degrees)
        )
    d = ideal.degree
    fF = f_vector(facet_complex(ideal))
    return tuple(comb(ideal.n, i + 1) - fF.f(i) for i in range(d - 1))


@dataclass(frozen=True)
class CharacterizationReport:
    n: int
    d: int
    r: int
    height: int
    expected_height: int
    binom: int
    a_top: int
    expected_r: Fraction
    nonface_counts: tuple
    claimed_type: QuasiType
    height_ok: bool
    parity_ok: bool
    count_ok: bool
    nonface_ok: bool

    @property
    def verdict(self) -> bool:
        return self.height_ok and self.parity_ok and self.count_ok and self.nonface_ok

    def to_json(self) -> dict:
        er = self.expected_r
        return {
            "verdict": self.verdict,
            "claimed_type": list(self.claimed_type.a),
            "height": {"ok": self.height_ok, "observed": self.height,
                       "expected": self.expected_height},
            "parity": {"ok": self.parity_ok, "binom": self.binom,
                       "binom_parity": self.binom % 2, "a_top": self.a_top,
                       "a_top_parity": self.a_top % 2},
            "count": {"ok": self.count_ok, "r": self.r,
                      "expected_r": er.numerator if er.denominator == 1 else str(er)},
            "nonface": {"ok": self.nonface_ok, "observed": list(self.nonface_counts),
                        "claimed": list(self.claimed_type.a[1:self.d])},
        }


def characterize(ideal: MonomialIdeal, claimed: Sequence[int] | None = None
                 ) -> CharacterizationReport:
    """Test the three characterization conditions for an equigenerated ideal.

    Without ``claimed`` the type is read off the ideal itself: ``a_{d-1}`` from
    ``C(n,d) - 2r`` and the lower entries from the non-face counts of δ_F.  With
    ``claimed`` every condition is checked against that type instead.
    """
    d = _require_characterizable(ideal)
    n, r = ideal.n, ideal.r
    binom = comb(n, d)
    counts = nonface_counts(ideal)
    if claimed is None:
        qt = QuasiType((0,) + counts + (binom - 2 * r,))
    else:
        qt = normalize_type(claimed, d)
    a_top = qt[d - 1]
    ht = height(ideal)
    return CharacterizationReport(
        n=n, d=d, r=r,
        height=ht,
        expected_height=n - d,
        binom=binom,
        a_top=a_top,
        expected_r=Fraction(binom - a_top, 2),
        nonface_counts=counts,
        claimed_type=qt,
        height_ok=ht == n - d,
        parity_ok=binom % 2 == a_top % 2,
        count_ok=2 * r == binom - a_top,
        nonface_ok=counts == tuple(qt[i] for i in range(d - 1)),
    )


def box_up(monomials: Iterable[Iterable[int]], n: int) -> list[tuple]:
    """``{g * x_i : x_i does not divide g}``."""
    out: set[int] = set()
    for g in monomials:
        m = to_mask(g)
        for v in range(n):
            if not m >> v & 1:
                out.add(m | 1 << v)
    return sorted((from_mask(m) for m in out), key=sort_key)


def box_down(monomials: Iterable[Iterable[int]]) -> list[tuple]:
    """``{g / x_i : x_i divides g}``."""
    out: set[tuple] = set()
    for g in monomials:
        g = tuple(sorted(g))
        for k in range(len(g)):
            out.add(g[:k] + g[k + 1:])
    return sorted(out, key=sort_key)


@dataclass(frozen=True)
class PerfectionReport:
    lower: bool
    upper: bool
    missing_lower: tuple = field(default=())
    missing_upper: tuple = field(default=())

    @property
    def perfect(self) -> bool:
        return self.lower and self.upper

    def to_json(self) -> dict:
        out = asdict(self)
        out["perfect"] = self.perfect
        out["missing_lower"] = [list(m) for m in self.missing_lower]
        out["missing_upper"] = [list(m) for m in self.missing_upper]
        return out


def perfection(monomials: Iterable[Iterable[int]], n: int) -> PerfectionReport:
    A = [tuple(sorted(g)) for g in monomials]
    degrees = {len(g) for g in A}
    if len(degrees) != 1:
        raise MixedDegrees("perfection needs a set of one common degree",
                           degrees=sorted(degrees))
    d = degrees.pop()
    down = set(box_down(A))
    up = set(box_up(A, n))
    missing_lower = tuple(m for m in all_monomials(n, d - 1) if m not in down)
    missing_upper = tuple(m for m in all_monomials(n, d + 1) if m not in up)
    return PerfectionReport(
        lower=not missing_lower,
        upper=not missing_upper,
        missing_lower=missing_lower,
        missing_upper=missing_upper,
    )


def f_ideal_conditions(ideal: MonomialIdeal) -> bool:
    """The zero-type specialization: ht = n-d, r = C(n,d)/2, f_{d-2}(δ_F) = C(n,d-1)."""
    d = _require_characterizable(ideal)
    n = ideal.n
    fF = f_vector(facet_complex(ideal))
    return (
        height(ideal) == n - d
        and 2 * ideal.r == comb(n, d)
        and fF.f(d - 2) == comb(n, d - 1)
    )


def is_f_ideal(ideal: MonomialIdeal) -> bool:
    try:
        direct = quasi_type(ideal).is_zero
    except DimensionMismatch:
        direct = False
    if direct != f_ideal_conditions(ideal):
        raise InconsistencyError(
            "direct type and zero-type conditions disagree",
            ideal=ideal.to_json(), direct=direct,
        )
    return direct
