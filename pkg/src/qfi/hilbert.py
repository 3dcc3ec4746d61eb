"""Hilbert function and Hilbert series of R/I for quasi f-ideals.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .complexes import facet_complex, f_vector
from .core import MonomialIdeal
from .errors import TooLarge
from .quasi import quasi_type

ORACLE_LIMIT = 10**7


def binom(m: int, j: int) -> int:
    """C(m, j), zero when m < j or either is negative; C(m, 0) = 1."""
    if j == 0:
        return 1
    if m < j or m < 0 or j < 0:
        return 0
    return comb(m, j)


@dataclass(frozen=True)
class HilbertSeries:
    """Sum of ``c * k^p / (1 - k)^p`` over ``terms = ((c, p), ...)``.

    ``split`` optionally keeps each coefficient as ``(f_i(δ_F), a_i)`` for
    display.
    """

    terms: tuple
    split: tuple | None = None

    @property
    def denominator_pole(self) -> int:
        return max(p for _, p in self.terms)

    def numerator(self) -> list[int]:
        """Integer numerator coefficients over ``(1 - k)^denominator_pole``."""
        D = self.denominator_pole
        out = [0] * (D + 1)
        for c, p in self.terms:
            # c * k^p * (1 - k)^(D - p)
            for j in range(D - p + 1):
                out[p + j] += c * (-1) ** j * comb(D - p, j)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def to_json(self) -> dict:
        return {
            "terms": [[c, p] for c, p in self.terms],
            "numerator_over_common_denominator": self.numerator(),
            "denominator_pole": self.denominator_pole,
        }

    def render(self) -> str:
        parts = []
        for idx, (c, p) in enumerate(self.terms):
            coef = f"({self.split[idx][0]}{self.split[idx][1]:+d})" if self.split else str(c)
            parts.append(f"{coef}/(1-k)^{p}*k^{p}")
        return " + ".join(parts)


def _nonface_f(ideal: MonomialIdeal):
    qt = quasi_type(ideal)
    fF = f_vector(facet_complex(ideal))
    return fF, qt


def hilbert_series(ideal: MonomialIdeal) -> HilbertSeries:
    fF, qt = _nonface_f(ideal)
    top = len(qt.a) - 2
    split = tuple((fF.f(i), qt[i]) for i in range(-1, top + 1))
    terms = tuple((f + a, i + 1) for i, (f, a) in zip(range(-1, top + 1), split))
    return HilbertSeries(terms, split)


def hilbert_function(ideal: MonomialIdeal, k: int) -> int:
    if k < 0:
        raise ValueError("degree must be nonnegative")
    fF, qt = _nonface_f(ideal)
    if k == 0:
        return 1
    top = len(qt.a) - 2
    return sum(binom(k - 1, i) * (fF.f(i) + qt[i]) for i in range(top + 1))


def expand_series(series: HilbertSeries, K: int) -> list[int]:
    """Power-series coefficients of k^0..k^K."""
    out = [0] * (K + 1)
    for c, p in series.terms:
        if p == 0:
            out[0] += c
            continue
        # k^p / (1-k)^p = sum_j C(j + p - 1, p - 1) k^(j + p)
        for j in range(K - p + 1):
            out[j + p] += c * comb(j + p - 1, p - 1)
    return out


def hilbert_oracle(ideal: MonomialIdeal, k: int) -> int:
    """Count degree-k monomials divisible by no generator, by enumeration."""
    n = ideal.n
    total = comb(n + k - 1, k) if k else 1
    if total > ORACLE_LIMIT:
        raise TooLarge(f"{total} monomials of degree {k} exceed the enumeration limit",
                       count=total, limit=ORACLE_LIMIT)
    gens = ideal.masks
    count = 0
    for combo in combinations_with_replacement(range(n), k):
        s = 0
        for v in combo:
            s |= 1 << v
        if not any(g & s == g for g in gens):
            count += 1
    return count
