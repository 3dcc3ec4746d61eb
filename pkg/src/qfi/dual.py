"""Newton complementary dual and the duality of quasi f-ideals."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import FVector, facet_complex, f_vector, stanley_reisner_complex
from .core import MonomialIdeal, support
from .errors import (
    DimensionMismatch,
    FullGeneratorDegree,
    NotEquigenerated,
    NotFullSupport,
)
from .quasi import PerfectionReport, QuasiType, perfection, quasi_type


def newton_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Replace each generator u by x1*...*xn / u."""
    n = ideal.n
    full = set(range(1, n + 1))
    for g in ideal.gens:
        if len(g) == n:
            raise FullGeneratorDegree(
                "a generator uses every variable; its complement is the unit",
                generator=list(g),
            )
    return MonomialIdeal(n, tuple(tuple(sorted(full - set(g))) for g in ideal.gens))


def complement_f_vector(source: FVector, n: int) -> FVector:
    """``f_j = C(n, j+1) - source_{n-j-2}`` for j = -1..n-1, trailing zeros trimmed."""
    out = [comb(n, j + 1) - source.f(n - j - 2) for j in range(-1, n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return FVector(tuple(out))


def dual_f_vectors(ideal: MonomialIdeal) -> tuple[FVector, FVector]:
    """Predicted ``(f(δ_N(Î)), f(δ_F(Î)))`` from the f-vectors of I alone."""
    newton_dual(ideal)  # validates degrees
    fF = f_vector(facet_complex(ideal))
    fN = f_vector(stanley_reisner_complex(ideal))
    return complement_f_vector(fF, ideal.n), complement_f_vector(fN, ideal.n)


def expected_dual_type(original: QuasiType, n: int, d: int) -> tuple:
    """Pad to indices -1..n-1, reverse, keep indices -1..(n-d)-1."""
    padded = [original[i] for i in range(-1, n)]
    return tuple(reversed(padded))[: n - d + 1]


@dataclass(frozen=True)
class DualityReport:
    n: int
    d: int
    dual_generators: tuple
    original_type: QuasiType | str
    dual_type: QuasiType | str
    g_perfect: PerfectionReport
    dual_g_perfect: PerfectionReport
    expected_dual_type: tuple | None

    @property
    def applicable(self) -> bool:
        return self.g_perfect.perfect

    @property
    def match(self) -> bool:
        return (
            isinstance(self.dual_type, QuasiType)
            and self.expected_dual_type is not None
            and self.dual_type.a == self.expected_dual_type
        )

    @property
    def theorem_holds(self) -> bool | None:
        """None when G(I) is not perfect; otherwise whether both sides agree."""
        if not self.applicable:
            return None
        if isinstance(self.original_type, QuasiType):
            return self.match
        return not isinstance(self.dual_type, QuasiType)

    def to_json(self) -> dict:
        def t(x):
            return list(x.a) if isinstance(x, QuasiType) else {"error": x}

        return {
            "dual_generators": [list(g) for g in self.dual_generators],
            "original_type": t(self.original_type),
            "dual_type": t(self.dual_type),
            "g_perfect": self.g_perfect.to_json(),
            "dual_g_perfect": self.dual_g_perfect.to_json(),
            "expected_dual_type": (None if self.expected_dual_type is None
                                   else list(self.expected_dual_type)),
            "applicable": self.applicable,
            "match": self.match,
            "theorem_holds": self.theorem_holds,
        }


def _type_or_marker(ideal):
    try:
        return quasi_type(ideal)
    except DimensionMismatch as exc:
        return exc.name


def check_duality_theorem(ideal: MonomialIdeal) -> DualityReport:
    if not ideal.is_equigenerated:
        raise NotEquigenerated("generators have mixed degrees",
                               degrees=sorted(ideal.degrees))
    if not ideal.full_support:
        missing = sorted(set(range(1, ideal.n + 1)) - support(ideal))
        raise NotFullSupport("some variables divide no generator", missing=missing)
    dual = newton_dual(ideal)
    d = ideal.degree
    original = _type_or_marker(ideal)
    expected = (expected_dual_type(original, ideal.n, d)
                if isinstance(original, QuasiType) else None)
    return DualityReport(
        n=ideal.n,
        d=d,
        dual_generators=dual.gens,
        original_type=original,
        dual_type=_type_or_marker(dual),
        g_perfect=perfection(ideal.gens, ideal.n),
        dual_g_perfect=perfection(dual.gens, ideal.n),
        expected_dual_type=expected,
    )
