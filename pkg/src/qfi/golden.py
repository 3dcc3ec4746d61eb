"""Worked examples with known answers, runnable as a self-test."""

from __future__ import annotations

from .complexes import (
    facet_complex,
    f_vector,
    height,
    minimal_vertex_covers,
    stanley_reisner_complex,
)
from .core import parse_ideal
from .dual import check_duality_theorem, newton_dual
from .hilbert import expand_series, hilbert_function, hilbert_oracle, hilbert_series
from .quasi import characterize, perfection, quasi_type

EXAMPLE_TYPE_1 = "x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5,x2*x3*x5"
EXAMPLE_TYPE_2 = "x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5"
EXAMPLE_DUAL = "x1*x2,x1*x3,x2*x3,x4*x5,x4*x6,x5*x6,x2*x4,x3*x5"


def _sets(xs):
    return {tuple(x) for x in xs}


def _checks():
    I = parse_ideal(EXAMPLE_TYPE_1, 5)
    yield "type (0,0,1,0) facets", _sets(facet_complex(I).facets) == {
        (1, 2, 4), (1, 2, 5), (3, 4, 5), (1, 4, 5), (2, 3, 5)}
    yield "type (0,0,1,0) non-face facets", _sets(stanley_reisner_complex(I).facets) == {
        (1, 2, 3), (1, 3, 4), (1, 3, 5), (2, 3, 4), (2, 4, 5)}
    yield "type (0,0,1,0) minimal primes", _sets(minimal_vertex_covers(I)) == {
        (1, 3), (1, 5), (2, 4), (2, 5), (4, 5)}
    yield "type (0,0,1,0) height", height(I) == 2
    yield "type (0,0,1,0) quasi type", quasi_type(I).a == (0, 0, 1, 0)
    rep = characterize(I)
    yield "type (0,0,1,0) characterization", rep.verdict and rep.r == 5 and rep.expected_r == 5

    J = parse_ideal(EXAMPLE_TYPE_2, 5)
    yield "type (0,0,2,2) f(facet)", f_vector(facet_complex(J)).entries == (1, 5, 8, 4)
    yield "type (0,0,2,2) f(non-face)", f_vector(stanley_reisner_complex(J)).entries == (1, 5, 10, 6)
    yield "type (0,0,2,2) quasi type", quasi_type(J).a == (0, 0, 2, 2)
    series = hilbert_series(J)
    yield "Hilbert series terms", series.terms == ((1, 0), (5, 1), (10, 2), (6, 3))
    values = [hilbert_function(J, k) for k in range(7)]
    yield "Hilbert function 0..3", values[:4] == [1, 5, 15, 31]
    yield "Hilbert function = expansion", values == expand_series(series, 6)
    yield "Hilbert function = oracle", values == [hilbert_oracle(J, k) for k in range(7)]

    D = newton_dual(I)
    yield "dual generators", _sets(D.gens) == {(3, 5), (3, 4), (1, 2), (2, 3), (1, 4)}
    p = perfection(D.gens, 5)
    yield "dual not upper perfect", not p.upper and (2, 4, 5) in p.missing_upper
    yield "duality inapplicable", not check_duality_theorem(I).applicable

    K = parse_ideal(EXAMPLE_DUAL, 6)
    rep = check_duality_theorem(K)
    KD = newton_dual(K)
    yield "type (0,0,-1) dual generators", _sets(KD.gens) == {
        (3, 4, 5, 6), (2, 4, 5, 6), (1, 4, 5, 6), (1, 2, 3, 6),
        (1, 2, 3, 5), (1, 2, 3, 4), (1, 3, 5, 6), (1, 2, 4, 6)}
    yield "dual f(facet)", f_vector(facet_complex(KD)).entries == (1, 6, 15, 20, 8)
    yield "dual f(non-face)", f_vector(stanley_reisner_complex(KD)).entries == (1, 6, 15, 20, 7)
    yield "original type (0,0,-1)", rep.original_type.a == (0, 0, -1)
    yield "dual type (0,0,0,0,-1)", rep.dual_type.a == (0, 0, 0, 0, -1)
    yield "duality match", rep.applicable and rep.match


def run_selftest() -> list[tuple[str, bool]]:
    results = []
    for name, ok in _checks():
        results.append((name, bool(ok)))
    return results


__all__ = ["run_selftest", "EXAMPLE_TYPE_1", "EXAMPLE_TYPE_2", "EXAMPLE_DUAL"]
