import random
from math import comb

import pytest

from qfi import (
    MonomialIdeal,
    check_duality_theorem,
    dual_f_vectors,
    f_vector,
    facet_complex,
    newton_dual,
    perfection,
    stanley_reisner_complex,
)
from qfi.core import all_monomials
from qfi.dual import expected_dual_type
from qfi.errors import FullGeneratorDegree, NotEquigenerated, NotFullSupport
from qfi.quasi import QuasiType, is_f_ideal
from qfi.search import random_ideal


def test_newton_dual_examples(ideal_0010, ideal_00m1):
    assert set(newton_dual(ideal_0010).gens) == {(3, 5), (3, 4), (1, 2), (2, 3), (1, 4)}
    assert set(newton_dual(ideal_00m1).gens) == {
        (3, 4, 5, 6), (2, 4, 5, 6), (1, 4, 5, 6), (1, 2, 3, 6),
        (1, 2, 3, 5), (1, 2, 3, 4), (1, 3, 5, 6), (1, 2, 4, 6)}
    with pytest.raises(FullGeneratorDegree):
        newton_dual(MonomialIdeal(3, ((1, 2, 3),)))


def test_dual_f_vectors_examples(ideal_00m1):
    pN, pF = dual_f_vectors(ideal_00m1)
    assert pN.entries == (1, 6, 15, 20, 7)
    assert pF.entries == (1, 6, 15, 20, 8)
    pN, _ = dual_f_vectors(MonomialIdeal(2, ((1,),)))
    assert pN.entries == (1, 1)
    assert f_vector(stanley_reisner_complex(MonomialIdeal(2, ((2,),)))).entries == (1, 1)


def test_duality_report_perfect_case(ideal_00m1):
    rep = check_duality_theorem(ideal_00m1)
    assert rep.applicable and rep.g_perfect.perfect
    assert rep.original_type.a == (0, 0, -1)
    assert rep.dual_type.a == (0, 0, 0, 0, -1)
    assert rep.expected_dual_type == (0, 0, 0, 0, -1)
    assert rep.match and rep.theorem_holds


def test_duality_report_inapplicable(ideal_0010):
    rep = check_duality_theorem(ideal_0010)
    assert not rep.applicable and rep.theorem_holds is None
    assert not rep.g_perfect.lower and (1, 3) in rep.g_perfect.missing_lower
    assert rep.dual_type == "DimensionMismatch"
    assert not rep.match
    doc = rep.to_json()
    assert doc["dual_type"] == {"error": "DimensionMismatch"} and doc["applicable"] is False


def test_duality_f_ideal(path_f_ideal):
    rep = check_duality_theorem(path_f_ideal)
    assert rep.original_type.is_zero and rep.dual_type.is_zero and rep.match


def test_duality_errors():
    with pytest.raises(NotEquigenerated):
        check_duality_theorem(MonomialIdeal(3, ((1, 2), (3,))))
    with pytest.raises(NotFullSupport):
        check_duality_theorem(MonomialIdeal(4, ((1, 2),)))


def test_expected_dual_type_rule():
    assert expected_dual_type(QuasiType((0, 0, -1)), 6, 2) == (0, 0, 0, 0, -1)
    assert expected_dual_type(QuasiType((0, 0, 0)), 4, 2) == (0, 0, 0)


def random_ideals(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 8)
        if rng.random() < 0.5:
            d = rng.randint(1, n - 1)
            yield random_ideal(n, d, rng.randint(1, comb(n, d)), rng.randrange(10**6))
        else:
            gens = [tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, n - 1))))
                    for _ in range(rng.randint(1, 6))]
            yield MonomialIdeal(n, tuple(gens))


@pytest.mark.parametrize("seed", range(3))
def test_dual_properties(seed):
    for I in random_ideals(seed, 80):
        D = newton_dual(I)
        assert newton_dual(D) == I
        pN, pF = dual_f_vectors(I)
        assert pN == f_vector(stanley_reisner_complex(D))
        assert pF == f_vector(facet_complex(D))
        if I.is_equigenerated:
            assert D.degree == I.n - I.degree and D.r == I.r
            p, q = perfection(I.gens, I.n), perfection(D.gens, I.n)
            assert (p.lower, p.upper) == (q.upper, q.lower)


def equigenerated_full_support(n, d):
    monos = all_monomials(n, d)
    for mask in range(1, 1 << len(monos)):
        gens = tuple(m for j, m in enumerate(monos) if mask >> j & 1)
        if len({v for g in gens for v in g}) == n:
            yield MonomialIdeal(n, gens)


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (5, 3), (6, 2)])
def test_duality_theorem_sweep(n, d):
    applicable = 0
    for I in equigenerated_full_support(n, d):
        if not perfection(I.gens, n).perfect:
            continue
        applicable += 1
        rep = check_duality_theorem(I)
        assert rep.theorem_holds, I
        # reverse direction: the dual's own report points back to I
        back = check_duality_theorem(newton_dual(I)) if newton_dual(I).full_support else None
        if back is not None:
            assert back.applicable and back.theorem_holds
    assert applicable > 0


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (5, 3)])
def test_f_ideal_duality(n, d):
    for I in equigenerated_full_support(n, d):
        D = newton_dual(I)
        if not D.full_support or D.degree < 2:
            continue
        assert is_f_ideal(I) == is_f_ideal(D)
