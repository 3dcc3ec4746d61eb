import pytest
from hypothesis import given, strategies as st

from qfi import MonomialIdeal, minimalize, parse_ideal, render, support
from qfi.errors import EmptyIdeal, IndexOutOfRange, NonSquarefree, ParseError, UnitGenerator


def test_parse_basic():
    I = parse_ideal("x1*x2*x4, x1*x2*x5", 5)
    assert I.gens == ((1, 2, 4), (1, 2, 5))
    assert I.n == 5


def test_parse_minimalizes_and_sorts():
    I = parse_ideal("x3*x1*x2, x2*x1, x4", 4)
    assert I.gens == ((4,), (1, 2))


@pytest.mark.parametrize(
    "text, n, exc, pos",
    [
        ("x1*x1*x2", 3, NonSquarefree, 3),
        ("x6", 5, IndexOutOfRange, 0),
        ("x0", 5, IndexOutOfRange, 0),
        ("", 3, EmptyIdeal, 0),
        ("   ", 3, EmptyIdeal, 0),
        ("x1*", 3, ParseError, 3),
        ("x1,,x2", 3, ParseError, 3),
        ("x1 x2", 3, ParseError, 3),
        ("x1+x2", 3, ParseError, 2),
        ("y1", 3, ParseError, 0),
    ],
)
def test_parse_errors(text, n, exc, pos):
    with pytest.raises(exc) as info:
        parse_ideal(text, n)
    assert info.value.position == pos


def test_unit_generator_rejected():
    with pytest.raises(UnitGenerator):
        MonomialIdeal(3, ((),))


@pytest.mark.parametrize(
    "given, expected",
    [
        ([(1, 2), (1, 2, 3)], [(1, 2)]),
        ([(1, 2), (1, 3)], [(1, 2), (1, 3)]),
        ([(1, 2, 3), (1, 2, 3)], [(1, 2, 3)]),
        ([(2, 3), (1,), (1, 4)], [(1,), (2, 3)]),
    ],
)
def test_minimalize(given, expected):
    assert minimalize(given) == expected


def test_support(ideal_0010):
    assert support(ideal_0010) == {1, 2, 3, 4, 5}
    assert ideal_0010.full_support
    partial = MonomialIdeal(3, ((1, 2),))
    assert support(partial) == {1, 2} and not partial.full_support
    assert MonomialIdeal(3, ((1,), (2,), (3,))).full_support


def test_json_round_trip(ideal_0010):
    doc = ideal_0010.to_json()
    assert doc == {"n": 5, "generators": [[1, 2, 4], [1, 2, 5], [1, 4, 5], [2, 3, 5], [3, 4, 5]]}
    assert MonomialIdeal.from_json(doc) == ideal_0010


def test_membership(ideal_0010):
    assert ideal_0010.contains((1, 2, 4, 3))
    assert not ideal_0010.contains((1, 3))


monomial_sets = st.integers(1, 7).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.sets(st.integers(1, n), min_size=1).map(lambda s: tuple(sorted(s))),
                 min_size=1, max_size=10),
    )
)


@given(monomial_sets)
def test_minimalize_idempotent_and_antichain(data):
    n, monos = data
    once = minimalize(monos)
    assert minimalize(once) == once
    for a in once:
        for b in once:
            assert a == b or not set(a) <= set(b)
    # every input is a multiple of some survivor
    for m in monos:
        assert any(set(g) <= set(m) for g in once)


@given(monomial_sets)
def test_render_parse_identity(data):
    n, monos = data
    I = MonomialIdeal(n, tuple(monos))
    assert parse_ideal(render(I), n) == I
    assert render(parse_ideal(render(I), n)) == render(I)


@given(st.integers(2, 7), st.data())
def test_equigenerated_minimalize_is_sort(n, data):
    d = data.draw(st.integers(1, n))
    from qfi.core import all_monomials

    monos = data.draw(st.lists(st.sampled_from(all_monomials(n, d)), min_size=1, unique=True))
    assert minimalize(monos) == sorted(monos)
