import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from c2steenrod.coefficients import (
    ONE,
    CoeffElement,
    Laurent,
    LaurentMonomial,
    NegMonomial,
    PosMonomial,
    all_degrees_rank_one,
    binom_mod2,
    laurent_mul,
    m2_mul,
)
from c2steenrod.grading import ParseError, RepDegree

pos = [PosMonomial(i, j) for i in range(5) for j in range(5)]
neg = [NegMonomial(i, j) for i in range(5) for j in range(5)]
monos = pos + neg


def el(*ms):
    return CoeffElement.of(*ms)


def test_m2_examples():
    assert el(PosMonomial(0, 1)) * el(PosMonomial(1, 0)) == el(PosMonomial(1, 1))
    assert el(PosMonomial(1, 0)) * el(NegMonomial(2, 1)) == el(NegMonomial(1, 1))
    assert not (el(NegMonomial(1, 1)) * el(NegMonomial(1, 1)))


def test_figure_positions():
    # theta/(au) and theta/(a^2 u) sit where the picture puts them
    assert NegMonomial(1, 1).degree == RepDegree(-4, 3)
    assert NegMonomial(2, 1).degree == RepDegree(-5, 3)
    assert PosMonomial(1, 1).degree == RepDegree(2, -1)


def test_each_degree_holds_one_basis_element():
    assert all_degrees_rank_one(monos)
    assert not {m.degree for m in pos} & {m.degree for m in neg}


def test_m2_ring_axioms_exhaustive():
    for x, y in itertools.product(monos, repeat=2):
        assert el(x) * el(y) == el(y) * el(x)
        assert el(x) * ONE == el(x)
    for x, y, z in itertools.product(pos[::3] + neg[::3], repeat=3):
        assert (el(x) * el(y)) * el(z) == el(x) * (el(y) * el(z))


def test_m2_is_degree_additive_when_nonzero():
    for x, y in itertools.product(monos, repeat=2):
        prod = el(x) * el(y)
        if prod:
            assert prod.degrees() == {x.degree + y.degree}


@given(st.lists(st.sampled_from(monos), max_size=4), st.lists(st.sampled_from(monos), max_size=4),
       st.lists(st.sampled_from(monos), max_size=4))
def test_m2_distributes(xs, ys, zs):
    x, y, z = el(*xs), el(*ys), el(*zs)
    assert m2_mul(x, y + z) == m2_mul(x, y) + m2_mul(x, z)


@pytest.mark.parametrize("n,k,expect", [(2, 1, 0), (-1, 2, 1), (5, 2, 0), (-2, 1, 0), (-1, 7, 1)])
def test_binom_examples(n, k, expect):
    assert binom_mod2(n, k) == expect


def test_binom_matches_pascal():
    for n in range(-20, 21):
        for k in range(21):
            assert binom_mod2(n, k) == oracles.pascal_mod2(n, k) == oracles.binom(n, k) % 2, (n, k)


def test_binom_negative_lower_index_is_zero():
    assert binom_mod2(5, -1) == 0


def test_laurent_examples():
    assert Laurent.mono(0, -1) * Laurent.mono(0, 1) == Laurent.mono()
    ua = Laurent.mono(0, 1) + Laurent.mono(1, 0)
    assert ua * ua == Laurent.mono(0, 2) + Laurent.mono(2, 0)
    assert Laurent.mono(1, -3) * Laurent.mono(1, -1) == Laurent.mono(2, -4)


laurent_monos = st.builds(LaurentMonomial, st.integers(0, 4), st.integers(-4, 4))
laurents = st.lists(laurent_monos, max_size=4).map(lambda ms: Laurent.of(*ms))


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(x, y, z):
    assert laurent_mul(x, y) == laurent_mul(y, x)
    assert laurent_mul(laurent_mul(x, y), z) == laurent_mul(x, laurent_mul(y, z))
    assert laurent_mul(x, y + z) == laurent_mul(x, y) + laurent_mul(x, z)


@given(laurents)
def test_laurent_text_round_trip(x):
    assert Laurent.parse(str(x)) == x


@given(st.lists(st.sampled_from(monos), max_size=5))
def test_coeff_text_and_json_round_trip(ms):
    x = el(*ms)
    assert CoeffElement.parse(str(x)) == x
    assert CoeffElement.from_json(x.to_json()) == x


def test_coeff_parse_forms():
    assert CoeffElement.parse("u^2*a") == el(PosMonomial(1, 2))
    assert CoeffElement.parse("theta/(a^2*u)") == el(NegMonomial(2, 1))
    assert CoeffElement.parse("theta") == el(NegMonomial(0, 0))
    assert CoeffElement.parse("u + u") == CoeffElement()


@pytest.mark.parametrize("text,token", [("u^x", "u^x"), ("b", "b"), ("u+", "+")])
def test_coeff_parse_errors(text, token):
    with pytest.raises(ParseError) as err:
        CoeffElement.parse(text)
    assert err.value.token == token
