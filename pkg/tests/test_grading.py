import itertools

import pytest
from hypothesis import given, strategies as st

from c2steenrod.grading import (
    ONE,
    RHO,
    SIGMA,
    BigradedSeries,
    ParseError,
    RepDegree,
    actual_leq,
    collapse,
    series1_mul,
    series_mul,
)

degrees = st.builds(RepDegree, st.integers(-6, 6), st.integers(-6, 6))
small = [RepDegree(r, s) for r in range(-5, 6) for s in range(-5, 6)]


def series(max_deg=3, cutoff=6):
    keys = st.builds(RepDegree, st.integers(0, max_deg), st.integers(0, max_deg))
    return st.dictionaries(keys, st.integers(1, 3), max_size=5).map(lambda d: BigradedSeries(cutoff, d))


def test_p_q_are_derived():
    d = RepDegree(3, 2)
    assert (d.p, d.q) == (5, 3)
    assert RHO == SIGMA + ONE


def test_actual_leq_examples():
    assert actual_leq(SIGMA, SIGMA + ONE, strict=True)
    v = SIGMA * 2 + ONE
    assert actual_leq(v, v) and not actual_leq(v, v, strict=True)
    assert not actual_leq(SIGMA + ONE * 2, SIGMA * 2 + ONE)


def test_actual_leq_is_a_partial_order():
    for v in small:
        assert actual_leq(v, v)
    for v, w in itertools.product(small, repeat=2):
        if actual_leq(v, w) and actual_leq(w, v):
            assert v == w
    sample = small[::7]
    for u, v, w in itertools.product(sample, repeat=3):
        if actual_leq(u, v) and actual_leq(v, w):
            assert actual_leq(u, w)


@given(degrees, degrees)
def test_addition_is_componentwise(x, y):
    assert (x + y) - y == x
    assert (x + y).p == x.p + y.p


@given(degrees)
def test_text_and_json_round_trip(d):
    assert RepDegree.parse(str(d)) == d
    assert RepDegree.from_json(d.to_json()) == d


@pytest.mark.parametrize("text,expect", [
    ("3+1*sigma", RepDegree(1, 3)),
    ("0+2*sigma", RepDegree(2, 0)),
    ("sigma", SIGMA),
    ("2*rho+1", RepDegree(2, 3)),
    ("-2+3*sigma", RepDegree(3, -2)),
])
def test_parse(text, expect):
    assert RepDegree.parse(text) == expect


@pytest.mark.parametrize("text,token", [("x", "x"), ("3+", "+"), ("2sigma3", "3"), ("", "")])
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(ParseError) as err:
        RepDegree.parse(text)
    assert err.value.token == token


def test_series_mul_examples():
    y = BigradedSeries(4, {RHO: 2, SIGMA: 1})
    assert series_mul(BigradedSeries.unit(4), y) == y
    g = BigradedSeries.geometric(RHO, 4)
    sq = series_mul(g, g)
    assert dict(sq.terms) == {RepDegree(): 1, RHO: 2, RHO * 2: 3}
    assert not series_mul(y, BigradedSeries(4)).terms


def test_collapse_examples():
    x = BigradedSeries(4, {SIGMA: 1, RHO: 1})
    assert collapse(x, "total") == {1: 1, 2: 1}
    assert collapse(x, "fixed") == {0: 1, 1: 1}
    with pytest.raises(ValueError):
        collapse(x, "other")


def test_series_keys_respect_cutoff():
    s = BigradedSeries(2, {RHO * 2: 1, RHO: 1})
    assert all(d.p <= 2 for d in s.terms)
    assert s[RHO * 2] == 0


@given(series(), series())
def test_series_mul_commutes(x, y):
    assert series_mul(x, y) == series_mul(y, x)


@given(series(), series(), series())
def test_series_mul_associates(x, y, z):
    assert series_mul(series_mul(x, y), z) == series_mul(x, series_mul(y, z))


@given(series(cutoff=100), series(cutoff=100), st.sampled_from(["total", "fixed"]))
def test_collapse_is_multiplicative(x, y, mode):
    # a cutoff far above every key, so truncation plays no part
    lhs = collapse(series_mul(x, y), mode)
    rhs = series1_mul(collapse(x, mode), collapse(y, mode), 100)
    assert lhs == rhs


@given(series(), series())
def test_total_collapse_is_multiplicative_up_to_cutoff(x, y):
    lhs = collapse(series_mul(x, y), "total")
    assert lhs == series1_mul(collapse(x, "total"), collapse(y, "total"), 6)
