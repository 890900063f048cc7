import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from c2steenrod.coefficients import Laurent, PosMonomial
from c2steenrod.grading import ONE, RHO, SIGMA, ParseError, RepDegree
from c2steenrod.steenrod import (
    IDENTITY,
    Config,
    SteenrodElement,
    act_element,
    act_on_u_power,
    adem_reduce,
    admissible_basis,
    classical_specialize,
    commute,
    conjugate,
    coproduct,
    excess,
    excess_filter,
    instability_filter,
    is_admissible,
    module_basis,
    multiply,
    parse_element,
    sq,
    sq_degree,
    t_word,
    true_left_action,
    word_degree,
)

ONE_C, U, A = PosMonomial(0, 0), PosMonomial(0, 1), PosMonomial(1, 0)
COHERENT = Config(relations="coherent")
words = st.lists(st.integers(1, 6), min_size=0, max_size=4).map(tuple)


def elem(*pairs):
    return SteenrodElement.of(pairs)


def test_sq_degree():
    assert sq_degree(0) == RepDegree()
    assert sq_degree(2) == RHO
    assert sq_degree(3) == RHO + ONE


@pytest.mark.parametrize("word,expect", [
    ((1, 2), elem((ONE_C, (3,)))),
    ((2, 2), elem((U, (3, 1)))),
    ((3, 2), elem((A, (3, 1)))),
    ((2, 4), elem((ONE_C, (6,)), (U, (5, 1)))),
])
def test_adem_examples(word, expect):
    assert adem_reduce(word) == expect
    assert str(adem_reduce((2, 2))) == "u*Sq[3,1]"


def test_multiply_examples():
    x = parse_element("u*Sq[3,1] + Sq[4]")
    assert multiply(IDENTITY, x) == x == multiply(x, IDENTITY)
    assert not multiply(sq(1), sq(1))
    assert not multiply(sq(1), sq(3))


@pytest.mark.parametrize("relations", ["printed", "coherent"])
def test_outputs_are_admissible_and_homogeneous(relations):
    cfg = Config(relations=relations)
    for w in itertools.product(range(1, 7), repeat=3):
        x = adem_reduce(w, config=cfg)
        assert all(is_admissible(v) for _, v in x.terms)
        assert x.degrees() <= {word_degree(w)}


def test_coherent_relations_are_confluent():
    ws = [w for L in (2, 3, 4) for w in itertools.product(range(1, 8), repeat=L) if sum(w) <= 14]
    for w in ws:
        assert adem_reduce(w, config=COHERENT) == adem_reduce(w, config=COHERENT, strategy="rightmost"), w


def test_printed_relations_are_not_confluent():
    # the documented counterexample for the printed a-terms
    w = (4, 4, 3)
    assert adem_reduce(w) != adem_reduce(w, strategy="rightmost")
    assert adem_reduce(w, config=COHERENT) == adem_reduce(w, config=COHERENT, strategy="rightmost")


def test_variants_differ_only_in_a_terms():
    for i in range(1, 8):
        for j in range(1, 8):
            p = classical_specialize(adem_reduce((i, j)))
            c = classical_specialize(adem_reduce((i, j), config=COHERENT))
            assert p == c


def test_coherent_sq2_on_odd():
    # Sq^2 Sq^n for odd n >= 3 gains a Sq^n Sq^1 term
    assert adem_reduce((2, 5), config=COHERENT) == elem((ONE_C, (6, 1)), (A, (5, 1)))


def random_element(rng):
    pairs = []
    for _ in range(rng.randint(1, 2)):
        w = tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 2)))
        c = PosMonomial(rng.randint(0, 2), rng.randint(0, 3))
        pairs.extend((c, v) for d, v in adem_reduce(w, config=COHERENT).terms)
    return SteenrodElement.of(pairs)


def test_coherent_product_is_associative():
    rng = random.Random(7)
    for _ in range(150):
        x, y, z = (random_element(rng) for _ in range(3))
        lhs = multiply(multiply(x, y, COHERENT), z, COHERENT)
        rhs = multiply(x, multiply(y, z, COHERENT), COHERENT)
        assert lhs == rhs


def left_apply(element, i, j):
    """Act on a^i u^j from the left with the true action, letters right to left."""
    total: set = set()
    for c, w in element.terms:
        cur = {PosMonomial(i, j)}
        for k in reversed(w):
            nxt: set = set()
            for m in cur:
                nxt ^= set(true_left_action(k, m.i, m.j))
            cur = nxt
        total ^= {PosMonomial(c.i + m.i, c.j + m.j) for m in cur}
    return total


def test_coherent_algebra_acts_on_the_left():
    for w in itertools.product(range(1, 6), repeat=2):
        raw = SteenrodElement.__new__(SteenrodElement)
        object.__setattr__(raw, "terms", frozenset({(ONE_C, w)}))
        for i, j in itertools.product(range(3), range(6)):
            assert left_apply(raw, i, j) == left_apply(adem_reduce(w, config=COHERENT), i, j), (w, i, j)


def test_true_action_differs_from_lemma_from_sq3():
    assert true_left_action(3, 0, 2) == {PosMonomial(3, 0)}
    assert not act_on_u_power(2, 3)


def test_commute_moves_coefficients_left():
    # Sq^1 * u = u Sq^1 + a
    assert commute((1,), U) == {(U, (1,)), (A, ())}


def test_classical_shadow_matches_oracle():
    for i in range(1, 11):
        for j in range(1, 11):
            assert set(classical_specialize(adem_reduce((i, j)))) == oracles.classical_adem_pair(i, j)


def test_classical_specialize_examples():
    assert classical_specialize(elem((U, (3, 1)))) == {(3, 1)}
    assert classical_specialize(elem((A, (3, 1)))) == set()
    assert classical_specialize(adem_reduce((2, 2))) == {(3, 1)}


@pytest.mark.parametrize("n", range(21))
def test_basis_rank_matches_classical_dimension(n):
    assert len(admissible_basis(index_sum=n)) == oracles.milnor_count(n)
    assert admissible_basis(index_sum=n) == sorted(oracles.admissible_sequences(n))


def test_basis_examples():
    assert admissible_basis(index_sum=3) == [(2, 1), (3,)]
    assert admissible_basis(RepDegree()) == [()]
    assert admissible_basis(index_sum=5) == [(4, 1), (5,)]
    assert admissible_basis(RHO + ONE) == [(2, 1), (3,)]
    assert admissible_basis(RHO * 2 + ONE) == [(4, 1), (5,)]


def test_module_basis_degrees():
    d = RHO * 2
    for c, w in module_basis(d):
        assert c.degree + word_degree(w) == d
    assert (ONE_C, (4,)) in module_basis(d)
    assert (U, (3, 1)) in module_basis(d)


def test_coproduct_examples_and_balance():
    assert str(coproduct(1)) == "Sq[](x)Sq[1] + Sq[1](x)Sq[]"
    assert coproduct(2).terms == {(ONE_C, (), (2,)), (ONE_C, (2,), ()), (U, (1,), (1,))}
    assert coproduct(0).terms == {(ONE_C, (), ())}
    for k in range(13):
        for c, x, y in coproduct(k).terms:
            assert c.degree + word_degree(x) + word_degree(y) == sq_degree(k)


def test_conjugation():
    assert conjugate(1) == sq(1)
    assert conjugate(2) == sq(2)
    assert conjugate(3) == elem((ONE_C, (2, 1)))
    assert act_element(Laurent.mono(0, 2), conjugate(3)) == Laurent.mono(3, 0)


@pytest.mark.parametrize("k", range(1, 9))
def test_conjugation_satisfies_antipode_identity(k):
    total = SteenrodElement()
    for c, x, y in coproduct(k).terms:
        left = SteenrodElement.of([(c, x)])
        right = conjugate(y[0]) if y else IDENTITY
        total = total + multiply(left, right)
    assert not total


def test_conjugation_classical_shadow():
    # classical conjugates: chi(Sq^4) = Sq^4 + Sq^3Sq^1, chi(Sq^5) = Sq^4Sq^1
    assert classical_specialize(conjugate(4)) == {(4,), (3, 1)}
    assert classical_specialize(conjugate(5)) == {(4, 1)}


def test_lemma_values():
    assert act_on_u_power(1, 1) == Laurent.mono(1, 0)
    assert act_on_u_power(-1, 2) == Laurent.mono(2, -2)
    assert not act_on_u_power(2, 1)
    assert act_on_u_power(2, 2) == Laurent.mono(2, 1)


@given(st.integers(-8, 8), st.integers(0, 8))
def test_lemma_is_degree_homogeneous(n, k):
    source = RepDegree(n, -n) + sq_degree(k)
    for m in act_on_u_power(n, k).terms:
        assert m.degree == source


def test_right_action_examples():
    u2 = Laurent.mono(0, 2)
    assert act_element(u2, (2, 1)) == Laurent.mono(3, 0)
    assert not act_element(u2, (1, 2))
    for k in range(1, 6):
        assert not act_element(Laurent.mono(), (k,))


def test_right_action_ignores_adem_relations():
    # Sq^3 Sq^2 = a Sq^3 Sq^1 as operations, yet they act differently on u^3
    x = Laurent.mono(0, 3)
    assert not act_element(x, (3, 2))
    assert act_element(x, adem_reduce((3, 2))) == Laurent.mono(5, 0)


def test_frobenius_rule_on_a():
    a = Laurent.mono(1, 0)
    assert not act_element(a, (1,))
    assert act_element(a, (1,), Config(sq_on_a="frobenius")) == Laurent.mono(2, 0)
    # Cartan: Sq^2(a a) = u Sq^1 a Sq^1 a
    assert act_element(Laurent.mono(2, 0), (2,), Config(sq_on_a="frobenius")) == Laurent.mono(4, 1)


def test_axiom_three():
    for k in range(11):
        assert not adem_reduce((1, 2 * k + 1))


def test_excess_examples():
    assert excess((1,)) == ONE
    assert excess((3, 1)) == ONE * 2
    assert excess((2,)) == RHO
    assert excess((3,)) == ONE * 2 + SIGMA
    with pytest.raises(ValueError):
        excess((1, 2))


def test_excess_matches_closed_form_and_bound():
    for w in admissible_basis(bound=14):
        e = excess(w)
        assert (e.r, e.s) == oracles.equivariant_excess(w)
        assert e.r <= e.s


def test_excess_filter_examples():
    assert excess_filter(SIGMA, 14) == []
    assert excess_filter(ONE, 7) == [(1,), (2, 1), (4, 2, 1)]
    assert excess_filter(SIGMA * 2, 14) == []
    assert excess_filter(2, 12) == sorted(oracles.total_excess_family(2, 12))


def test_t_words():
    assert t_word(1, 3) == (4, 2, 1)
    assert t_word(3, 2) == (6, 3)
    assert t_word(5, 0) == ()


def test_instability_filter_examples():
    assert not instability_filter(sq(2), SIGMA)
    assert instability_filter(sq(2), RHO) == sq(2)
    assert instability_filter(sq(4), RepDegree(1, 3)) == sq(4)


def test_instability_checks_inner_letters():
    # Sq^4 Sq^2 on a class of degree sigma: the inner Sq^2 already dies
    x = elem((ONE_C, (4, 2)))
    assert not instability_filter(x, SIGMA)
    assert instability_filter(x, RHO) == x


def test_odd_squares_follow_their_even_part():
    assert not instability_filter(sq(3), SIGMA)
    assert instability_filter(sq(3), RHO) == sq(3)


@given(words)
@settings(max_examples=60)
def test_text_and_json_round_trip(w):
    x = adem_reduce(w, PosMonomial(1, 1))
    assert parse_element(str(x)) == x
    assert SteenrodElement.from_json(x.to_json()) == x


@pytest.mark.parametrize("text,token", [("Sq[2,x]", "x"), ("b*Sq[1]", "b"), ("Sq[1", "Sq[1")])
def test_parse_errors(text, token):
    with pytest.raises(ParseError) as err:
        parse_element(text)
    assert err.value.token == token


def test_stored_words_must_be_admissible():
    with pytest.raises(ValueError):
        SteenrodElement(frozenset({(ONE_C, (1, 2))}))
    with pytest.raises(ValueError):
        SteenrodElement.word(2, 2)
