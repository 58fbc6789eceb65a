"""Free trace algebra: normal forms, products, the trace, substitution."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tracealg.freetrace import (CyclicWord, TracePoly, formal_trace,
                                least_rotation, mul, normalize,
                                parse_trace_poly, substitute, x)


def brute_least_rotation(w):
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


class TestNormalize:
    def test_rotation_to_least(self):
        assert normalize([2, 3, 1]).representative == (1, 2, 3)

    def test_trace_of_product_is_rotation_invariant(self):
        # tr(x1 x2) and tr(x2 x1) are the same symbol
        assert normalize([1, 2]) == normalize([2, 1])

    def test_empty_word_is_the_trace_of_one(self):
        cw = normalize([])
        assert cw.representative == () and cw.length == 0
        assert str(cw) == "tr(1)"

    def test_uv_equals_vu_exhaustive(self):
        words = [(), (1,), (2,), (1, 2), (2, 2), (1, 1, 2)]
        for u in words:
            for v in words:
                assert normalize(u + v) == normalize(v + u)

    @given(st.lists(st.integers(min_value=1, max_value=4), max_size=9))
    @settings(max_examples=120)
    def test_booth_matches_bruteforce(self, letters):
        w = tuple(letters)
        assert least_rotation(w) == brute_least_rotation(w)

    @given(st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=7),
           st.integers(min_value=0, max_value=6))
    @settings(max_examples=80)
    def test_all_rotations_agree(self, letters, shift):
        w = tuple(letters)
        k = shift % len(w)
        assert normalize(w) == normalize(w[k:] + w[:k])


class TestMul:
    def test_trace_factor_commutes_past_words(self):
        p = (formal_trace(x(1)) * x(1)) * x(1)
        assert p.terms == {((1, 1), ((1,),)): Fraction(1)}

    def test_one_is_the_unit(self):
        p = x(1) * x(2) + 3 * formal_trace(x(1))
        assert TracePoly.one() * p == p
        assert p * TracePoly.one() == p

    def test_words_do_not_commute(self):
        square = (x(1) + x(2)) * (x(1) + x(2))
        expected = (TracePoly.word([1, 1]) + TracePoly.word([1, 2])
                    + TracePoly.word([2, 1]) + TracePoly.word([2, 2]))
        assert square == expected
        assert len(square.terms) == 4


class TestFormalTrace:
    def test_trace_pulls_out_trace_factors(self):
        p = formal_trace(x(1)) * x(2)
        assert formal_trace(p) == formal_trace(x(1)) * formal_trace(x(2))

    def test_trace_kills_commutators(self):
        assert formal_trace(x(1) * x(2) - x(2) * x(1)) == TracePoly.zero()

    def test_trace_of_one_stays_formal(self):
        t1 = formal_trace(TracePoly.one())
        assert t1.terms == {((), ((),)): Fraction(1)}
        assert t1 != TracePoly.scalar(1)


class TestSubstitute:
    def test_inside_trace_symbols(self):
        assert substitute(formal_trace(x(1)), {1: x(1) * x(1)}) == \
            formal_trace(TracePoly.word([1, 1]))

    def test_to_zero(self):
        p = x(1) + formal_trace(x(1))
        assert substitute(p, {1: TracePoly.zero()}) == TracePoly.zero()

    def test_unmapped_variable_is_named(self):
        with pytest.raises(ValueError, match="x2"):
            substitute(x(1) * x(2), {1: x(1)})

    def test_identity_map(self):
        p = 2 * x(1) * x(2) - formal_trace(x(1) * x(2)) * x(1)
        assert substitute(p, {1: x(1), 2: x(2)}) == p


# -- randomized algebraic laws -------------------------------------------------

small_rational = st.fractions(min_value=-3, max_value=3, max_denominator=6)


@st.composite
def trace_polys(draw):
    n_terms = draw(st.integers(min_value=0, max_value=3))
    p = TracePoly.zero()
    for _ in range(n_terms):
        word = tuple(draw(st.lists(st.integers(1, 3), max_size=2)))
        n_traces = draw(st.integers(min_value=0, max_value=2))
        traces = [tuple(draw(st.lists(st.integers(1, 3), min_size=1, max_size=2)))
                  for _ in range(n_traces)]
        coeff = draw(small_rational)
        term = TracePoly.scalar(coeff) * TracePoly.word(word)
        for t in traces:
            term = term * formal_trace(TracePoly.word(t))
        p = p + term
    return p


@given(trace_polys(), trace_polys(), trace_polys())
@settings(max_examples=50, deadline=None)
def test_mul_is_associative_and_distributive(p, q, r):
    assert mul(mul(p, q), r) == mul(p, mul(q, r))
    assert mul(p, q + r) == mul(p, q) + mul(p, r)


@given(trace_polys(), trace_polys())
@settings(max_examples=50, deadline=None)
def test_trace_axiom_on_products(p, q):
    # t(t(a) b) = t(a) t(b)
    assert formal_trace(formal_trace(p) * q) == formal_trace(p) * formal_trace(q)


@given(trace_polys(), trace_polys())
@settings(max_examples=40, deadline=None)
def test_substitute_is_a_trace_homomorphism(p, q):
    mapping = {1: x(2) * x(1), 2: x(1) + formal_trace(x(3)), 3: TracePoly.scalar(2)}
    assert substitute(mul(p, q), mapping) == \
        mul(substitute(p, mapping), substitute(q, mapping))
    assert substitute(formal_trace(p), mapping) == \
        formal_trace(substitute(p, mapping))


@given(trace_polys())
@settings(max_examples=60, deadline=None)
def test_render_parse_roundtrip(p):
    assert parse_trace_poly(p.render()) == p


class TestRendering:
    def test_word_powers_and_traces(self):
        p = formal_trace(x(1)) ** 2 * TracePoly.word([1, 1, 2])
        assert p.render() == "tr(x1)^2*x1^2*x2"

    def test_zero(self):
        assert TracePoly.zero().render() == "0"

    def test_rational_coefficients(self):
        p = TracePoly.scalar(Fraction(-1, 2)) * formal_trace(TracePoly.word([1, 1]))
        assert p.render() == "-1/2*tr(x1^2)"

    def test_bare_x_parses_as_x1(self):
        assert parse_trace_poly("x^2 - tr(x)*x") == \
            TracePoly.word([1, 1]) - formal_trace(x(1)) * x(1)
