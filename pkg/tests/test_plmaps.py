import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thompsonf.diagrams import EPSILON, from_word
from thompsonf.plmaps import (
    ONE,
    ZERO,
    Dyadic,
    compose_pl,
    dyadic,
    evaluate,
    evaluate_inverse,
    from_word_pl,
    generator_map,
    invert_pl,
    pl_equal,
    pl_identity,
    plmap,
)
from thompsonf.words import inverse_word, parse_word

letters = st.tuples(st.integers(min_value=0, max_value=3), st.sampled_from((1, -1)))
words = st.lists(letters, max_size=8).map(tuple)
dyadics = st.builds(
    dyadic,
    st.integers(min_value=-64, max_value=64),
    st.integers(min_value=0, max_value=5),
)


class TestDyadic:
    def test_normalization(self):
        assert dyadic(4, 2) == Dyadic(1, 0)
        assert dyadic(6, 1) == Dyadic(3, 0)
        assert dyadic(3, 2) == Dyadic(3, 2)
        assert dyadic(0, 7) == Dyadic(0, 0)
        assert dyadic(3, -2) == Dyadic(12, 0)  # negative exp multiplies out

    def test_constructor_guards(self):
        with pytest.raises(ValueError):
            Dyadic(4, 2)  # unnormalized
        with pytest.raises(ValueError):
            Dyadic(1, -1)

    def test_arithmetic(self):
        half = dyadic(1, 1)
        assert half + half == ONE
        assert half * half == dyadic(1, 2)
        assert ONE - half == half
        assert -half == dyadic(-1, 1)
        assert half.scale2(1) == ONE
        assert ONE.scale2(-1) == half

    def test_ordering(self):
        assert dyadic(1, 1) < ONE < dyadic(3, 1)
        assert dyadic(1, 1) <= dyadic(2, 2)
        assert not ONE < ONE

    def test_str_and_float(self):
        assert str(dyadic(3, 1)) == "3/2^1"
        assert float(dyadic(3, 1)) == 1.5
        assert dyadic(4, 1).as_integer() == 2
        with pytest.raises(ValueError):
            dyadic(1, 1).as_integer()

    @given(dyadics, dyadics)
    def test_add_commutes_and_orders(self, a, b):
        assert a + b == b + a
        assert (a < b) == (float(a) < float(b))


class TestGeneratorMaps:
    def test_f0_values(self):
        f0 = generator_map(0)
        assert evaluate(f0, dyadic(1, 1)) == ONE
        assert evaluate(f0, ONE) == dyadic(2)
        assert evaluate(f0, dyadic(3)) == dyadic(4)
        assert f0.tail_offset == 1

    def test_identity_below_support(self):
        f2 = generator_map(2)
        assert evaluate(f2, ONE) == ONE
        assert evaluate(f2, ZERO) == ZERO

    def test_tail_offsets(self):
        assert all(generator_map(i).tail_offset == 1 for i in range(6))

    def test_negative_subscript(self):
        with pytest.raises(ValueError):
            generator_map(-1)


class TestNormalization:
    def test_trailing_unit_slope_merges(self):
        f = plmap([(ZERO, ZERO), (ONE, dyadic(2)), (dyadic(2), dyadic(3))])
        assert f == generator_map(0)

    def test_collinear_dropped(self):
        f = plmap(
            [(ZERO, ZERO), (dyadic(1, 1), ONE), (ONE, dyadic(2)), (dyadic(2), dyadic(3))]
        )
        assert f == generator_map(0)

    def test_must_start_at_origin(self):
        with pytest.raises(ValueError):
            plmap([(ONE, ONE)])

    def test_slopes_must_be_powers_of_two(self):
        with pytest.raises(ValueError):
            plmap([(ZERO, ZERO), (dyadic(3), ONE)])
        with pytest.raises(ValueError):
            plmap([(ZERO, ZERO), (ONE, dyadic(3))])

    def test_must_increase(self):
        with pytest.raises(ValueError):
            plmap([(ZERO, ZERO), (ONE, ONE), (ONE, dyadic(2))])


class TestGroupStructure:
    def test_identity(self):
        assert from_word_pl(()) == pl_identity()
        assert pl_identity().points == ((ZERO, ZERO),)

    def test_rewriting_relation(self):
        assert compose_pl(generator_map(1), generator_map(0)) == compose_pl(
            generator_map(0), generator_map(2)
        )

    def test_relators_trivial(self):
        for conj_a, conj_b in (("x0 x0", "x0 x1"), ("x0 x0 x0", "x0 x0 x1")):
            lhs = (
                inverse_word(parse_word(conj_a))
                + parse_word("x1")
                + parse_word(conj_a)
            )
            rhs = (
                inverse_word(parse_word(conj_b))
                + parse_word("x1")
                + parse_word(conj_b)
            )
            assert pl_equal(from_word_pl(lhs), from_word_pl(rhs))
            assert from_word_pl(lhs + inverse_word(rhs)) == pl_identity()

    def test_generators_differ(self):
        assert not pl_equal(generator_map(0), generator_map(1))

    @given(words)
    @settings(max_examples=60)
    def test_inverse_cancels(self, w):
        f = from_word_pl(w)
        assert compose_pl(f, invert_pl(f)) == pl_identity()
        assert invert_pl(invert_pl(f)) == f

    @given(words, words)
    @settings(max_examples=60)
    def test_homomorphism(self, u, v):
        assert from_word_pl(u + v) == compose_pl(from_word_pl(u), from_word_pl(v))

    @given(words, dyadics)
    @settings(max_examples=60)
    def test_evaluate_round_trip(self, w, x):
        if x < ZERO:
            x = -x
        f = from_word_pl(w)
        assert evaluate_inverse(f, evaluate(f, x)) == x

    @given(words)
    @settings(max_examples=60)
    def test_tail_offset_counts_x_exponents(self, w):
        # every letter shifts the far tail by one
        assert from_word_pl(w).tail_offset == sum(s for _, s in w)


class TestCrossRepresentation:
    @given(words, words)
    @settings(max_examples=80)
    def test_equality_oracle_agreement(self, u, v):
        pl_same = pl_equal(from_word_pl(u), from_word_pl(v))
        diagram_same = from_word(u) == from_word(v)
        assert pl_same == diagram_same

    @given(words)
    @settings(max_examples=60)
    def test_triviality_agreement(self, w):
        assert (from_word_pl(w) == pl_identity()) == (from_word(w) == EPSILON)
