import pytest
from hypothesis import given
from hypothesis import strategies as st

from braid3.errors import WordSyntaxError
from braid3.words import (
    DELTA,
    HALF_TWIST,
    burau,
    closure_components,
    concat,
    cyclic_rotate,
    dual,
    exponent_sum,
    inverse,
    mirror,
    normalize_index,
    parse_word,
    render_word,
    shift_indices,
    to_artin,
    words_equal,
)
from conftest import words_st


def norm(i):
    return normalize_index(i)


class TestParsing:
    def test_bracketed(self):
        assert parse_word("[1 -2 3]") == (1, -2, 3)

    def test_empty(self):
        assert parse_word("") == ()
        assert parse_word("[]") == ()

    def test_powers(self):
        assert parse_word("1^3 2") == (1, 1, 1, 2)
        assert parse_word("2^0") == ()
        assert parse_word("2^-2") == (-2, -2)

    def test_commas(self):
        assert parse_word("1, -2, 3") == (1, -2, 3)

    def test_rejects_zero_and_big_index(self):
        with pytest.raises(WordSyntaxError):
            parse_word("[1 0 2]")
        with pytest.raises(WordSyntaxError):
            parse_word("[4]")
        with pytest.raises(WordSyntaxError):
            parse_word("[1 x]")

    def test_render(self):
        assert render_word((1, -2, 3)) == "[1 -2 3]"
        assert parse_word(render_word(())) == ()


class TestCounting:
    def test_exponent_sum(self):
        assert exponent_sum((1, -2, 3)) == 1
        assert exponent_sum(()) == 0
        assert exponent_sum((-2, -1, -3, -2, 1, 2, 3, 1, 2, 3, 1)) == 3

    def test_closure_components(self):
        assert closure_components(()) == 3
        assert closure_components((1, 2)) == 1
        assert closure_components((1, 1)) == 3

    @given(words_st)
    def test_component_parity(self, w):
        assert (closure_components(w) - (3 - exponent_sum(w))) % 2 == 0

    @given(words_st, st.integers(-5, 5))
    def test_components_rotation_mirror_invariant(self, w, k):
        assert closure_components(cyclic_rotate(w, k)) == closure_components(w)
        assert closure_components(mirror(w)) == closure_components(w)


class TestArtin:
    def test_runs(self):
        assert to_artin((3, 3)) == ((-1, 2, 2, 1), 4)
        assert to_artin((3,)) == ((-1, 2, 1), 3)
        assert to_artin((1, 2)) == ((1, 2), 2)
        assert to_artin((-3,)) == ((-1, -2, 1), 3)

    @given(words_st)
    def test_artin_word_is_equal_element(self, w):
        artin, count = to_artin(w)
        assert count == len(artin)
        assert all(abs(l) != 3 for l in artin)
        assert words_equal(w, artin)


class TestBurauEquality:
    def test_identity(self):
        m = burau(())
        assert m.exponent == 0
        assert m.a == burau((1, -1)).a

    def test_braid_relation(self):
        assert burau((1, 2, 1)) == burau((2, 1, 2))

    def test_step_i_relation(self):
        assert burau((1, -2)) == burau((-2, 3))

    def test_words_equal_examples(self):
        assert words_equal((1, -1), ())
        assert words_equal((1, 2, 1), (2, 1, 2))
        assert not words_equal((1,), (2,))

    @given(words_st, words_st, words_st)
    def test_equality_respects_common_affixes(self, a, b, c):
        if words_equal(a, b):
            assert words_equal(concat(a, c), concat(b, c))
            assert words_equal(concat(c, a), concat(c, b))

    def test_band_relations_all_indices(self):
        # s_{i+1} s_i is the same element for every i
        for i in (1, 2, 3):
            assert words_equal((norm(i + 1), norm(i)), DELTA)

    def test_exchange_rule_all_indices(self):
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                assert words_equal((i, -j), (-norm(i + 1), norm(j + 1)))

    def test_delta_commutation_all_indices(self):
        for i in (1, 2, 3):
            assert words_equal(concat((i,), DELTA), concat(DELTA, (norm(i + 1),)))

    def test_cancellation_rules_all_indices(self):
        for i in (1, 2, 3):
            assert words_equal(concat(inverse(DELTA), (norm(i + 1),)), (-i,))
            assert words_equal(concat((-i,), DELTA), (norm(i - 1),))

    def test_sigma3_expansion(self):
        assert words_equal((3,), (-1, 2, 1))
        assert words_equal((-3,), (-1, -2, 1))

    def test_half_twist_cube_relation(self):
        # Delta^2 s_{i+1}^{-1} s_i^{-1} s_{i-1}^{-1} = s_i^3
        d2 = HALF_TWIST * 2
        for i in (1, 2, 3):
            lhs = concat(d2, (-norm(i + 1), -norm(i), -norm(i - 1)))
            assert words_equal(lhs, (i,) * 3)

    def test_index_shift_is_delta_conjugation(self):
        w = (1, -2, 3, 3, -1)
        assert words_equal(concat(inverse(DELTA), w, DELTA), shift_indices(w, 1))


class TestSymmetries:
    def test_mirror_example(self):
        assert mirror((1, -2)) == (-1, 2)

    def test_mirror_expands_band_letters(self):
        # negating a band letter in place is not the diagram mirror
        assert mirror((3,)) == (1, -2, -1)
        assert not words_equal(mirror((1, 2, -3)), (-1, -2, 3))

    @given(words_st)
    def test_mirror_is_involution_up_to_equality(self, w):
        assert words_equal(mirror(mirror(w)), w)

    def test_inverse_example(self):
        assert inverse((1, 2)) == (-2, -1)

    def test_rotation_example(self):
        w = (-2, -1, -3, -2, 1, 2, 3, 1, 2, 3, -1)
        assert cyclic_rotate(w, -1) == (-1, -2, -1, -3, -2, 1, 2, 3, 1, 2, 3)

    @given(words_st)
    def test_exponent_sum_negates(self, w):
        assert exponent_sum(mirror(w)) == -exponent_sum(w)
        assert exponent_sum(inverse(w)) == -exponent_sum(w)

    @given(words_st)
    def test_inverse_cancels(self, w):
        assert words_equal(concat(w, inverse(w)), ())


class TestDual:
    def test_rejects_bad_exponent_sum(self):
        with pytest.raises(ValueError):
            dual((1,))

    def test_empty(self):
        assert dual(()) == ()

    def test_half_twist_square_is_self_dual(self):
        w = HALF_TWIST * 2
        assert words_equal(dual(w), w)

    @given(st.lists(st.sampled_from((1, 2, 3, -1, -2, -3)), max_size=8).map(tuple))
    def test_double_dual_is_identity_element(self, w):
        pad = (-exponent_sum(w)) % 6
        w = concat(w, (1,) * pad)
        assert words_equal(dual(dual(w)), w)
