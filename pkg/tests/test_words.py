"""Unit tests for words, indices, and Elements."""

import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmzv.errors import NotInH1Error
from tmzv.exact import ONE_MINUS_2T, POLY_ZERO, T2_MINUS_T, TPoly
from tmzv.words import (
    Element,
    delta,
    display_word,
    index_of_word,
    is_admissible,
    weight,
    word_of_index,
    z_word,
)

h1_words = st.lists(st.integers(1, 5), max_size=4).map(word_of_index)
raw_words = st.text(alphabet="xy", max_size=6)
small_coeffs = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=9), max_size=4
).map(TPoly)
elements = st.lists(st.tuples(raw_words, small_coeffs), max_size=5).map(Element)


class TestWords:
    def test_word_of_index(self):
        assert word_of_index((2,)) == "xy"
        assert word_of_index((2, 1)) == "xyy"
        assert word_of_index(()) == ""
        assert z_word(4) == "xxxy"

    def test_word_of_index_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            word_of_index((2, 0, 1))

    def test_index_of_word(self):
        assert index_of_word("xyy") == (2, 1)
        assert index_of_word("") == ()
        assert index_of_word("xxxy") == (4,)

    def test_index_of_word_rejects_trailing_x(self):
        with pytest.raises(NotInH1Error):
            index_of_word("xyx")

    def test_index_of_word_rejects_bad_letters(self):
        with pytest.raises(ValueError):
            index_of_word("xay")

    def test_roundtrip_exhaustive(self):
        # every index with parts <= 6 and depth <= 6
        for depth in range(7):
            for idx in product(range(1, 7), repeat=depth):
                assert index_of_word(word_of_index(idx)) == idx

    def test_delta(self):
        assert delta("") == 1
        assert delta("xy") == 0
        assert delta("y") == 0

    def test_admissible_and_weight(self):
        assert is_admissible((2, 1))
        assert not is_admissible((1, 2))
        assert not is_admissible(())
        assert weight((2, 1, 3)) == 6

    def test_display(self):
        assert display_word("") == "1"
        assert display_word("xyy") == "z2 z1"
        assert display_word("xx") == "xx"


class TestElement:
    def test_cancellation(self):
        z2 = Element.from_word("xy")
        assert (z2 + z2.scale(-1)).is_zero

    def test_scale(self):
        e = Element.from_word("xxxxy", ONE_MINUS_2T)
        assert e.coeff("xxxxy") == ONE_MINUS_2T
        assert e.scale(POLY_ZERO).is_zero
        assert e.scale(0).is_zero

    def test_concat_absorbs_x_runs(self):
        assert Element.from_word("xxx") * Element.from_word("y") == Element.from_word("xxxy")

    def test_concat_identity(self):
        w = Element.from_word("xyy")
        assert Element.one() * w == w
        assert w * Element.one() == w

    def test_concat_coefficients_multiply(self):
        left = Element.from_word("xy", ONE_MINUS_2T)
        right = Element.from_word("xxy", T2_MINUS_T)
        out = left * right
        assert out == Element.from_word("xyxxy", ONE_MINUS_2T * T2_MINUS_T)

    @given(elements, elements, elements)
    def test_concat_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(h1_words, h1_words)
    def test_weight_additive_on_h1(self, u, v):
        merged = index_of_word(u + v)
        assert weight(merged) == weight(index_of_word(u)) + weight(index_of_word(v))

    def test_eval_at(self):
        e = Element.from_word("xxxxy", ONE_MINUS_2T)
        assert e.eval_at(Fraction(1, 2)).is_zero
        assert Element.from_word("xxy", T2_MINUS_T).eval_at(Fraction(0)).is_zero
        assert e.eval_at(Fraction(0)) == Element.from_word("xxxxy")

    def test_canonical_order_is_length_lex(self):
        e = Element([("yy", TPoly((1,))), ("y", TPoly((1,))), ("xy", TPoly((1,)))])
        assert [w for w, _ in e.sorted_items()] == ["y", "xy", "yy"]

    def test_text_rendering(self):
        e = Element([("xyy", TPoly((1, -2))), ("xx", TPoly((0, -1, 1)))])
        assert e.to_text() == "(-t + t^2) xx + (1 - 2t) z2 z1"
        assert Element.zero().to_text() == "0"
        assert Element.one().to_text() == "(1) 1"

    def test_json_shape(self):
        e = Element.from_word("xyy", TPoly((1, -2)))
        assert e.to_json_obj() == {"terms": [{"word": "xyy", "coeff": ["1/1", "-2/1"]}]}

    @given(elements)
    def test_json_roundtrip(self, e):
        through = Element.from_json_obj(json.loads(json.dumps(e.to_json_obj())))
        assert through == e

    def test_accumulating_constructor(self):
        e = Element([("xy", TPoly((1,))), ("xy", TPoly((-1,)))])
        assert e.is_zero

    def test_sum(self):
        parts = [Element.from_word("xy"), Element.from_word("y"), Element.from_word("xy")]
        total = Element.sum(parts)
        assert total.coeff("xy") == TPoly((2,))
        assert total.coeff("y") == TPoly((1,))
