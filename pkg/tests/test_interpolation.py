"""Unit tests for the letter substitution maps."""

from fractions import Fraction
from itertools import product

from tmzv.exact import POLY_T, TPoly
from tmzv.interpolation import s_t, sigma_t
from tmzv.words import Element


def all_words(max_len):
    yield ""
    for length in range(1, max_len + 1):
        for letters in product("xy", repeat=length):
            yield "".join(letters)


class TestSigma:
    def test_fixes_x(self):
        assert sigma_t("x") == Element.from_word("x")

    def test_expands_y(self):
        assert sigma_t("y") == Element([("x", POLY_T), ("y", TPoly((1,)))])

    def test_multiplicative(self):
        got = sigma_t("xy")
        want = Element([("xx", POLY_T), ("xy", TPoly((1,)))])
        assert got == want
        # sigma(w1 w2) = sigma(w1) sigma(w2)
        for w1, w2 in (("xy", "yy"), ("y", "xyx")):
            assert sigma_t(w1 + w2) == sigma_t(w1) * sigma_t(w2)

    def test_empty(self):
        assert sigma_t("") == Element.one()


class TestLastLetterFixedMap:
    def test_single_letters_fixed(self):
        assert s_t("") == Element.one()
        assert s_t("x") == Element.from_word("x")
        assert s_t("y") == Element.from_word("y")

    def test_prefix_without_y_is_fixed(self):
        assert s_t("xy") == Element.from_word("xy")
        assert s_t("xxxy") == Element.from_word("xxxy")

    def test_hand_expansion(self):
        # z2 z1 -> t z3 + z2 z1
        assert s_t("xyy") == Element([("xxy", POLY_T), ("xyy", TPoly((1,)))])

    def test_linear(self):
        e = Element([("xyy", TPoly((1,))), ("xy", TPoly((0, 2)))])
        assert s_t(e) == s_t("xyy") + s_t("xy").scale(TPoly((0, 2)))

    def test_preserves_length_and_last_letter(self):
        for word in all_words(6):
            for out in s_t(word).words():
                assert len(out) == len(word)
                if word:
                    assert out[-1] == word[-1]

    def test_admissible_words_stay_admissible(self):
        for word in all_words(6):
            if not (word.startswith("x") and word.endswith("y")):
                continue
            for out in s_t(word).words():
                assert out.startswith("x") and out.endswith("y")

    def test_identity_at_zero(self):
        zero = TPoly.const(0)
        for word in all_words(5):
            assert s_t(word, zero) == Element.from_word(word)

    def test_numeric_parameters_compose_additively(self):
        points = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2)]
        for word in all_words(6):
            for s, u in product(points, repeat=2):
                twice = s_t(s_t(word, TPoly.const(u)), TPoly.const(s))
                assert twice == s_t(word, TPoly.const(s + u)), (word, s, u)
