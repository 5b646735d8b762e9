"""Words over the two-letter alphabet {x, y} and their Q[t]-linear combinations.

A word is a plain string over ``"x"``/``"y"``; the empty string is the unit.
The encoding z_k = x^(k-1) y identifies an index (k_1, ..., k_n) of positive
integers with the word z_{k_1} ... z_{k_n}; the words that decompose this way
are exactly the ones ending in y (plus the empty word).

:class:`Element` is a finite linear combination of words with :class:`TPoly`
coefficients. Terms are keyed by the raw letter string, not by the index:
merge terms of the deformed products produce bare x-runs that only become
part of a z letter after further concatenation, and raw keys make that
absorption automatic.

Elements are treated as immutable; every operation builds a new value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import NotInH1Error
from .exact import POLY_ONE, POLY_ZERO, TPoly

Word = str


def z_word(k: int) -> str:
    """The word z_k = x^(k-1) y."""
    if k < 1:
        raise ValueError(f"z subscript must be positive, got {k}")
    return "x" * (k - 1) + "y"


def validate_word(word: str) -> str:
    for ch in word:
        if ch not in ("x", "y"):
            raise ValueError(f"letter {ch!r} not in alphabet {{x, y}}")
    return word


def word_of_index(parts: Iterable[int]) -> str:
    """Concatenation z_{k_1} ... z_{k_n}; the empty index gives the empty word."""
    return "".join(z_word(k) for k in parts)


def index_of_word(word: str) -> tuple[int, ...]:
    """Split a y-ended (or empty) word back into its index.

    Raises :class:`NotInH1Error` for words ending in x, which have no such
    decomposition.
    """
    validate_word(word)
    if word and not word.endswith("y"):
        raise NotInH1Error(f"word {word!r} ends in x")
    parts = []
    run = 0
    for ch in word:
        if ch == "x":
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    return tuple(parts)


def delta(word: str) -> int:
    """Indicator of the empty word."""
    return 1 if word == "" else 0


def weight(parts: Iterable[int]) -> int:
    return sum(parts)


def is_admissible(parts: tuple[int, ...]) -> bool:
    return len(parts) > 0 and parts[0] >= 2 and all(k >= 1 for k in parts)


def _canonical_key(word: str) -> tuple[int, str]:
    # length-lexicographic: deterministic display and serialization order
    return (len(word), word)


def _iadd(terms: dict[str, TPoly], word: str, coeff: TPoly) -> None:
    cur = terms.get(word)
    new = coeff if cur is None else cur + coeff
    if new.is_zero:
        terms.pop(word, None)
    else:
        terms[word] = new


CoeffLike = TPoly | Fraction | int


def _as_poly(c: CoeffLike) -> TPoly:
    return c if isinstance(c, TPoly) else TPoly.const(c)


class Element:
    """Finite Q[t]-linear combination of words; zero coefficients are pruned
    eagerly so that equality is structural."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, CoeffLike] | Iterable[tuple[str, CoeffLike]] = ()) -> None:
        data: dict[str, TPoly] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in pairs:
            validate_word(word)
            _iadd(data, word, _as_poly(coeff))
        self._terms = data

    @classmethod
    def _unsafe(cls, terms: dict[str, TPoly]) -> "Element":
        # fast path for internal callers that already pruned zeros
        elem = cls.__new__(cls)
        elem._terms = terms
        return elem

    @classmethod
    def zero(cls) -> "Element":
        return cls._unsafe({})

    @classmethod
    def one(cls) -> "Element":
        return cls._unsafe({"": POLY_ONE})

    @classmethod
    def from_word(cls, word: str, coeff: CoeffLike = POLY_ONE) -> "Element":
        validate_word(word)
        poly = _as_poly(coeff)
        return cls._unsafe({} if poly.is_zero else {word: poly})

    @classmethod
    def from_index(cls, parts: Iterable[int], coeff: CoeffLike = POLY_ONE) -> "Element":
        return cls.from_word(word_of_index(parts), coeff)

    def items(self) -> Iterator[tuple[str, TPoly]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[str, TPoly]]:
        return sorted(self._terms.items(), key=lambda kv: _canonical_key(kv[0]))

    def words(self) -> list[str]:
        return sorted(self._terms, key=_canonical_key)

    def coeff(self, word: str) -> TPoly:
        return self._terms.get(word, POLY_ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            _iadd(out, word, coeff)
        return Element._unsafe(out)

    def __neg__(self) -> "Element":
        return Element._unsafe({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff: CoeffLike) -> "Element":
        poly = _as_poly(coeff)
        if poly.is_zero:
            return Element.zero()
        return Element._unsafe({w: c * poly for w, c in self._terms.items()})

    def __mul__(self, other: "Element") -> "Element":
        """Concatenation product, extended bilinearly."""
        if not isinstance(other, Element):
            return NotImplemented
        out: dict[str, TPoly] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                _iadd(out, w1 + w2, c1 * c2)
        return Element._unsafe(out)

    def prepend_word(self, word: str) -> "Element":
        return Element._unsafe({word + w: c for w, c in self._terms.items()})

    def append_word(self, word: str) -> "Element":
        return Element._unsafe({w + word: c for w, c in self._terms.items()})

    def eval_at(self, t0: Fraction) -> "Element":
        """Specialize every coefficient at a rational point t0 (constants remain
        as degree-0 polynomials; vanishing terms are pruned)."""
        out: dict[str, TPoly] = {}
        for word, coeff in self._terms.items():
            value = coeff.eval(t0)
            if value != 0:
                out[word] = TPoly.const(value)
        return Element._unsafe(out)

    @staticmethod
    def sum(elems: Iterable["Element"]) -> "Element":
        out: dict[str, TPoly] = {}
        for elem in elems:
            for word, coeff in elem._terms.items():
                _iadd(out, word, coeff)
        return Element._unsafe(out)

    def to_text(self) -> str:
        """Human-readable form: terms joined by " + ", each "(poly) word" with
        y-ended words rendered in z-notation."""
        if self.is_zero:
            return "0"
        return " + ".join(f"({coeff}) {display_word(word)}" for word, coeff in self.sorted_items())

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"word": word, "coeff": coeff.to_json()}
                for word, coeff in self.sorted_items()
            ]
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Element":
        terms = obj["terms"]
        return cls((item["word"], TPoly.from_json(item["coeff"])) for item in terms)

    def __repr__(self) -> str:
        return f"Element<{self.to_text()}>"


def display_word(word: str) -> str:
    if word == "":
        return "1"
    if word.endswith("y"):
        return " ".join(f"z{k}" for k in index_of_word(word))
    return word
