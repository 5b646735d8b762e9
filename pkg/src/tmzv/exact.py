"""Exact scalar arithmetic: rationals, dense polynomials in t, Gaussian rationals.

Rationals are plain :class:`fractions.Fraction` values (arbitrary precision,
stored normalized with positive denominator), re-exported as ``Rational``.
``TPoly`` is a dense polynomial in the interpolation variable t with rational
coefficients, the coefficient ring for everything the word algebra does.
``GaussianRational`` adjoins the imaginary unit for the one identity that
needs powers of sqrt(-1).

All values are immutable and all operations are pure, so they can be shared
freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_neg(a: Fraction) -> Fraction:
    return -a


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise ZeroDivisionError("division of rationals by zero")
    return a / b


def format_rational(q: Fraction) -> str:
    """Serialize as "num/den", denominator always present."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or a plain integer string."""
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return Fraction(math.factorial(n))


def binom(a: int, b: int) -> Fraction:
    """Binomial coefficient with the zero convention outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return _ZERO
    return Fraction(math.comb(a, b))


class TPoly:
    """Dense univariate polynomial in t over the rationals.

    ``coeffs[d]`` is the coefficient of t^d; trailing zeros are stripped, so
    the zero polynomial stores an empty tuple and ``degree`` is
    ``len(coeffs) - 1`` for everything else.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()) -> None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Fraction | int) -> "TPoly":
        return cls((c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for d, c in enumerate(b):
            out[d] += c
        return TPoly(out)

    def __neg__(self) -> "TPoly":
        return TPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "TPoly | Fraction | int") -> "TPoly":
        if isinstance(other, (Fraction, int)):
            return TPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return POLY_ZERO
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = POLY_ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def eval(self, t0: Fraction) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def eval_float(self, t0: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * t0 + float(c)
        return acc

    def to_json(self) -> list[str]:
        """Coefficients as "num/den" strings, ascending powers of t."""
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Iterable[str]) -> "TPoly":
        return cls(tuple(parse_rational(s) for s in items))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = _fmt_coeff(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{_fmt_coeff(mag)}{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"TPoly({self.coeffs!r})"


def _fmt_coeff(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


POLY_ZERO = TPoly()
POLY_ONE = TPoly.const(1)
POLY_T = TPoly((0, 1))
ONE_MINUS_2T = TPoly((1, -2))
T2_MINUS_T = TPoly((0, -1, 1))


@dataclass(frozen=True)
class GaussianRational:
    """Element of Q(i) with componentwise equality."""

    re: Fraction = _ZERO
    im: Fraction = _ZERO

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @staticmethod
    def i_power(e: int) -> "GaussianRational":
        """The imaginary unit raised to an integer power."""
        table = (
            GaussianRational(_ONE, _ZERO),
            GaussianRational(_ZERO, _ONE),
            GaussianRational(-_ONE, _ZERO),
            GaussianRational(_ZERO, -_ONE),
        )
        return table[e % 4]
