"""Builders and checkers for the product identities the package verifies.

Each ``*_rhs`` function constructs, term by term, the right-hand side of one
stated identity for the deformed stuffle product; the matching ``check_*``
wrapper compares it structurally against the product engine and returns a
:class:`VerifyReport`. Exact checks compare Elements; numeric checks route
both sides through the truncated evaluator at the same cutoff.

Compositions appearing in the closed forms are ordered sequences of positive
multiples of p with prescribed total weight and, where stated, a prescribed
number of entries that are even multiples of p. Empty composition sets
silently contribute nothing, which removes the degenerate summation cells
without special-casing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import BadParamsError
from .exact import (
    GaussianRational,
    ONE_MINUS_2T,
    POLY_ONE,
    T2_MINUS_T,
    TPoly,
    binom,
    factorial,
)
from .products import stuffle_classical, stuffle_combinatorial, stuffle_o, stuffle_t
from .words import Element, _iadd, word_of_index, z_word
from .zeta import EvalConfig, mzv, z_t_eval


@dataclass
class VerifyReport:
    """Outcome of one identity check; failing reports always carry a witness."""

    statement: str
    params: dict
    passed: bool
    witness: dict | None = None

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise ValueError("failing report requires a witness")

    def to_json_obj(self) -> dict:
        return {
            "statement": self.statement,
            "params": self.params,
            "passed": self.passed,
            "witness": self.witness,
        }


def element_comparison(statement: str, params: Mapping, lhs: Element, rhs: Element) -> VerifyReport:
    ok = lhs == rhs
    witness = None if ok else {"lhs": lhs.to_json_obj(), "rhs": rhs.to_json_obj()}
    return VerifyReport(statement, dict(params), ok, witness)


def numeric_comparison(statement: str, params: Mapping, values: Mapping[str, float], tol: float) -> VerifyReport:
    vals = list(values.values())
    diff = max((abs(a - b) for a, b in combinations(vals, 2)), default=0.0)
    witness = {**values, "max_diff": diff, "tolerance": tol}
    return VerifyReport(statement, dict(params), diff <= tol, witness)


def _compositions(total: int, length: int, even_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``length`` positive integers, in
    lexicographic order; with ``even_parts`` set, exactly that many entries
    are even."""
    if length == 0:
        if total == 0 and even_parts in (None, 0):
            yield ()
        return
    for first in range(1, total - (length - 1) + 1):
        if even_parts is None:
            rest_even = None
        else:
            rest_even = even_parts - (1 - first % 2)
            if rest_even < 0 or rest_even > length - 1:
                continue
        for rest in _compositions(total - first, length - 1, rest_even):
            yield (first,) + rest


Bracket = list[tuple[str, TPoly]]


def _add_composition_tails(
    out: dict[str, TPoly],
    bracket: Bracket,
    scale: TPoly,
    units: int,
    length: int,
    even_parts: int,
    p: int,
) -> None:
    # bracket * z_{a_1} ... z_{a_length} over all compositions; a_w = r_w * p
    for comp in _compositions(units, length, even_parts):
        tail = word_of_index(r * p for r in comp)
        for bword, bcoeff in bracket:
            _iadd(out, bword + tail, bcoeff * scale)


def power_product_rhs(m: int, n: int, p: int) -> Element:
    """Closed form of z_p^m * z_p^n.

    Sums over 0 <= k <= min(m, n) and splits i + j = k; the cell carries
    binom(m+n-2k, m-k) (t^2-t)^i (1-2t)^j and all words z_{a_1}...z_{a_L}
    with L = m+n-i-k, every a a positive multiple of p totalling (m+n)p, and
    exactly j entries an even multiple of p.
    """
    if m < 0 or n < 0 or p < 1:
        raise BadParamsError(f"need m, n >= 0 and p >= 1, got {(m, n, p)}")
    out: dict[str, TPoly] = {}
    for k in range(min(m, n) + 1):
        cb = binom(m + n - 2 * k, m - k)
        if cb == 0:
            continue
        for i in range(k + 1):
            j = k - i
            scale = T2_MINUS_T**i * ONE_MINUS_2T**j * cb
            _add_composition_tails(out, [("", POLY_ONE)], scale, m + n, m + n - i - k, j, p)
    return Element._unsafe(out)


def closed_form_rhs(m: int, u: int, p: int, n: int, v: int) -> Element:
    """Fully explicit three-family expansion of z_m z_p^n * z_u z_p^v.

    Two mirror families peel l >= 1 tail letters behind one head, the third
    family handles the two heads directly; each family multiplies a short
    bracket (head words, one (1-2t)-merged word, one guarded x-run word) by
    the composition sums of :func:`power_product_rhs` shape.
    """
    if m < 2 or u < 2 or p < 1 or n < 0 or v < 0:
        raise BadParamsError(f"need m, u >= 2, p >= 1, n, v >= 0, got {(m, u, p, n, v)}")
    out: dict[str, TPoly] = {}

    def family(head: int, other: int, count: int, other_count: int) -> None:
        # peel l letters of the tail z_p^count behind `head`; the bracket ends
        # in z_other / z_{other+p} / x^{other+p}
        for l in range(1, count + 1):
            for k in range(min(other_count, count - l) + 1):
                cb = binom(v + n - l - 2 * k, other_count - k)
                if cb == 0:
                    continue
                bracket: Bracket = [
                    (word_of_index((head,) + (p,) * l + (other,)), POLY_ONE),
                    (word_of_index((head,) + (p,) * (l - 1) + (other + p,)), ONE_MINUS_2T),
                ]
                if not (other_count == 0 and count == l):
                    bracket.append(
                        (word_of_index((head,) + (p,) * (l - 1)) + "x" * (other + p), T2_MINUS_T)
                    )
                for i in range(k + 1):
                    j = k - i
                    scale = T2_MINUS_T**i * ONE_MINUS_2T**j * cb
                    _add_composition_tails(out, bracket, scale, n + v - l, v + n - l - i - k, j, p)

    family(m, u, n, v)
    family(u, m, v, n)

    for k in range(min(n, v) + 1):
        cb = binom(v + n - 2 * k, n - k)
        if cb == 0:
            continue
        bracket = [
            (word_of_index((m, u)), POLY_ONE),
            (word_of_index((u, m)), POLY_ONE),
            (word_of_index((m + u,)), ONE_MINUS_2T),
        ]
        if not (n == 0 and v == 0):
            bracket.append(("x" * (m + u), T2_MINUS_T))
        for i in range(k + 1):
            j = k - i
            scale = T2_MINUS_T**i * ONE_MINUS_2T**j * cb
            _add_composition_tails(out, bracket, scale, n + v, v + n - i - k, j, p)
    return Element._unsafe(out)


def recursive_rhs(m: int, u: int, p: int, n: int, v: int) -> Element:
    """Head-splitting form of z_m z_p^n * z_u z_p^v: brackets as in
    :func:`closed_form_rhs` but with the tail products z_p^a * z_p^b left to
    the product engine."""
    if m < 1 or u < 1 or p < 1 or n < 0 or v < 0:
        raise BadParamsError(f"need m, u, p >= 1 and n, v >= 0, got {(m, u, p, n, v)}")
    out: dict[str, TPoly] = {}

    def zp_pow(count: int) -> str:
        return word_of_index((p,) * count)

    def family(head: int, other: int, count: int, other_count: int) -> None:
        for i in range(1, count + 1):
            bracket: Bracket = [
                (word_of_index((head,) + (p,) * i + (other,)), POLY_ONE),
                (word_of_index((head,) + (p,) * (i - 1) + (other + p,)), ONE_MINUS_2T),
            ]
            if not (other_count == 0 and count == i):
                bracket.append(
                    (word_of_index((head,) + (p,) * (i - 1)) + "x" * (other + p), T2_MINUS_T)
                )
            inner = stuffle_t(zp_pow(other_count), zp_pow(count - i))
            for bword, bcoeff in bracket:
                for w, c in inner.items():
                    _iadd(out, bword + w, bcoeff * c)

    family(m, u, n, v)
    family(u, m, v, n)

    bracket = [
        (word_of_index((m, u)), POLY_ONE),
        (word_of_index((u, m)), POLY_ONE),
        (word_of_index((m + u,)), ONE_MINUS_2T),
    ]
    if not (n == 0 and v == 0):
        bracket.append(("x" * (m + u), T2_MINUS_T))
    inner = stuffle_t(zp_pow(n), zp_pow(v))
    for bword, bcoeff in bracket:
        for w, c in inner.items():
            _iadd(out, bword + w, bcoeff * c)
    return Element._unsafe(out)


def head_tail_rhs(head: int, p: int, k: int, m: int) -> Element:
    """Expansion of z_head z_p^k * z_p^m as sum over how many of the m tail
    letters pass the head (the l = 0 bracket keeps only its leading term,
    reading z_p^(-1) as 0)."""
    if head < 2 or p < 1 or k < 0 or m < 0:
        raise BadParamsError(f"need head >= 2, p >= 1, k, m >= 0, got {(head, p, k, m)}")
    out: dict[str, TPoly] = {}
    for l in range(m + 1):
        bracket: Bracket = [(word_of_index((p,) * l + (head,)), POLY_ONE)]
        if l >= 1:
            bracket.append((word_of_index((p,) * (l - 1) + (head + p,)), ONE_MINUS_2T))
            if not (k == 0 and m == l):
                bracket.append(
                    (word_of_index((p,) * (l - 1)) + "x" * (head + p), T2_MINUS_T)
                )
        inner = stuffle_t(word_of_index((p,) * k), word_of_index((p,) * (m - l)))
        for bword, bcoeff in bracket:
            for w, c in inner.items():
                _iadd(out, bword + w, bcoeff * c)
    return Element._unsafe(out)


def pivot_rhs(idx1: Iterable[int], idx2: Iterable[int], j: int) -> Element:
    """Recursion that splits the left word at its j-th letter.

    For each cut position i of the right word, the part of the left word
    before letter j is combined with the right prefix by the open product
    (whose x-ended words are completed by what follows), letter j either
    stands alone or merges with the i-th right letter, and the suffixes are
    combined by the deformed product. Empty prefixes count as the unit; the
    merge term is dropped at i = 0.
    """
    i1 = tuple(int(a) for a in idx1)
    i2 = tuple(int(a) for a in idx2)
    if any(a < 1 for a in i1 + i2) or not i1:
        raise BadParamsError(f"indices must be nonempty over positive parts, got {(i1, i2)}")
    m, n = len(i1), len(i2)
    if not 1 <= j <= m:
        raise BadParamsError(f"need 1 <= j <= {m}, got {j}")
    prefix1 = word_of_index(i1[: j - 1])
    kj = i1[j - 1]
    suffix1 = word_of_index(i1[j:])
    out: dict[str, TPoly] = {}
    for i in range(n + 1):
        tail = stuffle_t(suffix1, word_of_index(i2[i:]))
        plain = stuffle_o(prefix1, word_of_index(i2[:i]))
        zk = z_word(kj)
        for ow, oc in plain.items():
            for tw, tc in tail.items():
                _iadd(out, ow + zk + tw, oc * tc)
        if i >= 1:
            li = i2[i - 1]
            merged = stuffle_o(prefix1, word_of_index(i2[: i - 1]))
            bracket: Bracket = [(z_word(kj + li), ONE_MINUS_2T)]
            if not (i == n and j == m):
                bracket.append(("x" * (kj + li), T2_MINUS_T))
            for ow, oc in merged.items():
                for bword, bcoeff in bracket:
                    for tw, tc in tail.items():
                        _iadd(out, ow + bword + tw, oc * bcoeff * tc)
    return Element._unsafe(out)


def alternating_sum_lhs(p: int, k: int) -> Element:
    if p < 1 or k < 1:
        raise BadParamsError(f"need p, k >= 1, got {(p, k)}")
    total: dict[str, TPoly] = {}
    for a in range(k + 1):
        sign = Fraction((-1) ** a)
        prod = stuffle_t(word_of_index((p,) * a), word_of_index((p,) * (k - a)))
        for w, c in prod.items():
            _iadd(total, w, c * sign)
    return Element._unsafe(total)


def alternating_sum_rhs(p: int, k: int) -> Element:
    """Zero for odd k; for even k the signed double sum over (t^2-t)^{l1}
    (1-2t)^{l2} of all words of length l2 whose entries are even multiples of
    p totalling kp."""
    if p < 1 or k < 1:
        raise BadParamsError(f"need p, k >= 1, got {(p, k)}")
    if k % 2:
        return Element.zero()
    half = k // 2
    sign = Fraction((-1) ** half)
    out: dict[str, TPoly] = {}
    for l2 in range(half + 1):
        l1 = half - l2
        scale = T2_MINUS_T**l1 * ONE_MINUS_2T**l2 * sign
        for comp in _compositions(half, l2):
            word = word_of_index(2 * s * p for s in comp)
            _iadd(out, word, scale)
    return Element._unsafe(out)


def alternating_sum_check(p: int, k: int) -> VerifyReport:
    return element_comparison(
        "alternating", {"p": p, "k": k}, alternating_sum_lhs(p, k), alternating_sum_rhs(p, k)
    )


def alternating_t_special_check(p: int, k: int) -> VerifyReport:
    """At t = 0 the alternating sum collapses to (-1)^(k/2) z_{2p}^{k/2} and at
    t = 1 to +z_{2p}^{k/2} (even k)."""
    if p < 1 or k < 2 or k % 2:
        raise BadParamsError(f"need p >= 1 and even k >= 2, got {(p, k)}")
    half = k // 2
    lhs = alternating_sum_lhs(p, k)
    word = word_of_index((2 * p,) * half)
    want0 = Element.from_word(word, Fraction((-1) ** half))
    want1 = Element.from_word(word)
    got0 = lhs.eval_at(Fraction(0))
    got1 = lhs.eval_at(Fraction(1))
    ok = got0 == want0 and got1 == want1
    witness = None
    if not ok:
        witness = {
            "at0": got0.to_json_obj(),
            "want0": want0.to_json_obj(),
            "at1": got1.to_json_obj(),
            "want1": want1.to_json_obj(),
        }
    return VerifyReport("alternating-t-special", {"p": p, "k": k}, ok, witness)


def alternating_numeric_check(p: int, k: int, cutoff: int, tol: float = 1e-4) -> VerifyReport:
    """Truncated-sum version: sum of (-1)^a zeta({p}^a) zeta({p}^{k-a}) against
    (-1)^(k/2) zeta({2p}^{k/2}); needs p >= 2 for convergence."""
    if p < 2 or k < 2 or k % 2:
        raise BadParamsError(f"need p >= 2 and even k >= 2, got {(p, k)}")
    cfg = EvalConfig(cutoff)

    def power_val(count: int) -> float:
        return 1.0 if count == 0 else mzv((p,) * count, cfg)

    lhs = sum((-1) ** a * power_val(a) * power_val(k - a) for a in range(k + 1))
    rhs = (-1) ** (k // 2) * mzv((2 * p,) * (k // 2), cfg)
    return numeric_comparison(
        "alternating-numeric", {"p": p, "k": k, "cutoff": cutoff}, {"lhs": lhs, "rhs": rhs}, tol
    )


def factorial_identity_check(k: int) -> VerifyReport:
    """Exact check of sum_{a+b=k} (-1)^a / ((2a+1)!(2b+1)!) ==
    (-1)^(k/2) 2^(k+1) / (2k+2)! for even k."""
    if k < 2 or k % 2:
        raise BadParamsError(f"need even k >= 2, got {k}")
    lhs = sum(
        Fraction((-1) ** a) / (factorial(2 * a + 1) * factorial(2 * (k - a) + 1))
        for a in range(k + 1)
    )
    rhs = Fraction((-1) ** (k // 2)) * Fraction(2 ** (k + 1)) / factorial(2 * k + 2)
    ok = lhs == rhs
    witness = {"lhs": str(lhs), "rhs": str(rhs)}
    return VerifyReport("factorial", {"k": k}, ok, witness)


def gaussian_identity_check(l: int) -> VerifyReport:
    """Exact Gaussian-rational identity: the fourfold factorial sum with
    powers of sqrt(-1) equals the real alternating sum, with imaginary part
    exactly zero."""
    if l < 1:
        raise BadParamsError(f"need l >= 1, got {l}")
    total = GaussianRational()
    target = 4 * l
    for n0 in range(target + 1):
        for n1 in range(target - n0 + 1):
            for n2 in range(target - n0 - n1 + 1):
                n3 = target - n0 - n1 - n2
                denom = (
                    factorial(2 * n0 + 1)
                    * factorial(2 * n1 + 1)
                    * factorial(2 * n2 + 1)
                    * factorial(2 * n3 + 1)
                )
                unit = GaussianRational.i_power(n1 + 2 * n2 + 3 * n3)
                total = total + GaussianRational(unit.re / denom, unit.im / denom)
    rhs = sum(
        (
            Fraction((-1) ** a) * Fraction(2 ** (4 * l + 2))
            / (factorial(4 * a + 2) * factorial(8 * l - 4 * a + 2))
            for a in range(2 * l + 1)
        ),
        Fraction(0),
    )
    ok = total.is_real and total.re == rhs
    witness = {"lhs_re": str(total.re), "lhs_im": str(total.im), "rhs": str(rhs)}
    return VerifyReport("gaussian", {"l": l}, ok, witness)


def decomposition_numeric_check(
    m: int, u: int, p: int, n: int, v: int, t0: float, cutoff: int, tol: float = 1e-3
) -> VerifyReport:
    """Numeric form of the decomposition: the product of the two interpolated
    values against the evaluated product Element and the evaluated explicit
    expansion, all at the same cutoff."""
    if m < 2 or u < 2:
        raise BadParamsError(f"numeric check needs admissible heads m, u >= 2, got {(m, u)}")
    w1 = word_of_index((m,) + (p,) * n)
    w2 = word_of_index((u,) + (p,) * v)
    cfg = EvalConfig(cutoff, t0)
    values = {
        "product": z_t_eval(w1, cfg) * z_t_eval(w2, cfg),
        "engine": z_t_eval(stuffle_t(w1, w2), cfg),
        "explicit": z_t_eval(closed_form_rhs(m, u, p, n, v), cfg),
    }
    return numeric_comparison(
        "decomposition",
        {"m": m, "u": u, "p": p, "n": n, "v": v, "t0": t0, "cutoff": cutoff},
        values,
        tol,
    )


def check_power_product(m: int, n: int, p: int) -> VerifyReport:
    lhs = stuffle_t(word_of_index((p,) * m), word_of_index((p,) * n))
    return element_comparison(
        "power-product", {"m": m, "n": n, "p": p}, lhs, power_product_rhs(m, n, p)
    )


def check_closed_form(m: int, u: int, p: int, n: int, v: int) -> VerifyReport:
    lhs = stuffle_t(word_of_index((m,) + (p,) * n), word_of_index((u,) + (p,) * v))
    return element_comparison(
        "closed-form",
        {"m": m, "u": u, "p": p, "n": n, "v": v},
        lhs,
        closed_form_rhs(m, u, p, n, v),
    )


def check_recursive(m: int, u: int, p: int, n: int, v: int) -> VerifyReport:
    lhs = stuffle_t(word_of_index((m,) + (p,) * n), word_of_index((u,) + (p,) * v))
    return element_comparison(
        "recursive",
        {"m": m, "u": u, "p": p, "n": n, "v": v},
        lhs,
        recursive_rhs(m, u, p, n, v),
    )


def check_head_tail(head: int, p: int, k: int, m: int) -> VerifyReport:
    lhs = stuffle_t(word_of_index((head,) + (p,) * k), word_of_index((p,) * m))
    return element_comparison(
        "head-tail", {"head": head, "p": p, "k": k, "m": m}, lhs, head_tail_rhs(head, p, k, m)
    )


def check_pivot(idx1: tuple[int, ...], idx2: tuple[int, ...], j: int) -> VerifyReport:
    lhs = stuffle_t(word_of_index(idx1), word_of_index(idx2))
    return element_comparison(
        "pivot",
        {"left": list(idx1), "right": list(idx2), "j": j},
        lhs,
        pivot_rhs(idx1, idx2, j),
    )


def check_combinatorial(idx1: tuple[int, ...], idx2: tuple[int, ...]) -> VerifyReport:
    lhs = stuffle_t(word_of_index(idx1), word_of_index(idx2))
    return element_comparison(
        "combinatorial",
        {"left": list(idx1), "right": list(idx2)},
        lhs,
        stuffle_combinatorial(idx1, idx2),
    )


def check_t0_reduction(idx1: tuple[int, ...], idx2: tuple[int, ...]) -> VerifyReport:
    lhs = stuffle_t(word_of_index(idx1), word_of_index(idx2)).eval_at(Fraction(0))
    return element_comparison(
        "t0-reduction",
        {"left": list(idx1), "right": list(idx2)},
        lhs,
        stuffle_classical(idx1, idx2),
    )
