"""Truncated numerical evaluation of (interpolated) multiple zeta values.

``mzv`` computes the nested sum of prod m_i^(-k_i) over
cutoff >= m_1 > ... > m_n >= 1 by inner-to-outer prefix sums — O(depth *
cutoff) time and O(cutoff) space instead of the naive O(cutoff^depth) nested
loops. ``mzv_star`` uses weak inequalities. ``zeta_t_boxes`` sums all
2^(n-1) comma/plus contractions of the index, weighting a contraction that
merges down to depth d by t0^(n-d). ``z_t_eval`` instead routes an algebra
element through the last-letter-fixed substitution map and evaluates each
resulting word; the two must agree at equal cutoff.

Identities are always compared with both sides truncated at the same
cutoff, so the slowly decaying truncation error largely cancels.

Evaluations are cached per (index, cutoff); everything is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import DivergentError, NotInH0Error
from .interpolation import s_t
from .words import Element, index_of_word


@dataclass(frozen=True)
class EvalConfig:
    """Truncation cutoff for the outermost summation variable, plus the value
    of the interpolation parameter."""

    cutoff: int
    t0: float = 0.0

    def __post_init__(self) -> None:
        if self.cutoff < 1:
            raise ValueError(f"cutoff must be >= 1, got {self.cutoff}")


def _require_admissible(idx: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(k) for k in idx)
    if not parts or parts[0] < 2 or any(k < 1 for k in parts):
        raise DivergentError(f"index {parts} is not admissible (needs k_1 >= 2, all parts >= 1)")
    return parts


@lru_cache(maxsize=None)
def _truncated(parts: tuple[int, ...], cutoff: int, strict: bool) -> float:
    vals = np.arange(1, cutoff + 1, dtype=np.float64)
    cur = None
    for k in reversed(parts):
        powers = vals ** float(-k)
        if cur is None:
            cur = powers
        else:
            prefix = np.cumsum(cur)
            if strict:
                prefix = np.concatenate(([0.0], prefix[:-1]))
            cur = powers * prefix
    return float(cur.sum())


def clear_cache() -> None:
    _truncated.cache_clear()


def mzv(idx: Iterable[int], cfg: EvalConfig) -> float:
    """Truncated multiple zeta value of an admissible index."""
    return _truncated(_require_admissible(idx), cfg.cutoff, True)


def mzv_star(idx: Iterable[int], cfg: EvalConfig) -> float:
    """Truncated zeta-star value (weak inequalities between the summation
    variables)."""
    return _truncated(_require_admissible(idx), cfg.cutoff, False)


def zeta_t_boxes(idx: Iterable[int], cfg: EvalConfig) -> float:
    """Interpolated value by direct contraction enumeration.

    Every way of replacing commas of (k_1, ..., k_n) by plus signs yields a
    contracted index p evaluated as a plain truncated sum, weighted by
    t0^(n - dep(p)).
    """
    parts = _require_admissible(idx)
    n = len(parts)
    total = 0.0
    for mask in range(1 << (n - 1)):
        contracted = [parts[0]]
        merges = 0
        for gap in range(n - 1):
            if mask >> gap & 1:
                contracted[-1] += parts[gap + 1]
                merges += 1
            else:
                contracted.append(parts[gap + 1])
        total += cfg.t0 ** merges * _truncated(tuple(contracted), cfg.cutoff, True)
    return total


def z_t_eval(a: str | Element, cfg: EvalConfig) -> float:
    """Interpolated evaluation through the last-letter-fixed map.

    Every word of the mapped element must be empty or admissible (start x,
    end y); otherwise :class:`NotInH0Error` is raised.
    """
    mapped = s_t(a)
    total = 0.0
    for word, coeff in mapped.sorted_items():
        value = coeff.eval_float(cfg.t0)
        if word == "":
            total += value
            continue
        if not word.startswith("x") or not word.endswith("y"):
            raise NotInH0Error(f"word {word!r} is not admissible")
        total += value * _truncated(index_of_word(word), cfg.cutoff, True)
    return total
