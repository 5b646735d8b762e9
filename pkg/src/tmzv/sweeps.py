"""Named verification sweeps over parameter ranges, plus randomized property
suites.

Every sweep returns a list of :class:`VerifyReport` in a fixed parameter
order. ``max_size`` is the single size knob: at its default of 3 each sweep
covers its full shipped range. Sweeps are embarrassingly parallel; set the
``TMZV_THREADS`` environment variable above 1 to fan checks out over worker
threads (ordering is still fixed by parameter order, not completion order).
"""

from __future__ import annotations

import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Iterable, Iterator

from .exact import TPoly
from .identities import (
    VerifyReport,
    alternating_numeric_check,
    alternating_sum_check,
    alternating_t_special_check,
    check_closed_form,
    check_combinatorial,
    check_head_tail,
    check_pivot,
    check_power_product,
    check_recursive,
    check_t0_reduction,
    decomposition_numeric_check,
    factorial_identity_check,
    gaussian_identity_check,
)
from .interpolation import s_t
from .products import stuffle_combinatorial, stuffle_o, stuffle_t
from .words import Element, index_of_word, is_admissible, weight, word_of_index
from .zeta import EvalConfig, mzv, mzv_star, z_t_eval, zeta_t_boxes


def thread_count() -> int:
    raw = os.environ.get("TMZV_THREADS", "").strip()
    if not raw:
        return 1
    return max(1, int(raw))


def _run(jobs: Iterable[Callable[[], VerifyReport]]) -> list[VerifyReport]:
    jobs = list(jobs)
    threads = thread_count()
    if threads <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda job: job(), jobs))


def indices_up_to(max_depth: int, max_part: int, include_empty: bool = False) -> Iterator[tuple[int, ...]]:
    """All index tuples with the given bounds, ascending depth then
    lexicographic."""
    if include_empty:
        yield ()
    for depth in range(1, max_depth + 1):
        yield from iproduct(range(1, max_part + 1), repeat=depth)


def sweep_recursive(max_size: int = 3) -> list[VerifyReport]:
    rng = range(1, max_size + 1)
    tails = range(0, max_size + 1)
    return _run(
        (lambda m=m, u=u, p=p, n=n, v=v: check_recursive(m, u, p, n, v))
        for m, u, p, n, v in iproduct(rng, rng, rng, tails, tails)
    )


def sweep_closed_form(max_size: int = 3) -> list[VerifyReport]:
    heads = range(2, max(2, max_size) + 1)
    ps = range(1, max(1, max_size - 1) + 1)
    tails = range(0, max_size + 1)
    return _run(
        (lambda m=m, u=u, p=p, n=n, v=v: check_closed_form(m, u, p, n, v))
        for m, u, p, n, v in iproduct(heads, heads, ps, tails, tails)
    )


def sweep_power_product(max_size: int = 3) -> list[VerifyReport]:
    bound = 2 * max_size + 2
    jobs = []
    for p in range(1, max_size + 1):
        for m in range(bound + 1):
            for n in range(bound - m + 1):
                jobs.append(lambda m=m, n=n, p=p: check_power_product(m, n, p))
    return _run(jobs)


def sweep_head_tail(max_size: int = 3) -> list[VerifyReport]:
    return _run(
        (lambda head=head, p=p, k=k, m=m: check_head_tail(head, p, k, m))
        for head, p, k, m in iproduct(
            range(2, max(2, max_size) + 1),
            range(1, max(1, max_size - 1) + 1),
            range(0, max(0, max_size - 1) + 1),
            range(0, max_size + 2),
        )
    )


def sweep_pivot(max_size: int = 3) -> list[VerifyReport]:
    pairs = list(indices_up_to(max_size, max_size))
    jobs = []
    for idx1 in pairs:
        for idx2 in pairs:
            for j in range(1, len(idx1) + 1):
                jobs.append(lambda a=idx1, b=idx2, j=j: check_pivot(a, b, j))
    return _run(jobs)


def sweep_alternating(max_size: int = 3) -> list[VerifyReport]:
    jobs = []
    for p in range(1, max(1, max_size - 1) + 1):
        for k in range(1, 2 * max_size + 3):
            jobs.append(lambda p=p, k=k: alternating_sum_check(p, k))
            if k >= 2 and k % 2 == 0:
                jobs.append(lambda p=p, k=k: alternating_t_special_check(p, k))
    return _run(jobs)


def sweep_combinatorial(max_size: int = 3) -> list[VerifyReport]:
    pairs = list(indices_up_to(max_size, max_size, include_empty=True))
    return _run(
        (lambda a=a, b=b: check_combinatorial(a, b)) for a in pairs for b in pairs
    )


def sweep_t0_reduction(max_size: int = 3) -> list[VerifyReport]:
    pairs = list(indices_up_to(max_size, max_size, include_empty=True))
    return _run(
        (lambda a=a, b=b: check_t0_reduction(a, b)) for a in pairs for b in pairs
    )


def sweep_zeta_formulas() -> list[VerifyReport]:
    """Truncated evaluations against the closed pi-power formulas."""
    from .identities import numeric_comparison

    reports = []
    for k in (1, 2, 3):
        cfg = EvalConfig(100_000)
        started = time.perf_counter()
        value = mzv((2,) * k, cfg)
        elapsed = time.perf_counter() - started
        expected = math.pi ** (2 * k) / math.factorial(2 * k + 1)
        reports.append(
            numeric_comparison(
                "zeta-formulas",
                {"index": [2] * k, "cutoff": cfg.cutoff, "seconds": round(elapsed, 4)},
                {"truncated": value, "closed_form": expected},
                1e-4,
            )
        )
    for k in (1, 2):
        cfg = EvalConfig(10_000)
        started = time.perf_counter()
        value = mzv((4,) * k, cfg)
        elapsed = time.perf_counter() - started
        expected = 2 ** (2 * k + 1) * math.pi ** (4 * k) / math.factorial(4 * k + 2)
        reports.append(
            numeric_comparison(
                "zeta-formulas",
                {"index": [4] * k, "cutoff": cfg.cutoff, "seconds": round(elapsed, 4)},
                {"truncated": value, "closed_form": expected},
                1e-8,
            )
        )
    return reports


def admissible_indices(max_weight: int, max_depth: int) -> Iterator[tuple[int, ...]]:
    def extend(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        if prefix:
            yield prefix
        if len(prefix) == max_depth:
            return
        lo = 2 if not prefix else 1
        for part in range(lo, remaining + 1):
            yield from extend(prefix + (part,), remaining - part)

    yield from extend((), max_weight)


def sweep_box_map(cutoff: int = 10_000) -> list[VerifyReport]:
    """Contraction enumeration against the mapped evaluation at equal cutoff,
    plus the t = 0 and t = 1 endpoint reductions."""
    from .identities import numeric_comparison

    reports = []
    for idx in admissible_indices(8, 4):
        word = word_of_index(idx)
        for t0 in (0.0, 0.5, 1.0, -1.0):
            cfg = EvalConfig(cutoff, t0)
            values = {"boxes": zeta_t_boxes(idx, cfg), "mapped": z_t_eval(word, cfg)}
            tol = 1e-10
            if t0 == 0.0:
                values["plain"] = mzv(idx, cfg)
                tol = 1e-12
            elif t0 == 1.0:
                values["star"] = mzv_star(idx, cfg)
                tol = 1e-12
            reports.append(
                numeric_comparison(
                    "box-map", {"index": list(idx), "t0": t0, "cutoff": cutoff}, values, tol
                )
            )
    return reports


def sweep_decomposition(cutoff: int = 100_000) -> list[VerifyReport]:
    return _run(
        (
            lambda m=m, u=u, p=p, n=n, v=v, t0=t0: decomposition_numeric_check(
                m, u, p, n, v, t0, cutoff
            )
        )
        for m, u, p, n, v, t0 in iproduct(
            (2, 3), (2, 3), (1, 2), (0, 1), (0, 1), (0.0, 0.5, 1.0)
        )
    )


def sweep_alternating_numeric(cutoff: int = 10_000) -> list[VerifyReport]:
    return [alternating_numeric_check(2, k, cutoff) for k in (2, 4)]


def sweep_factorial(max_k: int = 12) -> list[VerifyReport]:
    return [factorial_identity_check(k) for k in range(2, max_k + 1, 2)]


def sweep_gaussian(max_l: int = 3) -> list[VerifyReport]:
    return [gaussian_identity_check(l) for l in range(1, max_l + 1)]


# ---------------------------------------------------------------------------
# randomized property suites


def _random_index(rng: random.Random, max_depth: int, max_part: int, admissible: bool = False) -> tuple[int, ...]:
    depth = rng.randint(1 if admissible else 0, max_depth)
    if depth == 0:
        return ()
    first = rng.randint(2 if admissible else 1, max_part)
    return (first,) + tuple(rng.randint(1, max_part) for _ in range(depth - 1))


def _suite(statement: str, seed: int, cases: int, body: Callable[[random.Random], dict | None]) -> VerifyReport:
    rng = random.Random(seed)
    for case in range(cases):
        witness = body(rng)
        if witness is not None:
            witness["case"] = case
            return VerifyReport(statement, {"seed": seed, "cases": cases}, False, witness)
    return VerifyReport(statement, {"seed": seed, "cases": cases}, True)


def _prop_commutativity(rng: random.Random) -> dict | None:
    a = _random_index(rng, 3, 4)
    b = _random_index(rng, 3, 4)
    wa, wb = word_of_index(a), word_of_index(b)
    if stuffle_t(wa, wb) != stuffle_t(wb, wa):
        return {"left": list(a), "right": list(b), "product": "deformed"}
    if stuffle_o(wa, wb) != stuffle_o(wb, wa):
        return {"left": list(a), "right": list(b), "product": "open"}
    forward = stuffle_combinatorial(a, b)
    if forward != stuffle_combinatorial(b, a) or forward != stuffle_t(wa, wb):
        return {"left": list(a), "right": list(b), "product": "combinatorial"}
    return None


def _prop_admissibility(rng: random.Random) -> dict | None:
    a = _random_index(rng, 3, 4, admissible=True)
    b = _random_index(rng, 3, 4, admissible=True)
    result = stuffle_t(word_of_index(a), word_of_index(b))
    for word in result.words():
        if not word.endswith("y") or not is_admissible(index_of_word(word)):
            return {"left": list(a), "right": list(b), "word": word}
    return None


def _prop_weight(rng: random.Random) -> dict | None:
    a = _random_index(rng, 3, 4)
    b = _random_index(rng, 3, 4)
    target = weight(a) + weight(b)
    result = stuffle_t(word_of_index(a), word_of_index(b))
    for word in result.words():
        if weight(index_of_word(word)) != target:
            return {"left": list(a), "right": list(b), "word": word, "want": target}
    return None


_MAP_POINTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2))


def _prop_maps(rng: random.Random) -> dict | None:
    word = "".join(rng.choice("xy") for _ in range(rng.randint(0, 7)))
    mapped = s_t(word)
    for out in mapped.words():
        if len(out) != len(word) or (word and out[-1] != word[-1]):
            return {"word": word, "mapped": out}
    if s_t(word, TPoly.const(0)) != Element.from_word(word):
        return {"word": word, "law": "t0-identity"}
    s, u = rng.choice(_MAP_POINTS), rng.choice(_MAP_POINTS)
    twice = s_t(s_t(word, TPoly.const(u)), TPoly.const(s))
    if twice != s_t(word, TPoly.const(s + u)):
        return {"word": word, "law": "composition", "s": str(s), "u": str(u)}
    if word.startswith("x") and word.endswith("y"):
        for out in mapped.words():
            if not (out.startswith("x") and out.endswith("y")):
                return {"word": word, "mapped": out, "law": "admissible"}
    return None


def _prop_roundtrip(rng: random.Random) -> dict | None:
    terms = []
    for _ in range(rng.randint(0, 5)):
        word = "".join(rng.choice("xy") for _ in range(rng.randint(0, 6)))
        coeffs = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(0, 4))
        ]
        terms.append((word, TPoly(coeffs)))
    elem = Element(terms)
    again = Element.from_json_obj(elem.to_json_obj())
    if again != elem:
        return {"element": elem.to_json_obj()}
    if elem.to_text() != elem.to_text():
        return {"element": elem.to_json_obj(), "law": "deterministic-text"}
    return None


def sweep_properties(seed: int = 0, cases: int = 1000) -> list[VerifyReport]:
    suites = (
        ("properties:commutativity", _prop_commutativity),
        ("properties:admissibility", _prop_admissibility),
        ("properties:weight", _prop_weight),
        ("properties:maps", _prop_maps),
        ("properties:roundtrip", _prop_roundtrip),
    )
    return [
        _suite(name, seed * 1000 + offset, cases, body)
        for offset, (name, body) in enumerate(suites)
    ]


SWEEPS: dict[str, Callable[..., list[VerifyReport]]] = {
    "recursive": sweep_recursive,
    "closed-form": sweep_closed_form,
    "power-product": sweep_power_product,
    "head-tail": sweep_head_tail,
    "pivot": sweep_pivot,
    "alternating": sweep_alternating,
    "combinatorial": sweep_combinatorial,
    "t0-reduction": sweep_t0_reduction,
    "zeta-formulas": sweep_zeta_formulas,
    "box-map": sweep_box_map,
    "decomposition": sweep_decomposition,
    "alternating-numeric": sweep_alternating_numeric,
    "factorial": sweep_factorial,
    "gaussian": sweep_gaussian,
    "properties": sweep_properties,
}

_SIZE_SWEEPS = {
    "recursive",
    "closed-form",
    "power-product",
    "head-tail",
    "pivot",
    "alternating",
    "combinatorial",
    "t0-reduction",
}


def run_statement(
    name: str,
    max_size: int = 3,
    cutoff: int | None = None,
    seed: int = 0,
    cases: int = 1000,
) -> list[VerifyReport]:
    fn = SWEEPS[name]
    if name in _SIZE_SWEEPS:
        return fn(max_size)
    if name in ("box-map", "decomposition", "alternating-numeric") and cutoff is not None:
        return fn(cutoff)
    if name == "properties":
        return fn(seed=seed, cases=cases)
    return fn()


def run_all(max_size: int = 3, seed: int = 0, cases: int = 1000) -> dict[str, list[VerifyReport]]:
    return {name: run_statement(name, max_size=max_size, seed=seed, cases=cases) for name in SWEEPS}
