"""Interpolated multiple zeta values: word algebra, deformed stuffle products,
interpolation maps, truncated evaluators, and identity verification."""

from .errors import BadParamsError, DivergentError, NotInH0Error, NotInH1Error
from .exact import (
    GaussianRational,
    ONE_MINUS_2T,
    POLY_ONE,
    POLY_T,
    POLY_ZERO,
    Rational,
    T2_MINUS_T,
    TPoly,
    binom,
    factorial,
    format_rational,
    parse_rational,
    rat_add,
    rat_div,
    rat_mul,
    rat_neg,
)
from .identities import (
    VerifyReport,
    alternating_numeric_check,
    alternating_sum_check,
    alternating_sum_lhs,
    alternating_sum_rhs,
    alternating_t_special_check,
    check_closed_form,
    check_combinatorial,
    check_head_tail,
    check_pivot,
    check_power_product,
    check_recursive,
    check_t0_reduction,
    closed_form_rhs,
    decomposition_numeric_check,
    factorial_identity_check,
    gaussian_identity_check,
    head_tail_rhs,
    pivot_rhs,
    power_product_rhs,
    recursive_rhs,
)
from .interpolation import s_t, sigma_t
from .products import (
    clear_caches,
    stuffle_classical,
    stuffle_combinatorial,
    stuffle_o,
    stuffle_t,
)
from .sweeps import SWEEPS, run_all, run_statement, sweep_properties
from .words import (
    Element,
    delta,
    display_word,
    index_of_word,
    is_admissible,
    weight,
    word_of_index,
    z_word,
)
from .zeta import EvalConfig, clear_cache, mzv, mzv_star, z_t_eval, zeta_t_boxes

__version__ = "0.1.0"
