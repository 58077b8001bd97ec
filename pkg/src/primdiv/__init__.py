"""Exact polynomial algebra for primitive divisors of polynomial Lucas, Lehmer
and ``f**n - g**n`` sequences over ``K[x1, ..., xr]``, ``K`` the rationals or F_p."""

from .cyclo import HomogBivar, SeedKind, SeedPair, cyclotomic_int, eval_symmetric, homog_family, power_sums
from .factor_fp import FactorizationFp, factor_fp, is_irreducible_fp, squarefree_decomp
from .gcd import gcd_with_known_divisor, is_coprime, mp_content_primpart, mp_gcd
from .mpoly import Monic, MPoly, RingSpec, mp_eval, mp_exact_div, mp_mul
from .polytext import format_poly, parse_poly
from .resultant import det_exact, lemma_forms, resultant, resultant_lemma_check, sylvester
from .sequences import (
    Kind,
    PrimitivePartReport,
    SequenceSpec,
    TermIndex,
    frobenius_check,
    has_primitive_divisor,
    lemma_coprime_check,
    primitive_part,
    seq_term,
    strong_div_check,
    valuation,
)
from .suites import SuiteConfig, SuiteReport, run_suite

__all__ = [
    "cyclotomic_int",
    "det_exact",
    "eval_symmetric",
    "factor_fp",
    "FactorizationFp",
    "format_poly",
    "frobenius_check",
    "gcd_with_known_divisor",
    "has_primitive_divisor",
    "homog_family",
    "HomogBivar",
    "is_coprime",
    "is_irreducible_fp",
    "Kind",
    "lemma_coprime_check",
    "lemma_forms",
    "Monic",
    "mp_content_primpart",
    "mp_eval",
    "mp_exact_div",
    "mp_gcd",
    "mp_mul",
    "MPoly",
    "parse_poly",
    "power_sums",
    "primitive_part",
    "PrimitivePartReport",
    "resultant",
    "resultant_lemma_check",
    "RingSpec",
    "run_suite",
    "SeedKind",
    "SeedPair",
    "seq_term",
    "SequenceSpec",
    "squarefree_decomp",
    "strong_div_check",
    "SuiteConfig",
    "SuiteReport",
    "sylvester",
    "TermIndex",
    "valuation",
]

__version__ = "0.1.0"
