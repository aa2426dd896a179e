"""Exact b-symbol weight distributions of irreducible cyclic codes."""

from .code_core import (
    CodeParams,
    WeightEnumerator,
    b_distance,
    b_weight,
    codeword,
    enumerator,
    extended_codeword,
    mds_check,
    pi_b,
    validate_params,
)
from .field_tower import FieldElement, Tower, build_tower, is_square, subfield_elements, trace
from .pb_mu import build_pb, independence_check, mu, mu_closed_r, mu_scan
from .theorems import (
    QuadraticClass,
    corollary_enumerator,
    gauss_counts,
    theorem31,
    theorem33,
    verify_decomposition,
    verify_lemma41,
    verify_lemma42,
    z_count,
)

__all__ = [
    "CodeParams", "FieldElement", "QuadraticClass", "Tower", "WeightEnumerator",
    "b_distance", "b_weight", "build_pb", "build_tower", "codeword", "corollary_enumerator",
    "enumerator", "extended_codeword", "gauss_counts", "independence_check", "is_square",
    "mds_check", "mu", "mu_closed_r", "mu_scan", "pi_b", "subfield_elements", "theorem31",
    "theorem33", "trace", "validate_params", "verify_decomposition", "verify_lemma41",
    "verify_lemma42", "z_count",
]
