"""
Exact computations in spin nilHecke algebras of types A, B, D and their even
counterparts: skew polynomials, odd Demazure operators, Weyl groups, spin
symmetric and Schubert polynomials, PBW normal forms and matrix models.
"""

from .kinds import Variant, WeylType
from .skewpoly import EvenPolynomial, ScalarDomain, SkewPolynomial, parse_polynomial
from .weyl import SignedPermutation, enumerate_group, length, longest_element, parse_element, reduced_word
from .demazure import DemazureOperator, apply_word, verify_relations
from .symfun import express_in_elementary, generators, hilbert_series, in_lambda
from .schubert import schubert, schubert_decompose, schubert_family
from .nilhecke import (
    NilHeckeElement, center_check, generator_element, multiply, parse_expression, pbw_decompose,
    solve_preimage, to_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Variant", "WeylType", "SkewPolynomial", "EvenPolynomial", "ScalarDomain", "parse_polynomial",
    "SignedPermutation", "enumerate_group", "length", "longest_element", "parse_element", "reduced_word",
    "DemazureOperator", "apply_word", "verify_relations", "express_in_elementary", "generators",
    "hilbert_series", "in_lambda", "schubert", "schubert_decompose", "schubert_family",
    "NilHeckeElement", "center_check", "generator_element", "multiply", "parse_expression",
    "pbw_decompose", "solve_preimage", "to_matrix",
]
