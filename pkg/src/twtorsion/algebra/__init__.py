"""Exact arithmetic over F_q and Q(zeta_n), Laurent polynomials and matrices."""
from .fields import (
    CyclotomicField,
    Field,
    FieldMismatch,
    FieldScalar,
    PrimeField,
    Q,
    is_prime,
    parse_field,
)
from .galois import GaloisMap, cyclotomic_embed
from .laurent import LaurentPoly, RatFn, equal_up_to_unit, reduce_mod_p, width
from .matrix import PolyMatrix, det_poly_matrix

__all__ = [
    "CyclotomicField",
    "Field",
    "FieldMismatch",
    "FieldScalar",
    "GaloisMap",
    "LaurentPoly",
    "PolyMatrix",
    "PrimeField",
    "Q",
    "RatFn",
    "cyclotomic_embed",
    "det_poly_matrix",
    "equal_up_to_unit",
    "is_prime",
    "parse_field",
    "reduce_mod_p",
    "width",
]
