"""Exact field arithmetic and dense linear algebra."""

from .algebra import StructureAlgebra, radical_of_matrix_algebra, span_is_nilpotent
from .field import GF, QQ, Field, PrimeField, Rationals, field_from_name, is_prime
from .matrix import Matrix, kernel_basis, kronecker, rref
from .poly import Poly, factor, minimal_polynomial, minpoly_factors

__all__ = [
    "Field", "PrimeField", "Rationals", "QQ", "GF", "field_from_name", "is_prime",
    "Matrix", "rref", "kernel_basis", "kronecker",
    "Poly", "factor", "minimal_polynomial", "minpoly_factors",
    "StructureAlgebra", "radical_of_matrix_algebra", "span_is_nilpotent",
]
