from .field import GF, FieldElement, FieldError, field, is_prime, next_prime_power, prime_power
from .linalg import LinearSolution, extend_basis, inverse, null_space, rank, row_basis, rref, solve
from .poly import Poly, interpolate, lagrange_basis, vanishing

__all__ = [
    "GF",
    "FieldElement",
    "FieldError",
    "LinearSolution",
    "Poly",
    "extend_basis",
    "field",
    "interpolate",
    "inverse",
    "is_prime",
    "lagrange_basis",
    "next_prime_power",
    "null_space",
    "prime_power",
    "rank",
    "row_basis",
    "rref",
    "solve",
    "vanishing",
]
