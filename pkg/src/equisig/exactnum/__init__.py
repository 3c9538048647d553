"""Exact rational, cyclotomic, F_p[x] and integer-lattice arithmetic."""

from .cyclotomic import (
    CyclotomicDivisionByZero,
    CyclotomicNumber,
    cyc_add,
    cyc_inv,
    cyc_mul,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    prime_factors,
    root_of_unity,
    root_of_unity_frac,
)
from .intmatrix import (
    IntegerMatrix,
    hermite_rows,
    lattice_kernel,
    mat_mul,
    mat_vec,
    rank,
    smith_normal_form,
    smith_solve,
)
from .modpoly import (
    ModPolynomial,
    cyclotomic_factors_mod_p,
    cyclotomic_mod_p,
    factor_cyclotomic_mod_p,
    is_irreducible,
    is_prime,
    multiplicative_order,
)
from .rational import Rational, as_rational, format_rational, parse_rational

__all__ = [
    "CyclotomicDivisionByZero",
    "CyclotomicNumber",
    "IntegerMatrix",
    "ModPolynomial",
    "Rational",
    "as_rational",
    "cyc_add",
    "cyc_inv",
    "cyc_mul",
    "cyclotomic_factors_mod_p",
    "cyclotomic_mod_p",
    "cyclotomic_polynomial",
    "divisors",
    "euler_phi",
    "factor_cyclotomic_mod_p",
    "format_rational",
    "hermite_rows",
    "is_irreducible",
    "is_prime",
    "lattice_kernel",
    "mat_mul",
    "mat_vec",
    "multiplicative_order",
    "parse_rational",
    "prime_factors",
    "rank",
    "root_of_unity",
    "root_of_unity_frac",
    "smith_normal_form",
    "smith_solve",
]
