"""Polynomial germs and local degrees of their gradients."""
from nspairs.germs.degree import (DegreeResult, elk_degree, hessian_determinant,
                                  holomorphic_milnor_number, winding_degree)
from nspairs.germs.polynomial import (GradientGerm, Polynomial, PolynomialGerm, gradient,
                                      parse_germ, parse_polynomial, to_text)
from nspairs.germs.standard_basis import LocalAlgebra, local_algebra, standard_basis

__all__ = [
    "DegreeResult", "GradientGerm", "LocalAlgebra", "Polynomial", "PolynomialGerm",
    "elk_degree", "gradient", "hessian_determinant", "holomorphic_milnor_number",
    "local_algebra", "parse_germ", "parse_polynomial", "standard_basis", "to_text",
    "winding_degree",
]
