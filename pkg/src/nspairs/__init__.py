"""Exact tools for Neuwirth-Stallings pairs, linking matrices and gradient degrees."""
from nspairs._backend import BACKEND, use_backend
from nspairs.errors import InputError, NSPairsError, PreconditionError
from nspairs.germs import (DegreeResult, GradientGerm, PolynomialGerm, elk_degree, gradient,
                           holomorphic_milnor_number, parse_germ, winding_degree)
from nspairs.invariants import (bouquet_even, bouquet_odd, compose_projection, euler_from_degree,
                                higher_dim_construct, looijenga_sum, spun, stairs_conclude,
                                triviality_check)
from nspairs.linalg import (ExactSignature, IntMatrix, SmithNormalForm, determinant,
                            exact_signature, pfaffian, smith_normal_form)
from nspairs.linking import (ClassificationReport, LinkingMatrix, build_R, classify,
                             generate_unimodular_blocks)
from nspairs.records import FiberDescriptor, NSInvariantRecord, check_euler

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ClassificationReport", "DegreeResult", "ExactSignature", "FiberDescriptor",
    "GradientGerm", "InputError", "IntMatrix", "LinkingMatrix", "NSInvariantRecord",
    "NSPairsError", "PolynomialGerm", "PreconditionError", "SmithNormalForm", "bouquet_even",
    "bouquet_odd", "build_R", "check_euler", "classify", "compose_projection", "determinant",
    "elk_degree", "euler_from_degree", "exact_signature", "generate_unimodular_blocks",
    "gradient", "higher_dim_construct", "holomorphic_milnor_number", "looijenga_sum",
    "parse_germ", "pfaffian", "smith_normal_form", "spun", "stairs_conclude",
    "triviality_check", "use_backend", "winding_degree",
]
