"""Exact computations with Frobenius n-homomorphisms, k-characters and group
determinants."""
from .algebra import FinAlgebra, Functional, build_algebra, jordan_constants, recover_jordan
from .errors import FrobError, InputError, MathError
from .frobenius import PhiEvaluator, fn_polynomial, is_n_homomorphism, symmetric_power_check
from .groups import (
    FiniteGroup,
    group_determinant,
    isomorphic,
    k_character,
    mansfield_reconstruct,
    recover_group_data,
    validate_group,
)
from .kernels import BACKEND
from .multisym import eval_star, express, syzygy_generator_check
from .partitions import SetPartition, chi, verify_lemma10
from .poly import SparsePoly, parse
from .scalars import Cyclotomic, zeta
from .symprod import FiniteSpace, decompose, evaluation_functional

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Cyclotomic",
    "FinAlgebra",
    "FiniteGroup",
    "FiniteSpace",
    "FrobError",
    "Functional",
    "InputError",
    "MathError",
    "PhiEvaluator",
    "SetPartition",
    "SparsePoly",
    "build_algebra",
    "chi",
    "decompose",
    "eval_star",
    "evaluation_functional",
    "express",
    "fn_polynomial",
    "group_determinant",
    "is_n_homomorphism",
    "isomorphic",
    "jordan_constants",
    "k_character",
    "mansfield_reconstruct",
    "parse",
    "recover_group_data",
    "recover_jordan",
    "symmetric_power_check",
    "syzygy_generator_check",
    "validate_group",
    "verify_lemma10",
    "zeta",
]
