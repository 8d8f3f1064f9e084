"""Poisson superalgebras as single nonassociative products over the rationals."""

from .algebra import (
    Element,
    GradedBasis,
    SuperAlgebra,
    associator,
    degree_of,
    koszul_sign,
    make_superalgebra,
    multiply,
    zero_algebra,
)
from .errors import GradingError, InputError, NonHomogeneousError, ParseError, SuperPoissonError
from .identities import (
    IdentityReport,
    check_even_specialization,
    check_super_flexible,
    check_super_poisson,
    eval_super_poisson,
    eval_v1,
    eval_v2,
    eval_v3,
)
from .presentation import PoissonPair, fuse, split, verify_poisson_pair
from .scalars import Poly, poly_eval, scalar, scalar_arith

__all__ = [
    "Element",
    "GradedBasis",
    "GradingError",
    "IdentityReport",
    "InputError",
    "NonHomogeneousError",
    "ParseError",
    "PoissonPair",
    "Poly",
    "SuperAlgebra",
    "SuperPoissonError",
    "associator",
    "check_even_specialization",
    "check_super_flexible",
    "check_super_poisson",
    "degree_of",
    "eval_super_poisson",
    "eval_v1",
    "eval_v2",
    "eval_v3",
    "fuse",
    "koszul_sign",
    "make_superalgebra",
    "multiply",
    "poly_eval",
    "scalar",
    "scalar_arith",
    "split",
    "verify_poisson_pair",
    "zero_algebra",
]
