"""Exact-arithmetic toolkit for numerical monoids.

Membership, Frobenius numbers, complete factorization sets, length sets,
elasticity, delta sets, and omega-primality, all in exact integer and
rational arithmetic.  The Chicken McNugget monoid <6, 9, 20> additionally
gets closed-form fast paths in `numonoid.mcnugget`.
"""

from .errors import (
    BelowFormulaRangeError,
    EmptyGeneratorsError,
    ExceptionalElementError,
    GcdNotOneError,
    GeneratorTooSmallError,
    MonoidError,
    NegativeElementError,
    NonPositiveGeneratorError,
    NotAMemberError,
    NotCoprimeError,
    SingleGeneratorError,
    WitnessNotFoundError,
    ZeroElementError,
)
from .factorizations import (
    DeltaSet,
    FactorizationSet,
    LengthSet,
    delta_set,
    elasticity,
    elasticity_profile,
    factorization_length,
    factorization_value,
    factorizations,
    length_set,
    max_length,
    min_length,
    monoid_delta_set,
    monoid_elasticity,
    unique_factorization_elements,
)
from .monoid import NumericalMonoid, frobenius_sylvester
from .omega import (
    Bullet,
    bullets,
    omega,
    omega_profile,
    omega_threshold,
    prime_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Bullet",
    "DeltaSet",
    "FactorizationSet",
    "LengthSet",
    "NumericalMonoid",
    "bullets",
    "delta_set",
    "elasticity",
    "elasticity_profile",
    "factorization_length",
    "factorization_value",
    "factorizations",
    "frobenius_sylvester",
    "length_set",
    "max_length",
    "min_length",
    "monoid_delta_set",
    "monoid_elasticity",
    "omega",
    "omega_profile",
    "omega_threshold",
    "prime_witness",
    "unique_factorization_elements",
    "MonoidError",
    "BelowFormulaRangeError",
    "EmptyGeneratorsError",
    "ExceptionalElementError",
    "GcdNotOneError",
    "GeneratorTooSmallError",
    "NegativeElementError",
    "NonPositiveGeneratorError",
    "NotAMemberError",
    "NotCoprimeError",
    "SingleGeneratorError",
    "WitnessNotFoundError",
    "ZeroElementError",
]
