"""Finite quandles and a cycle-counting verification of Euler's theorem."""
from .alexander import (
    EulerFamilyQuandle,
    ProperSolutionCount,
    cycle_length_of,
    euler_family,
    profile_formula,
    proper_count_enumerate,
    proper_count_formula,
    proper_counts_enumerate,
    solutions_of_level,
    translate_power,
)
from .connectivity import (
    Certificate,
    Orbit,
    is_connected,
    orbit,
    orbits,
    zero_orbit_certificate,
    zero_product_formula,
)
from .cycles import Pattern, Permutation, Profile, cycle_decomposition, iterate, pattern, profile
from .errors import (
    AxiomError,
    ConsistencyError,
    DomainError,
    HypothesisViolation,
    QuandleError,
    ResourceError,
    StructuralError,
)
from .numtheory import (
    Factorization,
    VerificationReport,
    classical_units_oracle,
    factorize,
    gcd,
    modpow,
    multiplicative_order,
    totient,
    verify_euler,
    verify_prime_power,
)
from .quandle import (
    AxiomReport,
    LinearAlexanderQuandle,
    RuleQuandle,
    TableQuandle,
    conjugation_quandle,
    linear_alexander,
    op,
    right_translation,
    validate_axioms,
)

__version__ = "0.1.0"
