"""Exact ordered K-theory invariants and classification for the one-ideal
graph family.

The family is parameterized by a loop count m (0, an integer >= 2, or
infinity) and edge multiplicities into an infinite doubling chain.  This
package computes the ordered six-term invariant, decides fullness via the
combined lexicographic ordering test, and decides exact and stable
isomorphism within the finite-loop regime by congruence arithmetic, all in
exact integer/rational arithmetic.
"""

from .classify import (
    FULL,
    UNKNOWN,
    FullnessVerdict,
    IsoVerdict,
    IsoWitness,
    class_counts,
    decide_fullness,
    divergence_table,
    exact_iso,
    exact_orbit_witness,
    is_stenotic,
    permanence_check,
    smallest_divergence,
    stable_gcd_equivalent,
    stable_iso,
    stable_orbit_equivalent,
    stable_orbit_witness,
    two_power_residues,
    witness_holds,
)
from .dyadic import INF, Dyadic, is_infinite, odd_part, two_adic_valuation
from .errors import (
    ConeShapeError,
    FamilyValidationError,
    InternalConsistencyError,
    NotDeterminedError,
    OneIdealError,
    OutOfScopeComparison,
    RegimeError,
    UnsupportedConeCombination,
)
from .exactlinalg import IntMatrix, SmithForm, cokernel_invariants, smith_normal_form
from .family import (
    FamilySpec,
    TailSpec,
    ZERO_TAIL,
    alpha_of,
    constant_tail,
    doubling_tail,
    pad_prefix,
    trim_trailing_zeros,
    truncated_presentation,
    validate_family,
    weight_of,
)
from .groups import (
    ConeDescriptor,
    ConeElement,
    GroupDescriptor,
    PreorderedGroup,
    all_positive,
    alpha_cone,
    cyclic_mod,
    dyadic_line,
    dyadic_plus_free,
    dyadic_plus_torsion,
    free_z,
    lexicographic_cone,
    standard_dyadic_cone,
    standard_integer_cone,
    trivial_group,
)
from .ktheory import (
    DerivedScalars,
    SixTermInvariant,
    invariant_of,
    stable_oracle_depth,
    torsion_order,
    torsion_order_formula,
    torsion_range,
    truncated_k0,
)
from .ordered import (
    alpha_cones_isomorphic,
    cone_contains,
    find_order_isomorphism,
    is_k_lexicographic,
    is_lexicographic_sequence,
    middle_cone_from_fullness,
)
from .report import Report, ScanResult
from .version import __version__

__all__ = [
    "__version__",
    "INF",
    "FULL",
    "UNKNOWN",
    "ZERO_TAIL",
    "ConeDescriptor",
    "ConeElement",
    "ConeShapeError",
    "DerivedScalars",
    "Dyadic",
    "FamilySpec",
    "FamilyValidationError",
    "FullnessVerdict",
    "GroupDescriptor",
    "IntMatrix",
    "InternalConsistencyError",
    "IsoVerdict",
    "IsoWitness",
    "NotDeterminedError",
    "OneIdealError",
    "OutOfScopeComparison",
    "PreorderedGroup",
    "RegimeError",
    "Report",
    "ScanResult",
    "SixTermInvariant",
    "SmithForm",
    "TailSpec",
    "UnsupportedConeCombination",
    "all_positive",
    "alpha_cone",
    "alpha_cones_isomorphic",
    "alpha_of",
    "class_counts",
    "cokernel_invariants",
    "cone_contains",
    "constant_tail",
    "cyclic_mod",
    "decide_fullness",
    "divergence_table",
    "doubling_tail",
    "dyadic_line",
    "dyadic_plus_free",
    "dyadic_plus_torsion",
    "exact_iso",
    "exact_orbit_witness",
    "find_order_isomorphism",
    "free_z",
    "invariant_of",
    "is_infinite",
    "is_k_lexicographic",
    "is_lexicographic_sequence",
    "is_stenotic",
    "lexicographic_cone",
    "middle_cone_from_fullness",
    "odd_part",
    "pad_prefix",
    "permanence_check",
    "smallest_divergence",
    "smith_normal_form",
    "stable_gcd_equivalent",
    "stable_iso",
    "stable_oracle_depth",
    "stable_orbit_equivalent",
    "stable_orbit_witness",
    "standard_dyadic_cone",
    "standard_integer_cone",
    "torsion_order",
    "torsion_order_formula",
    "torsion_range",
    "trim_trailing_zeros",
    "trivial_group",
    "truncated_k0",
    "truncated_presentation",
    "two_adic_valuation",
    "two_power_residues",
    "validate_family",
    "weight_of",
    "witness_holds",
]
