"""Fullness and isomorphism decisions for the one-ideal family.

Fullness of the stabilized extension reduces to the combined ordering test
on the invariant; the unstabilized extension is full whenever the algebra is
not approximately finite, and in the AF regime the two notions genuinely
split, so the unstabilized verdict is only reported when the theory decides
it.

Isomorphism within a fixed finite loop count m is governed by congruences on
the weight N modulo m-1: exact isomorphism is a shared value in the
multiplicative two-power orbits, stable isomorphism additionally allows a
unit factor.  The stable verdict is always computed twice (orbit/unit
enumeration, and gcd against the largest odd factor of m-1) and the two
routes must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .dyadic import is_infinite, odd_part
from .errors import InternalConsistencyError, OutOfScopeComparison
from .family import FamilySpec, weight_of
from .groups import ALL_POSITIVE
from .ktheory import SixTermInvariant, invariant_of
from .ordered import is_k_lexicographic

FULL = "Full"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class FullnessVerdict:
    stenotic: bool
    k_lexicographic: bool
    stabilized_full: bool
    unstabilized: str  # FULL or UNKNOWN


@dataclass(frozen=True)
class IsoWitness:
    """Exponents (l, l_prime) and unit u with 2^l N == u 2^l' N' mod m-1."""

    l: int
    l_prime: int
    unit: int


@dataclass(frozen=True)
class IsoVerdict:
    isomorphic: bool
    witness: IsoWitness | None = None
    reason: str | None = None


def is_stenotic(spec: FamilySpec) -> bool:
    """Every ideal comparable with the distinguished one.

    The family has a single nontrivial ideal, so the ideal lattice is linear
    and the extension is stenotic for every member; a validated spec is all
    that is required.
    """
    assert isinstance(spec, FamilySpec)
    return True


def decide_fullness(spec: FamilySpec) -> FullnessVerdict:
    """Fullness verdicts for the stabilized and unstabilized extensions.

    The stabilized extension is full exactly when the invariant passes the
    combined ordering test.  The unstabilized one is full whenever m != 0
    (the algebra is not AF), and when m = 0 with divergent alpha (the ideal
    is then stable, so the two notions coincide).  For m = 0 with finite
    alpha the ideal is not stable and the even K-theory cannot decide the
    unstabilized question, so it is reported unknown rather than guessed.
    """
    invariant, scalars = invariant_of(spec)
    k_lex = is_k_lexicographic(invariant)
    if spec.m != 0:
        unstabilized = FULL
    elif is_infinite(scalars.alpha):
        unstabilized = FULL
    else:
        unstabilized = UNKNOWN
    return FullnessVerdict(
        stenotic=True,
        k_lexicographic=k_lex,
        stabilized_full=k_lex,
        unstabilized=unstabilized,
    )


def permanence_check(candidate: SixTermInvariant) -> bool:
    """Necessary-condition filter for a candidate invariant to be realized.

    Requires a vanishing index map, and an everything-positive middle cone
    whenever the quotient cone is everything-positive.  A necessary filter
    only; it does not characterize the realizable range.
    """
    if not candidate.index_map_zero:
        return False
    if candidate.quotient.cone.tag == ALL_POSITIVE and candidate.middle.cone.tag != ALL_POSITIVE:
        return False
    return True


# --------------------------------------------------------------------------
# congruence layer: two-power orbits and unit orbits modulo m-1


def residue_cycle(modulus: int, n: int) -> list[int]:
    """First occurrences of 2^l * n mod modulus, for l = 0, 1, ... in order.

    The sequence is eventually periodic (pre-period at most v2(modulus),
    period the multiplicative order of 2 modulo the odd part), so collecting
    until the first repeat enumerates the whole orbit.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    out: list[int] = []
    seen: set[int] = set()
    r = n % modulus
    while r not in seen:
        out.append(r)
        seen.add(r)
        r = (2 * r) % modulus
    return out


def two_power_residues(modulus: int, n: int) -> set[int]:
    """The set {2^l * n mod modulus : l >= 0}."""
    return set(residue_cycle(modulus, n))


def units_mod(modulus: int) -> list[int]:
    """Invertible residues, ascending (for modulus 1 this is [1] ~ [0])."""
    return [u for u in range(1, modulus + 1) if gcd(u, modulus) == 1]


@lru_cache(maxsize=512)
def _unit_multiples(modulus: int, r: int) -> frozenset[int]:
    return frozenset((u * r) % modulus for u in units_mod(modulus))


def exact_orbit_witness(modulus: int, n_a: int, n_b: int) -> IsoWitness | None:
    """Smallest (by l + l', then l) exponent pair with 2^l n_a == 2^l' n_b."""
    cycle_a = residue_cycle(modulus, n_a)
    cycle_b = residue_cycle(modulus, n_b)
    for total in range(len(cycle_a) + len(cycle_b) - 1):
        for la in range(min(total, len(cycle_a) - 1) + 1):
            lb = total - la
            if lb >= len(cycle_b):
                continue
            if cycle_a[la] == cycle_b[lb]:
                return IsoWitness(l=la, l_prime=lb, unit=1)
    return None


def stable_orbit_witness(modulus: int, n_a: int, n_b: int) -> IsoWitness | None:
    """Smallest witness (l, l', u) with u a unit and 2^l n_a == u 2^l' n_b."""
    cycle_a = residue_cycle(modulus, n_a)
    cycle_b = residue_cycle(modulus, n_b)
    for total in range(len(cycle_a) + len(cycle_b) - 1):
        for la in range(min(total, len(cycle_a) - 1) + 1):
            lb = total - la
            if lb >= len(cycle_b):
                continue
            ra, rb = cycle_a[la], cycle_b[lb]
            if ra in _unit_multiples(modulus, rb):
                for u in units_mod(modulus):
                    if (u * rb - ra) % modulus == 0:
                        return IsoWitness(l=la, l_prime=lb, unit=u)
    return None


def witness_holds(modulus: int, n_a: int, n_b: int, w: IsoWitness) -> bool:
    """Re-substitution check of a witness congruence."""
    return ((1 << w.l) * n_a - w.unit * (1 << w.l_prime) * n_b) % modulus == 0


def stable_gcd_equivalent(modulus: int, n_a: int, n_b: int) -> bool:
    """Second route: equality of gcd with the largest odd factor of the modulus."""
    m_odd = odd_part(modulus)
    return gcd(n_a, m_odd) == gcd(n_b, m_odd)


def stable_orbit_equivalent(modulus: int, n_a: int, n_b: int) -> tuple[bool, IsoWitness | None]:
    """Stable equivalence, decided by enumeration and cross-checked by gcd."""
    witness = stable_orbit_witness(modulus, n_a, n_b)
    by_enumeration = witness is not None
    by_gcd = stable_gcd_equivalent(modulus, n_a, n_b)
    if by_enumeration != by_gcd:
        raise InternalConsistencyError(
            f"stable-isomorphism routes disagree at modulus {modulus}, "
            f"weights {n_a}, {n_b}: enumeration {by_enumeration}, gcd {by_gcd}"
        )
    return by_enumeration, witness


# --------------------------------------------------------------------------
# spec-level comparisons


def _comparable_weights(a: FamilySpec, b: FamilySpec) -> tuple[int, int, int] | IsoVerdict:
    for spec in (a, b):
        if not spec.has_finite_loops:
            raise OutOfScopeComparison(
                "isomorphism comparison is defined for 1 < m < infinity only",
                invariants=(invariant_of(a), invariant_of(b)),
            )
    if a.m != b.m:
        return IsoVerdict(isomorphic=False, reason="m mismatch")
    _, n_a = weight_of(a)
    _, n_b = weight_of(b)
    return a.m - 1, n_a, n_b


def exact_iso(a: FamilySpec, b: FamilySpec) -> IsoVerdict:
    """Exact isomorphism verdict: shared two-power orbit of the weights."""
    prepared = _comparable_weights(a, b)
    if isinstance(prepared, IsoVerdict):
        return prepared
    modulus, n_a, n_b = prepared
    witness = exact_orbit_witness(modulus, n_a, n_b)
    return IsoVerdict(isomorphic=witness is not None, witness=witness)


def stable_iso(a: FamilySpec, b: FamilySpec) -> IsoVerdict:
    """Stable isomorphism verdict: unit-twisted orbit match, gcd-checked."""
    prepared = _comparable_weights(a, b)
    if isinstance(prepared, IsoVerdict):
        return prepared
    modulus, n_a, n_b = prepared
    equivalent, witness = stable_orbit_equivalent(modulus, n_a, n_b)
    return IsoVerdict(isomorphic=equivalent, witness=witness)


# --------------------------------------------------------------------------
# whole-modulus class structure


def _union_find_classes(modulus: int, with_units: bool) -> list[int]:
    parent = list(range(modulus))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    units = units_mod(modulus) if with_units else ()
    for n in range(modulus):
        union(n, (2 * n) % modulus)
        for u in units:
            union(n, (u * n) % modulus)
    return [find(n) for n in range(modulus)]


def exact_class_partition(modulus: int) -> list[int]:
    """Class representative per weight in [0, modulus): exact isomorphism.

    Two weights are exactly isomorphic iff their forward two-power orbits
    meet, which is the weak connectivity of n -> 2n on Z/modulus.
    """
    return _union_find_classes(modulus, with_units=False)


def stable_class_partition(modulus: int) -> list[int]:
    """Class representative per weight in [0, modulus): stable isomorphism
    by honest unit-and-doubling enumeration (no gcd shortcut)."""
    return _union_find_classes(modulus, with_units=True)


def stable_gcd_partition(modulus: int) -> list[int]:
    """Class key per weight from the gcd route."""
    m_odd = odd_part(modulus)
    return [gcd(n, m_odd) for n in range(modulus)]


def partitions_agree(p: list[int], q: list[int]) -> bool:
    """Whether two labelings induce the same partition."""
    fwd: dict[int, int] = {}
    back: dict[int, int] = {}
    for a, b in zip(p, q):
        if fwd.setdefault(a, b) != b:
            return False
        if back.setdefault(b, a) != a:
            return False
    return True


def stable_partition_disagreements(max_modulus: int) -> list[int]:
    """Moduli up to max_modulus where the enumeration and gcd routes induce
    different stable partitions (expected empty)."""
    bad = []
    for modulus in range(1, max_modulus + 1):
        if not partitions_agree(stable_class_partition(modulus), stable_gcd_partition(modulus)):
            bad.append(modulus)
    return bad


def class_counts(m: int) -> tuple[int, int]:
    """(number of exact classes, number of stable classes) of weights
    [0, m-2] at loop count m."""
    modulus = m - 1
    exact = len(set(exact_class_partition(modulus)))
    stable = len(set(stable_class_partition(modulus)))
    return exact, stable


def divergence_table(limit_m: int) -> list[tuple[int, int, int]]:
    """Rows (m, exact classes, stable classes) for m in [2, limit_m]."""
    return [(m, *class_counts(m)) for m in range(2, limit_m + 1)]


def smallest_divergence(limit_m: int) -> int | None:
    """Smallest m in [2, limit_m] where stable and exact classification
    differ, or None when they agree throughout."""
    if limit_m < 2:
        raise ValueError("limit must be at least 2")
    for m, exact, stable in divergence_table(limit_m):
        if exact != stable:
            return m
    return None
