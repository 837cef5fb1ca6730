"""Decision procedures on symbolic positive cones.

Covers cone membership, the lexicographic test for an ideal/middle/quotient
cone triple, the two-clause combined ordering test on a six-term invariant,
order-isomorphism of alpha cones, and reconstruction of the middle cone from
the ideal and quotient cones.

The alpha-cone isomorphism criterion used here: two cones with parameters
a and a' are order-isomorphic iff a' lies in 2^Z * a + Z[1/2] (infinity only
matching infinity).  Every isomorphism of the underlying group restricts to
x -> 2^k x on the divisible summand (the free quotient admits no nonzero map
from it) and so has the triangular shape (x, n) -> (2^k x + b n, n) once cone
preservation fixes the signs.  :func:`find_order_isomorphism` searches that
family directly and is used by the tests as an independent check on the
criterion.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .dyadic import ExtendedRational, is_infinite, odd_part
from .errors import ConeShapeError, NotDeterminedError, UnsupportedConeCombination
from .groups import (
    ALL_POSITIVE,
    ALPHA_CONE,
    LEXICOGRAPHIC_CONE,
    STANDARD_DYADIC_CONE,
    STANDARD_INTEGER_CONE,
    ConeDescriptor,
    ConeElement,
    PreorderedGroup,
    all_positive,
    lexicographic_cone,
)


def cone_contains(pg: PreorderedGroup, element: ConeElement) -> bool:
    """Exact membership of ``element`` in the positive cone of ``pg``."""
    element.check_shape(pg.group)
    cone = pg.cone
    if cone.tag == ALL_POSITIVE:
        return True
    if cone.tag == STANDARD_DYADIC_CONE:
        return element.dyadic_part.numerator >= 0
    if cone.tag == STANDARD_INTEGER_CONE:
        return element.int_part >= 0
    if cone.tag == ALPHA_CONE:
        n = element.int_part
        x = element.dyadic_part.to_fraction()
        if n > 0:
            return True if is_infinite(cone.alpha) else x > -n * cone.alpha
        if n == 0:
            return x >= 0
        return False
    # lexicographic: strictly positive quotient part, or ideal-positive kernel
    ideal_cone, quotient_cone = cone.parts
    n = element.int_part
    if n == 0:
        if ideal_cone.tag == ALL_POSITIVE:
            return True
        if ideal_cone.tag == STANDARD_DYADIC_CONE:
            return element.dyadic_part.numerator >= 0
        raise ConeShapeError(f"unsupported ideal part {ideal_cone.tag} in lexicographic cone")
    if quotient_cone.tag in (STANDARD_INTEGER_CONE, ALL_POSITIVE):
        # either way the nonzero image must be a positive quotient class
        return n > 0 if quotient_cone.tag == STANDARD_INTEGER_CONE else True
    raise ConeShapeError(f"unsupported quotient part {quotient_cone.tag} in lexicographic cone")


def is_lexicographic_sequence(
    ideal_pg: PreorderedGroup,
    middle_pg: PreorderedGroup,
    quotient_pg: PreorderedGroup,
) -> bool:
    """Decide whether the middle cone is the disjoint union of the strictly
    positive quotient preimage and the pushed-forward ideal cone.

    Only the cone combinations realized by this family (and their nearby
    degenerations) are supported; anything else raises
    :class:`UnsupportedConeCombination` rather than guessing.
    """
    ic, mc, qc = ideal_pg.cone, middle_pg.cone, quotient_pg.cone
    if qc.tag == STANDARD_INTEGER_CONE and ic.tag == STANDARD_DYADIC_CONE:
        if mc.tag == ALPHA_CONE:
            # the union is exactly the alpha = infinity cone
            return is_infinite(mc.alpha)
        if mc.tag == ALL_POSITIVE:
            # the union misses (negative dyadic, 0); everything-positive cannot match
            return False
        if mc.tag == LEXICOGRAPHIC_CONE:
            return mc.parts == (ic, qc)
    if qc.tag == ALL_POSITIVE and mc.tag == ALL_POSITIVE:
        # union = (middle minus kernel) | pushed ideal cone; equality needs
        # the whole kernel, i.e. an everything-positive ideal
        if ic.tag == ALL_POSITIVE:
            return True
        if ic.tag == STANDARD_DYADIC_CONE:
            return False
    raise UnsupportedConeCombination(
        f"no rule for cones ({ic.tag}, {mc.tag}, {qc.tag})"
    )


def is_k_lexicographic(invariant) -> bool:
    """Combined two-clause ordering condition on a six-term invariant.

    Clause (1): when the quotient cone is a proper subset of the quotient
    group, the induced cone sequence must be lexicographic.  Clause (2): when
    the quotient has everything positive including a full class, the middle
    must as well.  Both clauses are conditional, so an invariant where
    neither hypothesis holds passes vacuously.
    """
    quotient = invariant.quotient
    middle = invariant.middle
    result = True
    if quotient.cone.tag != ALL_POSITIVE:
        result = result and is_lexicographic_sequence(invariant.ideal, middle, quotient)
    if quotient.cone.tag == ALL_POSITIVE and quotient.cone.with_full_class:
        result = result and (
            middle.cone.tag == ALL_POSITIVE and middle.cone.with_full_class
        )
    return result


def middle_cone_from_fullness(
    case_tag: str,
    ideal_pg: PreorderedGroup,
    quotient_pg: PreorderedGroup,
) -> ConeDescriptor:
    """Middle cone forced by fullness, given the ideal/quotient case.

    AF-PI and PI-PI force everything positive with a full class; PI-AF forces
    the lexicographic cone over the ideal and quotient cones.  In the AF-AF
    case the middle cone is genuinely not determined by the outer two and
    :class:`NotDeterminedError` is raised.
    """
    if case_tag in ("AF-PI", "PI-PI"):
        return all_positive(with_full_class=True)
    if case_tag == "PI-AF":
        return lexicographic_cone(ideal_pg.cone, quotient_pg.cone)
    if case_tag == "AF-AF":
        raise NotDeterminedError(
            "AF-AF: the middle cone is not determined by the ideal and quotient cones"
        )
    raise ValueError(f"unknown case tag {case_tag!r}")


# --------------------------------------------------------------------------
# alpha-cone order isomorphism


def alpha_cones_isomorphic(a: ExtendedRational, b: ExtendedRational) -> bool:
    """True iff the alpha cones with parameters ``a`` and ``b`` are
    order-isomorphic: b in 2^Z * a + Z[1/2], with infinity matching only
    infinity.

    Concretely: write each parameter with reduced denominator 2^s * M0 (M0
    odd); the odd parts must agree, and the numerators must differ by a
    power of two modulo M0.  Cost is the multiplicative order of 2 modulo
    M0, fine for desk-scale denominators.
    """
    if is_infinite(a) or is_infinite(b):
        return is_infinite(a) and is_infinite(b)
    fa, fb = Fraction(a), Fraction(b)
    m0 = odd_part(fa.denominator)
    if m0 != odd_part(fb.denominator):
        return False
    if m0 == 1:
        return True  # both dyadic; translation by a dyadic matches them
    target = fa.numerator % m0
    r = fb.numerator % m0
    seen = set()
    while r not in seen:
        if r == target:
            return True
        seen.add(r)
        r = (2 * r) % m0
    return False


def _slice_contains(alpha: ExtendedRational, x: Fraction, n: int) -> bool:
    if n > 0:
        return True if is_infinite(alpha) else x > -n * alpha
    if n == 0:
        return x >= 0
    return False


def _boundary_probes(alpha: ExtendedRational, n: int, precision: int) -> list[Fraction]:
    if is_infinite(alpha):
        return [Fraction(-(1 << 20)), Fraction(-1), Fraction(0), Fraction(1)]
    scale = 1 << precision
    base = math.floor(-n * alpha * scale)
    return [Fraction(base + d, scale) for d in (-1, 0, 1, 2)]


def _candidate_consistent(
    a: ExtendedRational, b: ExtendedRational, k: int, shift: Fraction, precision: int
) -> bool:
    pow2 = Fraction(2) ** k
    for n in (1, 2):
        for x in _boundary_probes(a, n, precision):
            if _slice_contains(a, x, n) != _slice_contains(b, pow2 * x + shift * n, n):
                return False
        for x in _boundary_probes(b, n, precision):
            if _slice_contains(b, x, n) != _slice_contains(a, (x - shift * n) / pow2, n):
                return False
    for x in (Fraction(-1), Fraction(0), Fraction(1, 2)):
        if _slice_contains(a, x, 0) != _slice_contains(b, pow2 * x, 0):
            return False
    return True


def find_order_isomorphism(
    a: ExtendedRational,
    b: ExtendedRational,
    k_bound: int = 8,
    exp_bound: int = 8,
    num_bound: int = 64,
) -> tuple[int, Fraction] | None:
    """Bounded search for a cone map (x, n) -> (2^k x + shift * n, n) taking
    the alpha cone of ``a`` onto that of ``b``.

    Candidates range over |k| <= k_bound and dyadic shifts with exponent at
    most exp_bound and numerator at most num_bound in absolute value.  Each
    candidate is tested on probe points straddling both cone boundaries at a
    precision fine enough that every wrong candidate in the search box is
    rejected.  Returns the first witness found, or None when the whole box
    fails.  Independent of :func:`alpha_cones_isomorphic` by construction.
    """

    def den_bits(v) -> int:
        return 1 if is_infinite(v) else Fraction(v).denominator.bit_length()

    precision = den_bits(a) + den_bits(b) + k_bound + exp_bound + 2

    shifts: list[Fraction] = [Fraction(t) for t in range(-num_bound, num_bound + 1)]
    for e in range(1, exp_bound + 1):
        for t in range(-num_bound, num_bound + 1):
            if t % 2:
                shifts.append(Fraction(t, 1 << e))
    shifts.sort(key=lambda s: (abs(s), s.denominator))

    ks = sorted(range(-k_bound, k_bound + 1), key=abs)
    for k in ks:
        for shift in shifts:
            if _candidate_consistent(a, b, k, shift, precision):
                return k, shift
    return None
