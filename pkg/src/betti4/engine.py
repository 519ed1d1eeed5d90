"""Total and multigraded Betti numbers from the closed formulas.

beta2 and beta3 come from weighted counts of multidegrees classified by
the shape of their squarefree reduction; beta4 from dominant quadruples
of generators; beta3 is additionally recomputed from the Euler
characteristic and the two values are cross-asserted at runtime.
"""

from dataclasses import dataclass
from itertools import combinations

from .atlas import lookup_multigraded
from .errors import InternalInconsistency, NegativeBetti
from .monomials import UNIT, divides, dominant_members, lcm, lcm_all, strongly_divides
from .multidegrees import DEFAULT_GEN_CAP, enumerate_multidegrees
from .squarefree import shape_descriptor
from .twins import build_bundle


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers of S/M in homological degrees 0..4.

    The optional multigraded map sends a multidegree to its 5-tuple of
    graded Betti numbers; its columns must sum to the totals.
    """

    betti: tuple
    pd: int
    multigraded: dict | None = None

    def __post_init__(self):
        assert len(self.betti) == 5 and min(self.betti) >= 0
        assert self.pd == max((i for i, b in enumerate(self.betti) if b), default=0)
        if self.multigraded is not None:
            sums = [0] * 5
            for row in self.multigraded.values():
                for i, b in enumerate(row):
                    sums[i] += b
            assert tuple(sums) == self.betti, "multigraded map must sum to the totals"

    @property
    def euler(self):
        """Alternating sum beta0 - beta1 + beta2 - beta3 + beta4."""
        b = self.betti
        return b[0] - b[1] + b[2] - b[3] + b[4]

    @property
    def total(self):
        return sum(self.betti)


def _pd(betti):
    return max((i for i, b in enumerate(betti) if b), default=0)


@dataclass(frozen=True)
class DominantQuadrupleClass:
    """4-element dominant subsets whose lcm no generator strongly divides."""

    quadruples: tuple
    lcms: tuple  # distinct, lex-sorted

    def __post_init__(self):
        for quad in self.quadruples:
            assert len(quad) == 4


def dominant_quadruples(ideal):
    """Collect the quadruples behind the fourth Betti number."""
    gens = ideal.gens
    quads = []
    lcms = set()
    for quad in combinations(gens, 4):
        if len(dominant_members(quad)) != 4:
            continue
        degree = lcm_all(quad)
        if any(strongly_divides(g, degree) for g in gens):
            continue
        quads.append(quad)
        lcms.add(degree)
    return DominantQuadrupleClass(tuple(quads), tuple(sorted(lcms)))


def betti4(ideal):
    """Fourth Betti number: distinct lcms of the surviving dominant quadruples."""
    return len(dominant_quadruples(ideal).lcms)


def _shape_weights(sq):
    """(beta2, beta3) weight of one multidegree's squarefree reduction.

    The caller has already checked that the reduction's lcm fills the
    whole support of the multidegree; shapes not listed weigh nothing.
    """
    count, degrees, p, _ = shape_descriptor(sq)
    b2 = b3 = 0
    if count == 2:
        b2 = 1
    elif count == 3:
        if p == 0:
            b3 = 1
        elif p == 2:
            b2 = 1
        elif p == 3:
            b2 = 2
    elif count == 4:
        if degrees == (2, 2, 2, 2):
            b3 = 1
        elif degrees == (1, 2, 2, 2):
            b3 = 2
        elif degrees == (2, 2, 2, 3):
            b2 = 1
            b3 = 1
        elif degrees == (3, 3, 3, 3):
            b2 = 3
    elif count == 5:
        b3 = 2
    elif count == 6:
        b3 = 3
    return b2, b3


def _formula_counts(ideal, cap):
    """Weighted multidegree counts giving (beta2, beta3)."""
    b2 = b3 = 0
    for m in enumerate_multidegrees(ideal, cap):
        bundle = build_bundle(ideal, m)
        if bundle.squarefree.support != bundle.y_m:
            continue
        w2, w3 = _shape_weights(bundle.squarefree)
        b2 += w2
        b3 += w3
    return b2, b3


def betti2_formula(ideal, cap=DEFAULT_GEN_CAP):
    """Second Betti number by the shape-count formula."""
    return _formula_counts(ideal, cap)[0]


def betti3_formula(ideal, cap=DEFAULT_GEN_CAP):
    """Third Betti number by the shape-count formula."""
    return _formula_counts(ideal, cap)[1]


def betti3_euler(ideal, cap=DEFAULT_GEN_CAP):
    """Third Betti number from the Euler characteristic of the resolution."""
    if ideal.is_zero:
        raise ValueError("the Euler route needs at least one generator")
    value = 1 + betti2_formula(ideal, cap) + betti4(ideal) - len(ideal.gens)
    if value < 0:
        raise NegativeBetti(f"beta3 = {value} for generators {ideal.gens}")
    return value


def full_table(ideal, want_multigraded=False, cap=DEFAULT_GEN_CAP):
    """Assemble beta0..beta4, computing beta3 two redundant ways.

    The conventional tables for the zero ideal and the unit ideal are
    (1,0,0,0,0) and (1,1,0,0,0).  The optional multigraded map draws
    its beta2/beta3 entries from the atlas lookup, an independent route
    from the shape formula, and the summation check in BettiTable ties
    the two together on every call.
    """
    if ideal.is_zero:
        table = (1, 0, 0, 0, 0)
        return BettiTable(table, 0, {UNIT: table} if want_multigraded else None)
    if ideal.is_unit:
        table = (1, 1, 0, 0, 0)
        return BettiTable(table, 1, {UNIT: table} if want_multigraded else None)

    b2 = b3_direct = 0
    rows = {} if want_multigraded else None
    for m in enumerate_multidegrees(ideal, cap):
        bundle = build_bundle(ideal, m)
        if bundle.squarefree.support == bundle.y_m:
            w2, w3 = _shape_weights(bundle.squarefree)
            b2 += w2
            b3_direct += w3
        if rows is not None:
            a2, a3 = lookup_multigraded(bundle.squarefree, bundle.y_m)
            if a2 or a3:
                rows[m] = [0, 0, a2, a3, 0]

    quadruples = dominant_quadruples(ideal)
    b4 = len(quadruples.lcms)
    b3 = 1 + b2 + b4 - len(ideal.gens)
    if b3 < 0:
        raise NegativeBetti(f"beta3 = {b3} for generators {ideal.gens}")
    if b3 != b3_direct:
        raise InternalInconsistency(
            f"beta3 formula gives {b3_direct} but Euler gives {b3} for {ideal.gens}"
        )

    betti = (1, len(ideal.gens), b2, b3, b4)
    if rows is not None:
        rows.setdefault(UNIT, [0] * 5)[0] = 1
        for g in ideal.gens:
            rows.setdefault(g, [0] * 5)[1] = 1
        for degree in quadruples.lcms:
            rows.setdefault(degree, [0] * 5)[4] = 1
        rows = {m: tuple(row) for m, row in sorted(rows.items())}
    return BettiTable(betti, _pd(betti), rows)


def pd_two_condition(ideal):
    """True iff one generator divides the lcm of every pair of generators.

    When true the projective dimension is exactly 2 (so beta3 and beta4
    vanish); the converse fails.  The predicate concerns ideals with at
    least two generators; smaller ones report False.
    """
    gens = ideal.gens
    if len(gens) < 2:
        return False
    for cand in gens:
        others = [g for g in gens if g != cand]
        if all(divides(cand, lcm(a, b)) for a, b in combinations(others, 2)):
            return True
    return False
