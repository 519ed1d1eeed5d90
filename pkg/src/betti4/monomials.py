"""Monomials in four variables and minimally generated monomial ideals.

A monomial is a plain 4-tuple of non-negative exponents for x1..x4.
Plain tuples keep the subset walks in the rest of the package cheap.
"""

from dataclasses import dataclass
from itertools import combinations

NUM_VARS = 4

# the constant monomial x^0
UNIT = (0, 0, 0, 0)


def lcm(a, b):
    """Least common multiple: componentwise max of exponent vectors."""
    return (
        a[0] if a[0] > b[0] else b[0],
        a[1] if a[1] > b[1] else b[1],
        a[2] if a[2] > b[2] else b[2],
        a[3] if a[3] > b[3] else b[3],
    )


def lcm_all(monomials):
    """lcm of an iterable of monomials; the constant monomial if empty."""
    out = UNIT
    for m in monomials:
        out = lcm(out, m)
    return out


def divides(a, b):
    """True iff a divides b, i.e. a_i <= b_i for every variable."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2] and a[3] <= b[3]


def strongly_divides(a, b):
    """True iff a_i < b_i for every variable that occurs in a.

    Stronger than plain divisibility on the support of a; the condition
    is vacuously true for the constant monomial.
    """
    return all(x == 0 or x < y for x, y in zip(a, b))


def support_mask(m):
    """4-bit mask with bit i set iff x_{i+1} has positive exponent."""
    mask = 0
    for i in range(NUM_VARS):
        if m[i] > 0:
            mask |= 1 << i
    return mask


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generating set, lex-sorted.

    The zero ideal has no generators; the unit ideal is generated by the
    constant monomial.  Pass generators through minimalize() first
    unless they are already known to be minimal and sorted.
    """

    gens: tuple

    def __post_init__(self):
        assert list(self.gens) == sorted(set(self.gens)), "generators must be lex-sorted and distinct"
        for g in self.gens:
            assert len(g) == NUM_VARS and min(g) >= 0, f"bad monomial {g!r}"
        for a, b in combinations(self.gens, 2):
            assert not divides(a, b) and not divides(b, a), "generating set must be minimal"

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return self.gens == (UNIT,)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def minimalize(gens):
    """Reduce a generating set to the unique minimal one, as a sorted tuple.

    Drops duplicates and any generator divisible by another generator.
    """
    pool = sorted(set(gens))
    return tuple(m for m in pool if not any(g != m and divides(g, m) for g in pool))


def dominant_members(gens):
    """The members of a generating set that dominate it.

    A monomial dominates the set when some variable's exponent in it
    strictly exceeds that variable's exponent in every other member,
    i.e. it is the unique column maximum for some variable.
    """
    gens = tuple(gens)
    if len(gens) <= 1:
        return gens
    out = set()
    for i in range(NUM_VARS):
        col = [g[i] for g in gens]
        top = max(col)
        if col.count(top) == 1:
            out.add(gens[col.index(top)])
    return tuple(sorted(out))


def dominant_generators(ideal):
    """The dominant generators of an ideal."""
    assert ideal.gens, "the zero ideal has no generators to classify"
    return dominant_members(ideal.gens)


def semidominance(ideal):
    """Number p of nondominant generators; p = 0 iff the ideal is dominant."""
    return len(ideal.gens) - len(dominant_generators(ideal))


def is_dominant(ideal):
    return semidominance(ideal) == 0


def permute_monomial(m, perm):
    """Relabel variables: new slot i takes the exponent of old slot perm[i]."""
    return (m[perm[0]], m[perm[1]], m[perm[2]], m[perm[3]])


def permute_ideal(ideal, perm):
    """Apply a variable permutation to every generator."""
    return MonomialIdeal(minimalize(permute_monomial(g, perm) for g in ideal.gens))
