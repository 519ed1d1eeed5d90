"""Squarefree ideals in up to four variables, generators as 4-bit masks.

Bit i of a mask stands for the variable y_{i+1}; divisibility of
squarefree monomials is mask inclusion.  Bit-strings elsewhere in the
package render masks with y1 leftmost.
"""

from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Squarefree monomial ideal with a minimal, ascending-sorted mask tuple."""

    gens: tuple

    def __post_init__(self):
        assert list(self.gens) == sorted(set(self.gens))
        for m in self.gens:
            assert 0 <= m < 16, f"bad mask {m!r}"
            assert not any(o != m and o & m == o for o in self.gens), "generating set must be minimal"

    @property
    def support(self):
        """Union of the generator supports; equals lcm of the generators."""
        out = 0
        for m in self.gens:
            out |= m
        return out

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return self.gens == (0,)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def minimalize_masks(masks):
    """Reduce a set of masks to the minimal generating set, as a sorted tuple."""
    pool = sorted(set(masks))
    return tuple(m for m in pool if not any(o != m and o & m == o for o in pool))


def mask_monomial(mask):
    """The 0/1 exponent vector of a mask, for feeding masks back into monomial code."""
    return tuple(mask >> i & 1 for i in range(4))


def mask_string(mask):
    """Bit-string form of a mask, leftmost character = y1."""
    return "".join("1" if mask >> i & 1 else "0" for i in range(4))


def parse_mask(text):
    """Inverse of mask_string."""
    assert len(text) == 4 and set(text) <= {"0", "1"}, f"bad bit-string {text!r}"
    return sum(1 << i for i, c in enumerate(text) if c == "1")


def permute_mask(mask, perm):
    """Relabel variables: new bit i is old bit perm[i]."""
    out = 0
    for i in range(4):
        if mask >> perm[i] & 1:
            out |= 1 << i
    return out


class Shape(NamedTuple):
    """The features of a squarefree ideal that the closed formulas test."""

    count: int
    degrees: tuple  # sorted multiset of generator degrees
    semidominance: int
    dominant: bool


def dominant_mask_members(gens):
    """Members owning a private bit, i.e. a variable no other member uses."""
    gens = tuple(gens)
    if len(gens) <= 1:
        return gens
    out = []
    for m in gens:
        others = 0
        for o in gens:
            if o != m:
                others |= o
        if m & ~others:
            out.append(m)
    return tuple(out)


def shape_descriptor(ideal):
    """(generator count, degree multiset, semidominance, dominance flag)."""
    gens = ideal.gens
    count = len(gens)
    degrees = tuple(sorted(m.bit_count() for m in gens))
    p = count - len(dominant_mask_members(gens))
    return Shape(count, degrees, p, p == 0)
