import pytest
from conftest import ideal_of, ideals, monomials, permutations_of_4
from hypothesis import given

from betti4.monomials import (
    UNIT,
    MonomialIdeal,
    divides,
    dominant_generators,
    dominant_members,
    is_dominant,
    lcm,
    lcm_all,
    minimalize,
    permute_ideal,
    permute_monomial,
    semidominance,
    strongly_divides,
    support_mask,
)


def test_lcm_is_componentwise_max():
    assert lcm((1, 0, 2, 5), (0, 3, 2, 1)) == (1, 3, 2, 5)
    assert lcm_all([(1, 0, 0, 0), (0, 2, 0, 0), (0, 0, 0, 3)]) == (1, 2, 0, 3)
    assert lcm_all([]) == UNIT


def test_divides():
    assert divides((1, 0, 2, 0), (1, 1, 2, 0))
    assert not divides((1, 0, 2, 0), (1, 1, 1, 0))
    assert divides(UNIT, (0, 0, 0, 7))


def test_strong_divisibility_ignores_missing_variables():
    # zero exponents are exempt; present exponents must strictly increase
    assert strongly_divides((1, 0, 2, 0), (2, 0, 3, 0))
    assert not strongly_divides((1, 0, 2, 0), (2, 0, 2, 0))
    assert strongly_divides(UNIT, (1, 0, 0, 0))


@given(monomials(), monomials())
def test_strong_divisibility_implies_divisibility(a, b):
    if strongly_divides(a, b):
        assert divides(a, b)


@given(monomials(), monomials(), monomials())
def test_lcm_properties(a, b, c):
    assert lcm(a, b) == lcm(b, a)
    assert lcm(a, lcm(b, c)) == lcm(lcm(a, b), c)
    assert lcm(a, a) == a
    assert divides(a, lcm(a, b))


def test_support_mask():
    assert support_mask((3, 0, 1, 0)) == 0b0101
    assert support_mask(UNIT) == 0
    assert support_mask((1, 1, 1, 1)) == 0b1111


def test_minimalize_drops_multiples():
    gens = [(1, 0, 0, 0), (2, 0, 0, 0), (1, 1, 0, 0), (0, 0, 3, 0)]
    assert minimalize(gens) == ((0, 0, 3, 0), (1, 0, 0, 0))


@given(ideals())
def test_minimalize_is_an_antichain(ideal):
    for a in ideal:
        for b in ideal:
            if a != b:
                assert not divides(a, b)


@given(ideals())
def test_minimalize_idempotent(ideal):
    assert minimalize(ideal.gens) == ideal.gens


def test_ideal_rejects_redundant_generators():
    with pytest.raises(AssertionError):
        MonomialIdeal(((1, 0, 0, 0), (2, 0, 0, 0)))


def test_zero_and_unit_flags():
    assert MonomialIdeal(()).is_zero
    assert MonomialIdeal((UNIT,)).is_unit
    assert not ideal_of((1, 0, 0, 0)).is_zero


def test_semidominance_examples():
    # a^2 and b^3 carry a strict column maximum, ab does not
    one = ideal_of((2, 0, 0, 0), (0, 3, 0, 0), (1, 1, 0, 0))
    assert set(dominant_members(one.gens)) == {(2, 0, 0, 0), (0, 3, 0, 0)}
    assert semidominance(one) == 1

    # ab, bc, ac: every column maximum is shared
    three = ideal_of((1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0))
    assert semidominance(three) == 3
    assert not is_dominant(three)

    # a^2b, ab^3c, bc^2, ad^2: strict maxima in a, b, c, d respectively
    zero = ideal_of((2, 1, 0, 0), (1, 3, 1, 0), (0, 1, 2, 0), (1, 0, 0, 2))
    assert is_dominant(zero)
    assert dominant_generators(zero) == zero.gens


def test_single_generator_is_dominant():
    assert is_dominant(ideal_of((1, 1, 1, 1)))


@given(ideals())
def test_semidominance_counts_nondominant_generators(ideal):
    p = semidominance(ideal)
    assert 0 <= p <= len(ideal.gens)
    assert (p == 0) == is_dominant(ideal)
    assert len(dominant_members(ideal.gens)) == len(ideal.gens) - p


def test_dominant_ideals_have_at_most_four_generators():
    # each dominant generator needs its own strict-maximum variable
    quads = ideal_of((2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))
    assert is_dominant(quads)
    five = ideal_of((2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2), (1, 1, 1, 1))
    assert not is_dominant(five)
    assert semidominance(five) >= 1


@given(ideals(), permutations_of_4())
def test_permuting_preserves_structure(ideal, perm):
    image = permute_ideal(ideal, perm)
    assert len(image.gens) == len(ideal.gens)
    assert semidominance(image) == semidominance(ideal)


@given(monomials(), monomials(), permutations_of_4())
def test_permuting_commutes_with_lcm(a, b, perm):
    assert permute_monomial(lcm(a, b), perm) == lcm(
        permute_monomial(a, perm), permute_monomial(b, perm)
    )
