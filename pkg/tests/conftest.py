"""Shared strategies and helpers for the suite."""

import hypothesis.strategies as st
from hypothesis import settings

from betti4.monomials import MonomialIdeal, minimalize

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


def ideal_of(*gens):
    return MonomialIdeal(minimalize(gens))


def monomials(max_exp=4):
    exp = st.integers(min_value=0, max_value=max_exp)
    return st.tuples(exp, exp, exp, exp).filter(any)


def ideals(max_gens=6, max_exp=4):
    return st.lists(monomials(max_exp), min_size=1, max_size=max_gens).map(
        lambda gens: MonomialIdeal(minimalize(gens))
    )


def permutations_of_4():
    return st.permutations(range(4)).map(tuple)
