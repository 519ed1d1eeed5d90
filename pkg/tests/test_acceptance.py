"""Acceptance gate: one test per shipped guarantee, tolerances included.

Numbers and time budgets here are the product contract; every expected
value was either taken from a worked example or confirmed through the
homology oracle before being frozen.  Timed criteria measure a best-of
run after one warm-up call so they check algorithmic cost, not import
or cache-fill noise.
"""

import random
import time
from itertools import combinations

from betti4.atlas import atlas_entries, canonicalize
from betti4.engine import betti3_euler, betti3_formula, betti4, full_table, pd_two_condition
from betti4.homology import ALL_FIELDS, RATIONALS, oracle_betti
from betti4.monomials import (
    MonomialIdeal,
    divides,
    is_dominant,
    lcm,
    minimalize,
    support_mask,
)
from betti4.multidegrees import enumerate_multidegrees
from betti4.cli import sample_ideal
from betti4.parsing import parse_ideal
from betti4.squarefree import SquarefreeIdeal, mask_monomial

COMPUTATIONS = parse_ideal("x1^2*x2^2, x1^2*x2*x3, x2*x3*x4^2, x3^2*x4^2")
SECTION7 = parse_ideal("x1^2*x2^2*x3, x1^2*x2^2*x4, x1*x3^2*x4^2, x2*x3^2*x4^2, x1*x2*x3*x4")
SECTION8 = parse_ideal("x1^3, x1^2*x2, x1*x2^2, x2^3, x3^3, x3^2*x4, x3*x4^2, x4^3")


def best_time(fn, repeat=10):
    fn()  # warm-up
    result = None
    elapsed = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = min(elapsed, time.perf_counter() - start)
    return result, elapsed


def dominant_sample(rng):
    """Dominant ideal with 1..4 generators: each one owns a variable
    whose exponent strictly exceeds everyone else's there."""
    count = rng.randint(1, 4)
    owners = rng.sample(range(4), count)
    gens = []
    for owner in owners:
        m = [rng.randint(0, 2) for _ in range(4)]
        m[owner] = rng.randint(3, 6)
        gens.append(tuple(m))
    return MonomialIdeal(tuple(sorted(gens)))


def nondominant_sample(rng):
    while True:
        ideal = sample_ideal(rng, 8, 4)
        if not is_dominant(ideal):
            return ideal


def test_criterion_01_worked_example_betti_table():
    table, elapsed = best_time(lambda: full_table(COMPUTATIONS))
    assert table.betti == (1, 4, 3, 0, 0)
    assert elapsed < 0.001


def test_criterion_02_beta4_golden():
    ideal = parse_ideal("x1^2, x2^2, x3^2, x1*x4^2, x2*x4^2")
    value, elapsed = best_time(lambda: betti4(ideal))
    assert value == 1
    assert elapsed < 0.001


def test_criterion_03_eight_generator_golden():
    table, elapsed = best_time(lambda: full_table(SECTION8))
    assert table.betti[2] == 22
    assert table.betti[3] == 24
    assert elapsed < 0.1


def test_criterion_04_atlas_regeneration():
    def regenerate():
        checked = 0
        for entry in atlas_entries():
            ideal = MonomialIdeal(tuple(sorted(mask_monomial(g) for g in entry.gens)))
            rows = oracle_betti(ideal, RATIONALS, want_multigraded=True).multigraded
            row = rows.get(mask_monomial(entry.y_m), (0,) * 5)
            assert row[2] == entry.beta2
            assert row[3] == entry.beta3
            checked += 2
        return checked

    checked, elapsed = best_time(regenerate, repeat=1)
    assert checked == 132
    assert elapsed < 1.0


def test_criterion_05_formulas_match_oracle_on_1000_random_ideals():
    rng = random.Random(20260815)
    start = time.perf_counter()
    for _ in range(1000):
        ideal = sample_ideal(rng, 8, 4)
        formula = full_table(ideal, want_multigraded=True)
        oracle = oracle_betti(ideal, RATIONALS, want_multigraded=True)
        assert formula.betti == oracle.betti
        assert formula.multigraded == oracle.multigraded
    assert time.perf_counter() - start < 60.0


def test_criterion_06_characteristic_independence():
    start = time.perf_counter()
    rng = random.Random(51)
    pool = [
        MonomialIdeal(tuple(sorted(mask_monomial(g) for g in entry.gens)))
        for entry in atlas_entries()
    ] + [sample_ideal(rng, 8, 4) for _ in range(200)]
    for ideal in pool:
        tables = [oracle_betti(ideal, field, want_multigraded=True) for field in ALL_FIELDS]
        for other in tables[1:]:
            assert other.betti == tables[0].betti
            assert other.multigraded == tables[0].multigraded
    assert time.perf_counter() - start < 60.0


def test_criterion_07_third_betti_routes_agree_on_10000_random_ideals():
    rng = random.Random(404)
    for _ in range(10000):
        ideal = sample_ideal(rng, 8, 4)
        table = full_table(ideal)
        assert betti3_formula(ideal) == betti3_euler(ideal) == table.betti[3]
        assert table.euler == 0


def test_criterion_08_pd_two_condition():
    # sufficiency on the worked example
    assert pd_two_condition(SECTION7)
    table = full_table(SECTION7)
    assert table.betti[3] == 0 and table.betti[4] == 0
    assert table.pd == 2

    # the converse fails: projective dimension 2 without the condition
    assert full_table(COMPUTATIONS).pd == 2
    assert not pd_two_condition(COMPUTATIONS)

    # randomized sufficiency, oracle-confirmed; build candidates whose
    # third generator divides the lcm of the other two so the condition
    # shows up beyond the vacuous two-generator case
    rng = random.Random(73)
    confirmed = three_gen_hits = 0
    while confirmed < 200:
        a = tuple(rng.randint(0, 4) for _ in range(4))
        b = tuple(rng.randint(0, 4) for _ in range(4))
        top = lcm(a, b)
        c = tuple(rng.randint(0, e) for e in top)
        ideal = MonomialIdeal(minimalize([a, b, c]))
        if ideal.is_zero or ideal.is_unit or not pd_two_condition(ideal):
            continue
        assert oracle_betti(ideal).pd == 2
        confirmed += 1
        three_gen_hits += len(ideal.gens) == 3
    assert three_gen_hits >= 50


def test_criterion_09_taylor_minimality_split():
    rng = random.Random(92)
    for _ in range(200):
        ideal = dominant_sample(rng)
        assert is_dominant(ideal)
        assert full_table(ideal).total == 2 ** len(ideal.gens)
    for _ in range(200):
        ideal = nondominant_sample(rng)
        assert full_table(ideal).total < 2 ** len(ideal.gens)


def test_criterion_10_divisibility_transfer_on_500_pairs():
    from betti4.twins import build_bundle

    rng = random.Random(1014)
    for _ in range(500):
        ideal = sample_ideal(rng, 8, 4)
        m = rng.choice(list(enumerate_multidegrees(ideal)))
        bundle = build_bundle(ideal, m)
        gens = bundle.restriction.gens
        images = [support_mask(t) for t in bundle.twin_images]
        for i, j in combinations(range(len(gens)), 2):
            pair_lcm = lcm(gens[i], gens[j])
            merged = images[i] | images[j]
            for k in range(len(gens)):
                if divides(gens[k], pair_lcm):
                    assert images[k] & ~merged == 0


def test_criterion_11_every_squarefree_antichain_has_a_class():
    start = time.perf_counter()
    classes = set()
    count = 0
    for bits in range(1, 1 << 15):
        gens = tuple(m + 1 for m in range(15) if bits >> m & 1)
        if any(a != b and a & b == a for a, b in combinations(gens, 2)):
            continue
        form = canonicalize(SquarefreeIdeal(gens))
        assert 1 <= form.class_id <= 66
        classes.add(form.class_id)
        count += 1
    count += 1
    classes.add(canonicalize(SquarefreeIdeal((0,))).class_id)
    assert count == 167
    # relabel-equivalent listed entries collapse to their orbit minimum,
    # so exactly the orbit-minimal ids are reachable
    minima = {canonicalize(SquarefreeIdeal(e.gens)).class_id for e in atlas_entries()}
    assert classes == minima
    assert time.perf_counter() - start < 10.0
