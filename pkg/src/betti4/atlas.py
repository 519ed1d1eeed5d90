"""The 66 squarefree classes in four variables and their Betti rows.

Every squarefree ideal on at most 4 variables is a relabeling of one of
the 66 classes below, so its second and third multigraded Betti numbers
at the class degree can be looked up instead of computed.  Bit-strings
are written with y1 leftmost.
"""

from dataclasses import dataclass
from itertools import permutations

from .errors import NotInAtlas
from .squarefree import SquarefreeIdeal, mask_string, parse_mask, permute_mask

# (id, generators, degree, beta2, beta3).  Generators appear in their
# traditional listing order; they are sorted as masks when parsed.
_TABLE = (
    (1, ("0000",), "0000", 0, 0),
    (2, ("1000",), "1000", 0, 0),
    (3, ("1000", "0100"), "1100", 1, 0),
    (4, ("1000", "0100", "0010"), "1110", 0, 1),
    (5, ("1000", "0100", "0010", "0001"), "1111", 0, 0),
    (6, ("1100",), "1100", 0, 0),
    (7, ("1100", "1010"), "1110", 1, 0),
    (8, ("1100", "1001"), "1101", 1, 0),
    (9, ("1100", "0110"), "1110", 1, 0),
    (10, ("1100", "0101"), "1101", 1, 0),
    (11, ("1100", "0011"), "1111", 1, 0),
    (12, ("1100", "0010"), "1110", 1, 0),
    (13, ("1100", "0001"), "1101", 1, 0),
    (14, ("1100", "1010", "1001"), "1111", 0, 1),
    (15, ("1100", "1010", "0110"), "1110", 2, 0),
    (16, ("1100", "1010", "0101"), "1111", 0, 0),
    (17, ("1100", "1010", "0011"), "1111", 0, 0),
    (18, ("1100", "1001", "0110"), "1111", 0, 0),
    (19, ("1100", "1001", "0101"), "1101", 2, 0),
    (20, ("1100", "1001", "0011"), "1111", 0, 0),
    (21, ("1100", "0110", "0101"), "1111", 0, 1),
    (22, ("1100", "0110", "0011"), "1111", 0, 0),
    (23, ("1100", "0101", "0011"), "1111", 0, 0),
    (24, ("1100", "1010", "0001"), "1111", 0, 1),
    (25, ("1100", "0110", "0001"), "1111", 0, 1),
    (26, ("1100", "1001", "0010"), "1111", 0, 1),
    (27, ("1100", "0101", "0010"), "1111", 0, 1),
    (28, ("1100", "0010", "0001"), "1111", 0, 1),
    (29, ("1100", "1010", "1001", "0110"), "1111", 0, 1),
    (30, ("1100", "1010", "1001", "0101"), "1111", 0, 1),
    (31, ("1100", "1010", "1001", "0011"), "1111", 0, 1),
    (32, ("1100", "1010", "0110", "0101"), "1111", 0, 1),
    (33, ("1100", "1010", "0110", "0011"), "1111", 0, 1),
    (34, ("1100", "1010", "0101", "0011"), "1111", 0, 1),
    (35, ("1100", "1001", "0110", "0101"), "1111", 0, 1),
    (36, ("1100", "1001", "0110", "0011"), "1111", 0, 1),
    (37, ("1100", "1001", "0101", "0011"), "1111", 0, 1),
    (38, ("1100", "0110", "0101", "0011"), "1111", 0, 1),
    (39, ("1100", "1010", "0110", "0001"), "1111", 0, 2),
    (40, ("1100", "1001", "0101", "0010"), "1111", 0, 2),
    (41, ("1100", "1010", "1001", "0110", "0101"), "1111", 0, 2),
    (42, ("1100", "1010", "1001", "0110", "0011"), "1111", 0, 2),
    (43, ("1100", "1010", "1001", "0101", "0011"), "1111", 0, 2),
    (44, ("1100", "1010", "0110", "0101", "0011"), "1111", 0, 2),
    (45, ("1100", "1001", "0110", "0101", "0011"), "1111", 0, 2),
    (46, ("1100", "1010", "1001", "0110", "0101", "0011"), "1111", 0, 3),
    (47, ("1110",), "1110", 0, 0),
    (48, ("1110", "1101"), "1111", 1, 0),
    (49, ("1110", "1011"), "1111", 1, 0),
    (50, ("1110", "0111"), "1111", 1, 0),
    (51, ("1110", "1001"), "1111", 1, 0),
    (52, ("1110", "0101"), "1111", 1, 0),
    (53, ("1110", "0011"), "1111", 1, 0),
    (54, ("1110", "0001"), "1111", 1, 0),
    (55, ("1110", "1101", "1011"), "1111", 2, 0),
    (56, ("1110", "1101", "0111"), "1111", 2, 0),
    (57, ("1110", "1011", "0111"), "1111", 2, 0),
    (58, ("1110", "1101", "0011"), "1111", 2, 0),
    (59, ("1110", "1011", "0101"), "1111", 2, 0),
    (60, ("1110", "0111", "1001"), "1111", 2, 0),
    (61, ("1110", "1001", "0101"), "1111", 1, 0),
    (62, ("1110", "1001", "0011"), "1111", 1, 0),
    (63, ("1110", "0101", "0011"), "1111", 1, 0),
    (64, ("1110", "1101", "1011", "0111"), "1111", 3, 0),
    (65, ("1110", "1001", "0101", "0011"), "1111", 1, 1),
    (66, ("1111",), "1111", 0, 0),
)

_PERMS = tuple(permutations(range(4)))


@dataclass(frozen=True)
class AtlasEntry:
    """One of the 66 classes with its tabulated multigraded Betti row."""

    id: int
    gens: tuple  # sorted masks
    y_m: int
    beta2: int
    beta3: int


@dataclass(frozen=True)
class CanonicalForm:
    """Result of canonicalization: class id, witnessing relabeling, least form."""

    class_id: int
    permutation: tuple
    canonical_gens: tuple


def _least_form(gens):
    """Lexicographically least sorted mask tuple over all 24 relabelings."""
    best = None
    best_perm = None
    for perm in _PERMS:
        cand = tuple(sorted(permute_mask(g, perm) for g in gens))
        if best is None or cand < best:
            best = cand
            best_perm = perm
    return best, best_perm


def _load():
    entries = {}
    index = {}
    for cid, gen_strings, y_string, b2, b3 in _TABLE:
        gens = tuple(sorted(parse_mask(s) for s in gen_strings))
        entry = AtlasEntry(cid, gens, parse_mask(y_string), b2, b3)
        # the table only carries minimal generating sets, and the row
        # degree is always the lcm of the generators
        SquarefreeIdeal(gens)
        support = 0
        for g in gens:
            support |= g
        assert support == entry.y_m, f"entry {cid}: degree is not lcm of generators"
        assert cid not in entries
        entries[cid] = entry
        form, _ = _least_form(gens)
        prior = index.setdefault(form, cid)
        if prior != cid:
            # relabeling-equivalent entries must carry identical rows for
            # smallest-id lookup to be sound
            other = entries[prior]
            assert (other.beta2, other.beta3) == (b2, b3), f"entries {prior} and {cid} disagree"
    assert len(entries) == 66
    assert len({e.gens for e in entries.values()}) == 66, "labeled generator sets must be distinct"
    return entries, index


ENTRIES, _CANONICAL_INDEX = _load()


def atlas_entries():
    """All 66 entries in id order."""
    return tuple(ENTRIES[i] for i in range(1, 67))


def canonicalize(ideal):
    """Match a squarefree ideal to its class by brute-force relabeling.

    Searches all 24 variable permutations for the lexicographically
    least sorted generator tuple and looks that form up.  Entries that
    are relabelings of each other share a form; the smallest id wins.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal has no atlas class")
    form, perm = _least_form(ideal.gens)
    class_id = _CANONICAL_INDEX.get(form)
    if class_id is None:
        raise NotInAtlas(f"no class matches generators {[mask_string(g) for g in ideal.gens]}")
    return CanonicalForm(class_id, perm, form)


def lookup_multigraded(ideal, y_m):
    """Tabulated (beta2, beta3) of a squarefree ideal at the degree y_m.

    Zero whenever the lcm of the generators misses y_m; the zero ideal
    (which has no class) also reports zero.
    """
    if ideal.is_zero or ideal.support != y_m:
        return (0, 0)
    entry = ENTRIES[canonicalize(ideal).class_id]
    return (entry.beta2, entry.beta3)


def atlas_records():
    """JSON-ready export of the table, masks rendered as bit-strings."""
    return [
        {
            "id": e.id,
            "generators": [mask_string(g) for g in e.gens],
            "y_m": mask_string(e.y_m),
            "beta2": e.beta2,
            "beta3": e.beta3,
        }
        for e in atlas_entries()
    ]
