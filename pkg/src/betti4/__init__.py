"""Betti numbers of monomial ideals in four variables.

Closed-form multigraded Betti numbers through squarefree reduction and
a 66-class atlas, with an exact simplicial-homology oracle to verify
every number independently.
"""

from .atlas import AtlasEntry, CanonicalForm, atlas_entries, atlas_records, canonicalize, lookup_multigraded
from .engine import (
    BettiTable,
    betti2_formula,
    betti3_euler,
    betti3_formula,
    betti4,
    dominant_quadruples,
    full_table,
    pd_two_condition,
)
from .errors import (
    Betti4Error,
    ExponentCapExceeded,
    GeneratorCapExceeded,
    IllFormedTwin,
    InternalInconsistency,
    NegativeBetti,
    NotInAtlas,
    ParseError,
    RestrictionViolation,
    VariableOutOfRange,
)
from .homology import (
    ALL_FIELDS,
    RATIONALS,
    FieldSpec,
    SimplicialComplex,
    koszul_complex,
    oracle_betti,
    reduced_homology_rank,
)
from .monomials import (
    NUM_VARS,
    UNIT,
    MonomialIdeal,
    divides,
    dominant_generators,
    is_dominant,
    lcm,
    lcm_all,
    minimalize,
    semidominance,
    strongly_divides,
    support_mask,
)
from .multidegrees import DEFAULT_GEN_CAP, MultidegreeSet, enumerate_multidegrees
from .parsing import DEFAULT_EXP_CAP, parse_ideal
from .squarefree import SquarefreeIdeal, mask_monomial, mask_string, parse_mask, shape_descriptor
from .twins import TwinBundle, build_bundle, restrict, squarefree_twin, twin

__version__ = "0.1.0"

__all__ = [
    "ALL_FIELDS",
    "AtlasEntry",
    "Betti4Error",
    "BettiTable",
    "CanonicalForm",
    "DEFAULT_EXP_CAP",
    "DEFAULT_GEN_CAP",
    "ExponentCapExceeded",
    "FieldSpec",
    "GeneratorCapExceeded",
    "IllFormedTwin",
    "InternalInconsistency",
    "MonomialIdeal",
    "MultidegreeSet",
    "NUM_VARS",
    "NegativeBetti",
    "NotInAtlas",
    "ParseError",
    "RATIONALS",
    "RestrictionViolation",
    "SimplicialComplex",
    "SquarefreeIdeal",
    "TwinBundle",
    "UNIT",
    "VariableOutOfRange",
    "atlas_entries",
    "atlas_records",
    "betti2_formula",
    "betti3_euler",
    "betti3_formula",
    "betti4",
    "build_bundle",
    "canonicalize",
    "divides",
    "dominant_generators",
    "dominant_quadruples",
    "enumerate_multidegrees",
    "full_table",
    "is_dominant",
    "koszul_complex",
    "lcm",
    "lcm_all",
    "lookup_multigraded",
    "mask_monomial",
    "mask_string",
    "minimalize",
    "oracle_betti",
    "parse_ideal",
    "parse_mask",
    "pd_two_condition",
    "reduced_homology_rank",
    "restrict",
    "semidominance",
    "shape_descriptor",
    "squarefree_twin",
    "strongly_divides",
    "support_mask",
    "twin",
]
