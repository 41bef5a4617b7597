"""Rough-set lattices of reflexive relations on finite universes.

Subsets are ``int`` bit masks over a 0-based universe; I/O uses 1-based
compact notation such as ``"13"`` for ``{1, 3}``.
"""

from .approx import Approximations, approximate, law_suite, lower, lower_inv, upper, upper_inv
from .catalog import DISTRIBUTIVE_TEN, STONE_NOT_REGULAR, TWO_BY_THREE, TWO_BY_TWO_BY_THREE
from .conditions import (
    ConditionResult,
    all_conditions,
    check_clinker,
    check_rst,
    check_st1,
    check_st1_atom,
    check_st2,
    check_st2_atom,
)
from .families import HypothesisError, SetFamily, build_family, family_irreducibles, kernel_K, upper_pseudocomplement
from .latticecore import (
    AlgebraReport,
    FiniteLattice,
    NotALatticeError,
    ResourceCapError,
    classify,
    dedekind_macneille,
    is_isomorphic,
    product_chain,
)
from .relation import BinaryRelation, RelationError, core, format_subset, generate, inverse, mask_of
from .roughlattice import RoughPair, RoughSetSystem, build_dmrs
from .verify import CampaignConfig, CampaignResult, minimize_witness, run_campaign

__all__ = [
    "AlgebraReport", "Approximations", "BinaryRelation", "CampaignConfig", "CampaignResult",
    "ConditionResult", "DISTRIBUTIVE_TEN", "FiniteLattice", "HypothesisError", "NotALatticeError",
    "RelationError", "ResourceCapError", "RoughPair", "RoughSetSystem", "STONE_NOT_REGULAR", "SetFamily",
    "TWO_BY_THREE", "TWO_BY_TWO_BY_THREE", "all_conditions", "approximate", "build_dmrs", "build_family",
    "check_clinker", "check_rst", "check_st1", "check_st1_atom", "check_st2", "check_st2_atom", "classify",
    "core", "dedekind_macneille", "family_irreducibles", "format_subset", "generate", "inverse",
    "is_isomorphic", "kernel_K", "law_suite", "lower", "lower_inv", "mask_of", "minimize_witness",
    "product_chain", "run_campaign", "upper", "upper_inv", "upper_pseudocomplement",
]
