"""Exact arithmetic for Hodge numbers of constructed varieties.

Formal Hodge diamonds, invariant cohomology of finite group actions on
products of hyperelliptic curves, construction planners and inequality
checkers.
"""

from .diamond import (
    BettiVector,
    FormalHodgeDiamond,
    PartialDiamond,
    PrimitiveTable,
    TruncatedDiamond,
    betti_of,
    blow_up,
    kunneth,
    primitive_numbers,
    validate,
)
from .cohomology import ProductSpace, basis, hodge_numbers
from .groups import Gabg, GroupElement, Weight2, close
from .invariants import InvariantTable, burnside_dims, closed_form_aa, closed_form_ab, crosscheck
from .constructor import (
    Recipe,
    evaluate,
    key_construction,
    plan_betti,
    plan_middle_weight,
    plan_truncated,
    plan_weight_k,
    planner_constants,
    zc_certificate,
)
from .inequalities import dominates, hypersurface_hodge, counterexample_family

__version__ = "0.1.0"

__all__ = [
    "BettiVector",
    "FormalHodgeDiamond",
    "PartialDiamond",
    "PrimitiveTable",
    "TruncatedDiamond",
    "betti_of",
    "blow_up",
    "kunneth",
    "primitive_numbers",
    "validate",
    "ProductSpace",
    "basis",
    "hodge_numbers",
    "Gabg",
    "GroupElement",
    "Weight2",
    "close",
    "InvariantTable",
    "burnside_dims",
    "closed_form_aa",
    "closed_form_ab",
    "crosscheck",
    "Recipe",
    "evaluate",
    "key_construction",
    "plan_betti",
    "plan_middle_weight",
    "plan_truncated",
    "plan_weight_k",
    "planner_constants",
    "zc_certificate",
    "dominates",
    "hypersurface_hodge",
    "counterexample_family",
]
