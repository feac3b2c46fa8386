"""Finite order theory: posets, correspondences, fixed points and lattice games."""

from .correspondence import (
    Correspondence,
    Monotonicity,
    ValueCondition,
    Verdict,
    check_monotonicity,
    check_values,
    pre_fixed_sets,
    truncate,
)
from .errors import OrdfixError
from .fixpoint import a_prime_set, extremal_fixed_point, fix_structure, fixed_points, iterate_increasing
from .game import LatticeGame, PayoffProperty, best_reply, check_game, joint_best_reply, nash_equilibria
from .poset import Poset, build_poset, chains_of, classify, induced, inf_of, product, sup_of

__version__ = "0.1.0"

__all__ = [
    "Correspondence",
    "LatticeGame",
    "Monotonicity",
    "OrdfixError",
    "PayoffProperty",
    "Poset",
    "ValueCondition",
    "Verdict",
    "a_prime_set",
    "best_reply",
    "build_poset",
    "chains_of",
    "check_game",
    "check_monotonicity",
    "check_values",
    "classify",
    "extremal_fixed_point",
    "fix_structure",
    "fixed_points",
    "induced",
    "inf_of",
    "iterate_increasing",
    "joint_best_reply",
    "nash_equilibria",
    "pre_fixed_sets",
    "product",
    "sup_of",
    "truncate",
]
