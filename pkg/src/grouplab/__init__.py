"""Exhaustive M-supplementation checks on small permutation groups."""

from .corpus import CorpusEntry, build_family, builtin_corpus
from .errors import (
    BudgetError,
    CapExceededError,
    CycleParseError,
    GroupFileError,
    GroupLabError,
    HypothesisError,
    PermutationError,
    PointRangeError,
    PreconditionError,
)
from .group import FiniteGroup, generate
from .groupfile import parse_group_file, write_group_file
from .lattice import SubgroupLattice, SubgroupRef, all_subgroups, maximal_subgroups_of, subgroups_of_order
from .msupp import (
    MClassQuery,
    MClassReport,
    TheoremDResult,
    TheoremVerdict,
    corollary_b_rhs,
    corollary_c_rhs,
    in_m_class,
    is_complemented,
    is_m_supplemented,
    theorem_a_rhs,
    theorem_d_classify,
)
from .perm import Permutation, compose, format_cycles, identity, inverse, parse_cycles

__version__ = "0.1.0"

__all__ = [
    "BudgetError", "CapExceededError", "CorpusEntry", "CycleParseError", "FiniteGroup",
    "GroupFileError", "GroupLabError", "HypothesisError", "MClassQuery", "MClassReport",
    "PermutationError", "Permutation", "PointRangeError", "PreconditionError", "SubgroupLattice",
    "SubgroupRef", "TheoremDResult", "TheoremVerdict", "all_subgroups", "build_family",
    "builtin_corpus", "compose", "corollary_b_rhs", "corollary_c_rhs", "format_cycles",
    "generate", "identity", "in_m_class", "inverse", "is_complemented", "is_m_supplemented",
    "maximal_subgroups_of", "parse_cycles", "parse_group_file", "subgroups_of_order",
    "theorem_a_rhs", "theorem_d_classify", "write_group_file",
]
