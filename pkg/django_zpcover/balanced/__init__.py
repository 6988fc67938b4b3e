from .iteration import IterationStep, IterationTrace, aa_iterate, step_boost, target_cover
from .partition import MODES, StarPartition, preimages, star_partition, targeted_permutation
from .words import BalancedFamily, balanced_size, base_family_A0, enumerate_balanced, multiset_permutations

__all__ = [
    "MODES",
    "BalancedFamily",
    "IterationStep",
    "IterationTrace",
    "StarPartition",
    "aa_iterate",
    "balanced_size",
    "base_family_A0",
    "enumerate_balanced",
    "multiset_permutations",
    "preimages",
    "star_partition",
    "step_boost",
    "target_cover",
    "targeted_permutation",
]
