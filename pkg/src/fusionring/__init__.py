"""Burnside rings of saturated fusion systems and their prime ideals, in exact arithmetic."""

from .burnside import BurnsideElement, BurnsideRing, TableOfMarks, mark
from .fusion import FusionSystem, class_count, f_iso, fusion_from_ambient, inner_fusion_system
from .groups import (FiniteGroup, Subgroup, SubgroupClassTable, double_cosets, enumerate_subgroups,
                     group_from_cayley, group_from_permutations, normalizer, sylow_subgroup,
                     transporter)
from .ideals import (IdealDescriptor, enumerate_primes, equal, generators, included, membership,
                     minimal_nonmember_alpha, prime_ideal, residue_characteristic)
from .stable import (AlphaBasis, PLocal, compute_alpha_basis, from_alpha, is_f_stable,
                     is_f_stable_by_restriction, localize, to_alpha)

__version__ = "0.1.0"
