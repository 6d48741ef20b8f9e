"""Burnside rings, their norms, and a checker for when inverting elements
of an equivariant commutative ring is compatible with indexed products."""

__version__ = "0.1.0"

from .burnside import (BurnsideElement, BurnsideRing, TableOfMarks, add,
                       burnside_ring, divides, from_marks, marks, mul, neg,
                       table_of_marks)
from .groups import (FiniteGroup, Subgroup, SubgroupClassTable,
                     conjugate_subgroup, double_cosets, group_from_generators,
                     intersect, normalizer, subgroup_classes)
from .gsets import (GSet, coinduce, disjoint_union, fixed_points,
                    orbit_decompose, product, restrict_gset)
from .localization import (LocalizationProblem, Safe, Unknown, Unsafe, Witness,
                           check_criterion, closure_enumerate,
                           invert_integer_report, norm_generators)
from .norms import IndexedFamily, SubgroupContext, indexed_product, norm, restrict
from .presets import PRESETS, preset
