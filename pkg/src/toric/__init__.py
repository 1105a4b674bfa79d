"""Exact-arithmetic toric ideals and their combinatorial invariants.

A configuration is an integer d x n matrix of exponent vectors.  This
package computes its toric ideal (Groebner bases, minimal generators),
the distinguished binomial sets (circuits, Graver, universal Groebner
basis), the polytope side (volume = degree, Ehrhart counts, normal
fans, regular triangulations), and the semigroup side (Hilbert bases,
normality, smoothness, unimodularity), all over exact integers and
rationals.
"""

from .binomials import LatticeBinomial, SparsePolynomial
from .distinguished import (circuits, degree_bound_report, graver,
                            graver_completion_oracle, lawrence, true_degree,
                            universal_gb)
from .errors import (CapExceededError, DegenerateError, InputError,
                     InstabilityError, InternalCheckError,
                     NotACircuitError, NotHomogeneousError,
                     NotPointedError, ToricError)
from .gallery import make_config, verify
from .groebner import (GroebnerBasis, buchberger, hilbert_function,
                       hilbert_polynomial, minimal_generators, normal_form,
                       radical_membership_bounded, toric_ideal,
                       toric_ideal_elimination_oracle)
from .lattice import (Configuration, SublatticeDescription, grading,
                      kernel_lattice, lattice_index)
from .matrixio import parse_matrix, serialize_matrix
from .orders import TermOrder
from .polytopes import (convex_hull, ehrhart_polynomial, face_poset,
                        lattice_point_count, normal_fan_equal,
                        normalized_volume, regular_triangulation,
                        vertices_of)
from .semigroups import (hilbert_basis, is_hereditarily_normal, is_normal,
                         is_normal_projective, is_smooth, is_unimodular,
                         semigroup_member, semigroup_report)

__version__ = "0.1.0"

__all__ = [
    "Configuration", "GroebnerBasis", "LatticeBinomial", "SparsePolynomial",
    "SublatticeDescription", "TermOrder",
    "buchberger", "circuits", "convex_hull", "degree_bound_report",
    "ehrhart_polynomial", "face_poset", "grading", "graver",
    "graver_completion_oracle", "hilbert_basis", "hilbert_function",
    "hilbert_polynomial", "is_hereditarily_normal", "is_normal",
    "is_normal_projective", "is_smooth", "is_unimodular", "kernel_lattice",
    "lattice_index", "lattice_point_count", "lawrence", "make_config",
    "minimal_generators", "normal_fan_equal", "normal_form",
    "normalized_volume", "parse_matrix", "radical_membership_bounded",
    "regular_triangulation", "semigroup_member", "semigroup_report",
    "serialize_matrix", "toric_ideal", "toric_ideal_elimination_oracle",
    "true_degree", "universal_gb", "verify", "vertices_of",
    "CapExceededError", "DegenerateError", "InputError", "InstabilityError",
    "InternalCheckError", "NotACircuitError", "NotHomogeneousError",
    "NotPointedError", "ToricError",
]
