"""Exact re-verification of the knot groups inside the symmetry groups of
the regular ideal dodecahedral tessellation of hyperbolic 3-space.

The package combines a Todd-Coxeter coset enumerator,
Reidemeister-Schreier subgroup rewriting, integer Smith normal form, and
exact arithmetic in Q(u, w) (u the golden ratio, w a sixth root of
unity) to replay and audit the classification of parabolic-generated
finite-index knot subgroups of the tetrahedral groups Gamma(5,2,2,3,3,3)
and Gamma(5,2,2,6,2,3).
"""

from .words import Presentation, Word, free_reduce, substitute
from .catalog import catalog_lookup, gamma, gamma_prime
from .field import OMEGA, U, ExtElement, FieldElement
from .psl2 import INF, ProjMatrix, classify_isometry, mobius_apply, psl_equal
from .coset import CosetTable, coset_action, enumerate_cosets, subgroup_contains

__all__ = [
    "Presentation", "Word", "free_reduce", "substitute",
    "catalog_lookup", "gamma", "gamma_prime",
    "OMEGA", "U", "ExtElement", "FieldElement",
    "INF", "ProjMatrix", "classify_isometry", "mobius_apply", "psl_equal",
    "CosetTable", "coset_action", "enumerate_cosets", "subgroup_contains",
]

__version__ = "0.1.0"
