"""Poincaré polynomials of rigid quiver Grassmannians from quantum shuffle algebras."""
from .errors import QGrassError
from .grass import (PoincareResult, dual_canonical_all, dual_canonical_data, dual_pbw,
                    dual_root_vector, euler_characteristic, is_grassmannian_nonempty,
                    multiplicity_polynomial, normalize_poincare, point_count, poincare,
                    poincare_for, poincare_raw, poincare_typeA_fast)
from .laurent import LaurentPoly, gaussian_binomial, quantum_factorial, quantum_int
from .oracle import ModularRep, count_subreps, enumerate_subspaces, verify_against_formula
from .quiver import Quiver, load_quiver
from .repmod import QuiverRep, ext_dim, generic_decomposition, hom_dim, rep_of_partition
from .roots import RootSystem, positive_roots, root_system
from .shuffle import ShuffleElement, shuffle_elements, shuffle_words

__version__ = "0.1.0"

__all__ = [
    "QGrassError", "PoincareResult", "dual_canonical_all", "dual_canonical_data", "dual_pbw",
    "dual_root_vector", "euler_characteristic", "is_grassmannian_nonempty",
    "multiplicity_polynomial", "normalize_poincare", "point_count", "poincare", "poincare_for",
    "poincare_raw", "poincare_typeA_fast", "LaurentPoly", "gaussian_binomial",
    "quantum_factorial", "quantum_int", "ModularRep", "count_subreps", "enumerate_subspaces",
    "verify_against_formula", "Quiver", "load_quiver", "QuiverRep", "ext_dim",
    "generic_decomposition", "hom_dim", "rep_of_partition", "RootSystem", "positive_roots",
    "root_system", "ShuffleElement", "shuffle_elements", "shuffle_words",
]
