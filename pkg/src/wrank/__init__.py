"""Weighted rank functions of matroids and their entropic realizations."""

from .construct import (BinaryConstruction, GraphicZkConstruction, PreconditionError, Report,
                        algebraic_entropy_binary, algebraic_entropy_zk, brute_force_distribution_binary,
                        brute_force_distribution_zk, build_binary, build_graphic_zk, cyclic_sum_distribution,
                        figure2, verify_circuit_uniformity, verify_lemma2, verify_lemma3_prop3,
                        verify_theorem2, verify_theorem4, zk_exponent)
from .dist import (EntropyValue, JointDistribution, conditional_entropy, entropy, entropy_vector,
                   factorizes, is_uniform_on_support)
from .linalg import (BitMatrix, RationalMatrix, ZkMatrix, gf2_in_rowspace, gf2_rank, rational_rank,
                     zk_image_size)
from .matroid import (BinaryMatroid, GraphicMatroid, Matroid, UniformMatroid, circuits, effective_weights, is_circuit,
                      mask_of, max_weight_independent, phi_vector, rank_vector, reverse_delete_base,
                      to_binary, weighted_rank)
from .setfunc import (ConeDescription, InfeasiblePointError, LinearConstraint, SetFunctionVector,
                      check_monotone, check_submodular, gamma_polytope, is_extreme_point,
                      refute_convexity)

__version__ = "0.1.0"

__all__ = [
    "BinaryConstruction",
    "GraphicZkConstruction",
    "PreconditionError",
    "Report",
    "algebraic_entropy_binary",
    "algebraic_entropy_zk",
    "brute_force_distribution_binary",
    "brute_force_distribution_zk",
    "build_binary",
    "build_graphic_zk",
    "cyclic_sum_distribution",
    "figure2",
    "verify_circuit_uniformity",
    "verify_lemma2",
    "verify_lemma3_prop3",
    "verify_theorem2",
    "verify_theorem4",
    "zk_exponent",
    "EntropyValue",
    "JointDistribution",
    "conditional_entropy",
    "entropy",
    "entropy_vector",
    "factorizes",
    "is_uniform_on_support",
    "BitMatrix",
    "RationalMatrix",
    "ZkMatrix",
    "gf2_in_rowspace",
    "gf2_rank",
    "rational_rank",
    "zk_image_size",
    "BinaryMatroid",
    "GraphicMatroid",
    "Matroid",
    "UniformMatroid",
    "circuits",
    "effective_weights",
    "is_circuit",
    "mask_of",
    "max_weight_independent",
    "phi_vector",
    "rank_vector",
    "reverse_delete_base",
    "to_binary",
    "weighted_rank",
    "ConeDescription",
    "InfeasiblePointError",
    "LinearConstraint",
    "SetFunctionVector",
    "check_monotone",
    "check_submodular",
    "gamma_polytope",
    "is_extreme_point",
    "refute_convexity",
]
