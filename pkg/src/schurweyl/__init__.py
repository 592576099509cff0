"""Exact Schur-Weyl calculus: signed weights, orbit hulls, tensor decompositions and
matrix momentum sets, each with a brute-force oracle alongside."""

from ._exact import QQi, to_fraction
from .errors import ResourceLimitError
from .majorization import (Direction, HullExtremeSet, SeparationCertificate,
                           extreme_points_norm_hull, extreme_signatures_weakstar,
                           exposing_vector, in_cone_c_lambda, in_norm_hull, in_orbit_closure,
                           in_weakstar_hull, is_extreme_weakstar, l_k, separating_vector,
                           support_functional, upper_parts)
from .weights import (OrbitSignature, PartitionPair, RationalWeight, Weight, as_rational,
                      as_weight, canonicalize, from_partition_pair, is_contractive, l1_norm,
                      orbit_equal, split_signs, to_partition_pair)

__version__ = "0.1.0"

__all__ = [
    "Direction", "HullExtremeSet", "OrbitSignature", "PartitionPair", "QQi", "RationalWeight",
    "ResourceLimitError", "SeparationCertificate", "Weight", "as_rational", "as_weight",
    "canonicalize", "exposing_vector", "extreme_points_norm_hull",
    "extreme_signatures_weakstar", "from_partition_pair", "in_cone_c_lambda", "in_norm_hull",
    "in_orbit_closure", "in_weakstar_hull", "is_contractive", "is_extreme_weakstar", "l1_norm",
    "l_k", "orbit_equal", "separating_vector", "split_signs", "support_functional",
    "to_fraction", "to_partition_pair", "upper_parts",
]
