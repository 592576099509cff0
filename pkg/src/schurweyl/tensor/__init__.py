"""Symmetric group algebra, Young symmetrizers and the Schur-Weyl decomposition."""

from .algebra import (GroupAlgebraElement, all_permutations, compose, cycle_type, cycles,
                      identity, inverse, sign, transposition)
from .characters import (character, character_dimension, isotypic_projector, rank_of_vectors,
                         specht_dimension_by_ideal)
from .space import (SchurWeylComponent, TensorMap, TensorVector, act_on_tensor, apply_elementary,
                    apply_lie, highest_weight_vector, m_lambda_span_dimension, place_permute,
                    raising_operators, schur_weyl_decompose, tableau_vector, tensor_weight,
                    weight_blocks, weight_multiset)
from .tableaux import (Partition, Tableau, as_partition, column_antisymmetrizer,
                       count_semistandard, count_standard, hook_length_dimension, partitions,
                       row_symmetrizer, semistandard_tableaux, standard_tableaux,
                       young_symmetrizer)

__all__ = [
    "GroupAlgebraElement", "Partition", "SchurWeylComponent", "Tableau", "TensorMap",
    "TensorVector", "act_on_tensor", "all_permutations", "apply_elementary", "apply_lie",
    "as_partition", "character", "character_dimension", "column_antisymmetrizer", "compose",
    "count_semistandard", "count_standard", "cycle_type", "cycles", "highest_weight_vector",
    "hook_length_dimension", "identity", "inverse", "isotypic_projector",
    "m_lambda_span_dimension", "partitions", "place_permute", "raising_operators",
    "rank_of_vectors", "row_symmetrizer", "schur_weyl_decompose", "semistandard_tableaux",
    "sign", "specht_dimension_by_ideal", "standard_tableaux", "tableau_vector",
    "tensor_weight", "transposition", "weight_blocks", "weight_multiset", "young_symmetrizer",
]
