"""Exact fusion-rule computations for orthogonal free quantum groups and
their free complexifications: free fusion rings over fusion sets, the
four-block complexification, representation rings with free and direct
products, a catalog of named models, and a two-row partition toolkit."""

__version__ = "0.1.0"

from .complexify import (BLOCK_CONJ, BLOCK_EXPONENTS, BLOCKS, ComplexifiedSet,
                         block_parity, complexify, validate_parity)
from .fusion_sets import (EMPTY_WORD, EVEN, ODD, FusionSet, FusionSetError,
                          ValidationReport, Violation, Word,
                          fusion_set_to_text, parse_fusion_set,
                          validate_fusion_set)
from .models import (CHARACTER_MODELS, MODEL_TOKENS, CharacterReport, Model,
                     decompose_fundamental_power, free_orthogonal_set,
                     fundamental_character_check, hyperoctahedral_set, model,
                     quantum_permutation_set)
from .partitions import (CapExceeded, Partition, PartitionMap,
                         enumerate_partitions, indicator, is_noncrossing,
                         partition_map, span_rank)
from .poly import IntPoly
from .repring import (CircleRing, ComplexifiedEmbedding, CrosscheckReport,
                      Cyclic2Ring, DirectProductRing, FreeProductRing,
                      RepRing, WordRing, crosscheck_complexified_product)
from .ring import (DimensionAssignment, GeneratorCombination, RingElement,
                   dimension, monomial_expand, ring_product,
                   word_to_generators)

__all__ = [
    "BLOCK_CONJ", "BLOCK_EXPONENTS", "BLOCKS", "CHARACTER_MODELS", "CapExceeded",
    "CharacterReport", "CircleRing", "ComplexifiedEmbedding", "ComplexifiedSet",
    "CrosscheckReport", "Cyclic2Ring", "DimensionAssignment", "DirectProductRing",
    "EMPTY_WORD", "EVEN", "FreeProductRing", "FusionSet", "FusionSetError",
    "GeneratorCombination", "IntPoly", "MODEL_TOKENS", "Model", "ODD", "Partition",
    "PartitionMap", "RepRing", "RingElement", "ValidationReport", "Violation",
    "Word", "WordRing", "block_parity", "complexify",
    "crosscheck_complexified_product", "decompose_fundamental_power", "dimension",
    "enumerate_partitions", "free_orthogonal_set", "fundamental_character_check",
    "fusion_set_to_text", "hyperoctahedral_set", "indicator", "is_noncrossing",
    "model", "monomial_expand", "parse_fusion_set", "partition_map",
    "quantum_permutation_set", "ring_product", "span_rank",
    "validate_fusion_set", "validate_parity", "word_to_generators",
]
