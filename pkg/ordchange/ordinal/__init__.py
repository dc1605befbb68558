"""Ordinal patterns, pattern sequences and pair counts"""

from .patterns import (
    MAX_ORDER,
    OrdinalPattern,
    PatternSequence,
    decode_pattern,
    encode_pattern,
    extract_sequence,
    extract_sequence_naive,
    n_patterns,
    pattern_table,
    permutation_of,
)
from .counts import PairCounts, count_range

__all__ = [
    "MAX_ORDER",
    "OrdinalPattern",
    "PatternSequence",
    "PairCounts",
    "count_range",
    "decode_pattern",
    "encode_pattern",
    "extract_sequence",
    "extract_sequence_naive",
    "n_patterns",
    "pattern_table",
    "permutation_of",
]
