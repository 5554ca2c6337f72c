"""Hard instances and reductions for dictionary look-up and text indexing
with k mismatches or differences.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    GapNotFoundError,
    TextArtifact,
    bichromatic_closest_pair,
    build_text,
    compute_alpha,
    count_queries_distinct,
    count_queries_paper,
    count_within_ball,
    dict_lookup_brute,
    dict_lookup_via_text,
    edit_distance,
    edit_gap,
    enumerate_base_strings,
    enumerate_queries,
    gap_counterexample,
    generate_dictionary,
    hamming,
    intersection_upper_bound,
    kwise_bits,
    mismatch_gap,
    select_probability,
    stoppers_transform,
    text_search_edit,
    text_search_hamming,
    transform_instance,
    transform_length,
    transform_set,
    trie_lookup,
    verify_gap,
)

__all__ = [
    "GapNotFoundError",
    "TextArtifact",
    "bichromatic_closest_pair",
    "build_text",
    "compute_alpha",
    "count_queries_distinct",
    "count_queries_paper",
    "count_within_ball",
    "dict_lookup_brute",
    "dict_lookup_via_text",
    "edit_distance",
    "edit_gap",
    "enumerate_base_strings",
    "enumerate_queries",
    "gap_counterexample",
    "generate_dictionary",
    "hamming",
    "intersection_upper_bound",
    "kwise_bits",
    "mismatch_gap",
    "select_probability",
    "stoppers_transform",
    "text_search_edit",
    "text_search_hamming",
    "transform_instance",
    "transform_length",
    "transform_set",
    "trie_lookup",
    "verify_gap",
]

__version__ = "1.0.0"
