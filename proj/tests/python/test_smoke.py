"""Smoke tests for the compiled extension: every exposed operation is called
once against values the C++ suite pins down independently."""

import os
import subprocess
from fractions import Fraction

import pytest

import hardstrings as hs


def test_distances():
    assert hs.hamming("0101", "0110") == 2
    assert hs.edit_distance("kitten", "sitting") == 3
    with pytest.raises(ValueError):
        hs.hamming("01", "011")


def test_stoppers_transform():
    assert hs.transform_length(8) == 152
    lifted = hs.stoppers_transform("01")
    assert lifted.split() == ["0", "c1", "c1", "c1", "c1", "c1", "c1", "c1", "c1", "c1", "c1", "c1", "c1", "1"]
    for x, y in [("0000", "1111"), ("0110", "0101"), ("10", "01")]:
        assert hs.edit_distance(hs.stoppers_transform(x), hs.stoppers_transform(y)) == hs.hamming(x, y)
    padded = hs.transform_set(["011", "010"])
    assert len(padded) == 2
    assert hs.edit_distance(*padded) == 1


def test_enumeration_and_counts():
    assert hs.enumerate_queries(2, 4) == ["0111", "1011", "1101", "1110"]
    assert len(hs.enumerate_base_strings(2, 4)) == 4
    assert hs.count_queries_paper(2, 8) == 96
    assert hs.count_queries_distinct(2, 8) == 48
    assert hs.count_queries_paper(2, 8) == 2 * hs.count_queries_distinct(2, 8)
    assert sum(hs.count_within_ball("1110", 2, 4, delta) for delta in range(7)) == 4
    with pytest.raises(ValueError):
        hs.enumerate_queries(3, 6)


def test_dictionary_and_bounds():
    assert hs.generate_dictionary(2, 4, select_prob="1", prune_radius=0) == [
        "0101",
        "0110",
        "1001",
        "1010",
    ]
    assert hs.generate_dictionary(2, 4, select_prob="1", prune_radius=2) == []
    assert hs.compute_alpha(2**16, 4, 16) == pytest.approx(1.0)
    assert hs.select_probability(16, 1) == Fraction(1, 17)
    assert hs.intersection_upper_bound(1, 4, 4, 4, 16) == 1536


def test_gap_strings():
    assert hs.mismatch_gap(2) == "$$#$"
    assert hs.verify_gap("$#$#", 2)
    assert not hs.verify_gap("$$##", 2)
    assert hs.gap_counterexample("$$##", 2) == 3
    assert hs.gap_counterexample("$#$#", 2) is None
    assert hs.edit_gap(3) == "$$$###"
    with pytest.raises(hs.GapNotFoundError):
        hs.mismatch_gap(2, strategy="exhaustive", budget=2)
    bits = hs.kwise_bits(5, 4, 8)
    assert len(bits) == 8 and set(bits) <= {"0", "1"}
    assert hs.kwise_bits(5, 4, 8) == bits
    assert hs.kwise_bits(0, 4, 8) == "00000000"


def test_reduction_round_trip():
    dictionary = ["0101", "0110", "1001", "1010"]
    art = hs.build_text(dictionary, k=1)
    assert art.d == 4
    assert len(art.text) == 3 * 16 + 2 * 4
    assert [i for i, _ in art.layout] == [1, 2, 3, 4]
    assert hs.verify_gap(art.gap, 4)
    for q in ("0110", "1111", "0000", "1010"):
        for k in (0, 1, 2):
            assert hs.dict_lookup_via_text(art, q, k) == hs.dict_lookup_brute(dictionary, q, k)

    lifted = hs.transform_instance(["01", "11"], k=1)
    assert hs.edit_distance(*lifted) == hs.hamming("01", "11")
    edit_art = hs.build_text(["01", "11"], k=1, mode="edit")
    assert edit_art.gap == "$$##"
    assert hs.dict_lookup_via_text(edit_art, "01", 0, mode="edit") == [(1, 0)]


def test_solvers():
    dictionary = ["0000", "1111", "0011"]
    answers, nodes = hs.trie_lookup(dictionary, "0001", 1)
    assert answers == [(1, 1), (3, 1)]
    assert nodes >= 1
    assert hs.dict_lookup_brute(dictionary, "0001", 1) == [(1, 1), (3, 1)]
    assert hs.text_search_hamming("0110", "11", 0) == [(2, 0)]
    assert hs.text_search_edit("0110", "11", 0) == [(3, 0, 2)]
    assert hs.bichromatic_closest_pair(["00", "01"], ["11", "10"], mode="hamming") == (1, 2, 1)
    red, blue = hs.transform_set(["00", "01"]), hs.transform_set(["11", "10"])
    assert hs.bichromatic_closest_pair(red, blue, mode="edit") == (1, 2, 1)


def test_cli_available():
    cli = os.environ.get("HARDSTRINGS_CLI")
    if not cli:
        pytest.skip("HARDSTRINGS_CLI is not set")
    done = subprocess.run(
        [cli, "verify", "counts", "--k", "2", "--d", "4"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert "PASS" in done.stdout and "FAIL" not in done.stdout
