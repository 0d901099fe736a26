"""
Test the enumeration of pairing terms against a brute-force enumeration of weight-balanced monomials.

Programmer: liepyx team
Since:  2026-10
"""

import json
from itertools import combinations_with_replacement

import pytest

from liepyx.kostant import build_frame
from liepyx.rootdata import build_lie_algebra
from liepyx.termgen import (TermKey, TermLists, generate_terms, borel_only_terms, is_admissible,
                            negpart, pospart, allmul, ntms_strata, absolute_height)


def brute_force_terms(frame, d: int) -> set:
    heights = frame.f_heights
    keys = set()
    for beta in range(0, d + 1):
        for W in combinations_with_replacement(frame.W, beta):
            for c in range(0, d - beta + 1):
                for U in combinations_with_replacement(frame.U, c):
                    b = sum(heights[f] for f in U) + sum(heights[f] for f in W)
                    a = d - beta - c - b
                    if b >= 0 and a >= 0:
                        keys.add(TermKey(W, U, b, a))
    return keys


@pytest.mark.parametrize("family, rank", [("A", 1), ("A", 2), ("B", 2), ("G", 2)])
def test_generation_matches_brute_force(family, rank):
    frame = build_frame(build_lie_algebra(family, rank))
    for d in range(1, 7):
        term_lists = generate_terms(frame, d)
        generated = term_lists.all_keys()
        assert len(generated) == len(set(generated)), f"duplicate keys at degree {d}"
        assert set(generated) == brute_force_terms(frame, d), f"degree {d}"
        assert all(is_admissible(frame, key, d) for key in generated)


def test_g2_counts():
    frame = build_frame(build_lie_algebra("G", 2))
    term_lists = generate_terms(frame, 6)
    assert term_lists.counts() == {"ttms": 8, "ptms": 10, "pure_cartan": 1, "ntms": 535}
    assert len(term_lists) == 554
    assert TermKey((), (7,), 5, 0) in term_lists.ttms
    assert TermKey((), (2, 2, 2), 3, 0) in term_lists.ttms
    # the recorded term with two height-(-2) factors, one slice factor, b = 1 and a = 2
    assert TermKey((10, 10), (7,), 1, 2) in term_lists.ntms


def test_a1_counts():
    term_lists = generate_terms(build_frame(build_lie_algebra("A", 1)), 2)
    assert term_lists.counts() == {"ttms": 1, "ptms": 0, "pure_cartan": 1, "ntms": 0}


def test_order_of_the_lists():
    frame = build_frame(build_lie_algebra("G", 2))
    term_lists = generate_terms(frame, 6)
    assert [key.b for key in term_lists.ttms] == sorted((key.b for key in term_lists.ttms), reverse=True)
    assert [key.a for key in term_lists.ptms] == sorted(key.a for key in term_lists.ptms)
    labels = [label for label, keys in ntms_strata(frame, term_lists.ntms)]
    assert labels == sorted(labels)
    assert len(labels) == len(set(labels))
    for label, keys in ntms_strata(frame, term_lists.ntms):
        assert all((key.beta, absolute_height(frame, key.W)) == label for key in keys)


def test_borel_only_terms():
    frame = build_frame(build_lie_algebra("G", 2))
    borel = borel_only_terms(frame, 6)
    full = generate_terms(frame, 6)
    assert borel.ntms == []
    assert borel.ttms == full.ttms
    assert borel.ptms == full.ptms
    assert len(borel) == 19


@pytest.mark.slow
def test_e6_borel_only_count_without_values():
    frame = build_frame(build_lie_algebra("E", 6))
    term_lists = borel_only_terms(frame, 12)
    assert term_lists.ntms == []
    assert len(term_lists) > 1


def test_partition_helpers():
    assert negpart(4, 5, 2) == [(2, 2)]
    assert pospart(6, 5, 2) == [(5, 1), (4, 2), (3, 3)]
    assert pospart(11, 5, 2) == []
    assert allmul((1, 1), {1: [2, 3]}) == [(2, 2), (2, 3), (3, 3)]


def test_serialization():
    frame = build_frame(build_lie_algebra("A", 2))
    term_lists = generate_terms(frame, 3)
    document = json.loads(term_lists.dumps())
    assert document["counts"] == term_lists.counts()
    assert [TermKey.from_json_obj(obj) for obj in document["ttms"]] == term_lists.ttms
    assert TermKey.from_json_obj(document["pure_cartan"]) == term_lists.pure_cartan


def test_invalid_degree():
    with pytest.raises(ValueError):
        generate_terms(build_frame(build_lie_algebra("A", 1)), 0)


if __name__ == "__main__":
    pytest.main(["-v", __file__])
