#!/usr/bin/env python3
import io
import math

import pytest

from entropy import ENTROPY_COLUMNS, entropy_report, shannon_entropy, write_entropy_tsv
from exceptions import SearchError
from exhaustive import basic_search
from results import TripletResult
from variant_types import Variant


def test_uniform_is_exactly_one():
    bits, normalized = shannon_entropy([3, 3, 3])
    assert bits == pytest.approx(math.log2(3))
    assert normalized == 1.0


def test_single_category_is_zero():
    assert shannon_entropy([5, 0, 0]) == (0.0, 0.0)
    assert shannon_entropy([4]) == (0.0, 0.0)


def test_exclusive_regions_of_golden():
    bits, normalized = shannon_entropy([7, 5, 6])
    assert bits == pytest.approx(1.5715, abs=1e-3)
    assert normalized == pytest.approx(0.9915, abs=1e-3)


def test_entropy_is_scale_and_permutation_invariant():
    bits, normalized = shannon_entropy([2, 9, 4, 1])
    assert shannon_entropy([9, 1, 4, 2]) == pytest.approx((bits, normalized))
    assert shannon_entropy([20, 90, 40, 10]) == pytest.approx((bits, normalized))


@pytest.mark.parametrize("sizes", [[], [0, 0], [1, -1, 3]])
def test_invalid_sizes(sizes):
    with pytest.raises(ValueError):
        shannon_entropy(sizes)


def test_report_on_golden_triplet(golden):
    result = basic_search(golden, Variant.INDEPENDENT)
    [row] = entropy_report([result], Variant.INDEPENDENT)
    assert row.target == pytest.approx(shannon_entropy([7, 5, 6]))
    assert row.grouped == pytest.approx(shannon_entropy([18, 7, 3]))
    [row] = entropy_report([basic_search(golden, Variant.DISJOINT)], Variant.DISJOINT)
    assert row.target == pytest.approx(shannon_entropy([2, 2, 3]))
    assert row.grouped == pytest.approx(shannon_entropy([7, 3]))


def test_report_rejects_common(golden):
    with pytest.raises(SearchError):
        entropy_report([basic_search(golden, Variant.COMMON)], Variant.COMMON)


def test_report_skips_empty_and_zero_target(make_hypergraph):
    h = make_hypergraph([1, 2], [2, 3], [1, 3])
    result = basic_search(h, Variant.INDEPENDENT)
    rows = entropy_report([result, TripletResult.no_candidate(Variant.INDEPENDENT)], Variant.INDEPENDENT)
    assert len(rows) == 1
    assert rows[0].target == (0.0, 0.0)


def test_balanced_high_weight_triplet_has_high_target_entropy(make_hypergraph):
    h = make_hypergraph(list(range(0, 10)) + [99], list(range(10, 20)) + [99], list(range(20, 30)) + [99],
                        [0, 1], [5, 12], [18, 25])
    best = basic_search(h, Variant.INDEPENDENT)
    [row] = entropy_report([best], Variant.INDEPENDENT)
    assert best.ranks == (0, 1, 2)
    assert row.target[1] > 0.95


def test_tsv_output(golden):
    rows = entropy_report([basic_search(golden, Variant.INDEPENDENT)], Variant.INDEPENDENT)
    out = io.StringIO()
    assert write_entropy_tsv(rows, out) == 1
    header, line = out.getvalue().splitlines()
    assert header.split("\t") == list(ENTROPY_COLUMNS)
    assert line.split("\t")[1] == "5/9"
