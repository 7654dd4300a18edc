#!/usr/bin/env python3
from dataclasses import replace

import numpy as np
import pytest

from bounds import BoundSet, edge_bound, edge_cap, pair_bound, triplet_bound
from exceptions import InvalidTripletError
from variant_types import Variant, parse_variant
from weights import (Ordering, RegionPartition, RegionSizes, Weight, compare, region_sizes, to_partition,
                     weight, weight_general)


def test_golden_partition_and_weights(golden):
    r = region_sizes(golden, (0, 1, 2))
    assert r == RegionSizes(12, 12, 11, 3, 3, 4, 1)
    assert sorted(to_partition(r).level(1)) == [5, 6, 7]
    assert to_partition(r).abc == 1
    assert weight(r, Variant.INDEPENDENT) == Weight(5, 9)
    w2 = weight(r, Variant.DISJOINT)
    assert (w2.num, w2.den) == (2, 2)
    assert weight(r, Variant.COMMON) == Weight(1, 1)


def test_unreduced_weights_compare_by_value():
    assert Weight(2, 2) == Weight(1, 1)
    assert str(Weight(2, 2)) == "2/2"
    assert Weight(5, 9) < Weight(2, 3)
    assert compare(Weight(1, 3), Weight(2, 6)) is Ordering.EQUAL
    assert compare(Weight(0, 1), Weight(0, 7)) is Ordering.EQUAL
    assert compare(Weight(3, 4), Weight(2, 3)) is Ordering.GREATER
    assert hash(Weight(2, 4)) == hash(Weight(1, 2))


def test_weight_parse():
    assert Weight.parse("5/9") == Weight(5, 9)
    assert Weight.parse("3") == Weight(3, 1)
    with pytest.raises(ValueError):
        Weight.parse("1/0")
    with pytest.raises(ValueError):
        Weight.parse("x/2")
    with pytest.raises(ValueError, match="missing denominator"):
        Weight.parse("3/")


def test_independent_weight_of_disjoint_edges():
    r = RegionSizes(2, 2, 2, 0, 0, 0, 0)
    assert weight(r, Variant.INDEPENDENT) == Weight(2, 1)
    assert weight(r, Variant.DISJOINT) == Weight(0, 1)


def test_identical_edges_are_all_common():
    r = RegionSizes(4, 4, 4, 4, 4, 4, 4)
    assert weight(r, Variant.INDEPENDENT) == Weight(0, 5)
    assert weight(r, Variant.COMMON) == Weight(4, 1)


def test_region_invariant_violation():
    with pytest.raises(InvalidTripletError):
        to_partition(RegionSizes(2, 2, 2, 1, 1, 1, 2))
    with pytest.raises(InvalidTripletError):
        to_partition(RegionSizes(2, 5, 5, 2, 2, 2, 0))


def test_region_sizes_rejects_bad_ids(golden):
    with pytest.raises(InvalidTripletError, match="duplicate"):
        region_sizes(golden, (0, 0, 1))
    with pytest.raises(InvalidTripletError, match="out of range"):
        region_sizes(golden, (0, 1, 3))
    with pytest.raises(InvalidTripletError, match="exactly 3"):
        region_sizes(golden, (0, 1))


def test_parse_variant_names():
    assert parse_variant("disjoint") is Variant.DISJOINT
    assert parse_variant("3") is Variant.COMMON
    assert parse_variant(1) is Variant.INDEPENDENT
    with pytest.raises(ValueError):
        parse_variant("pairwise")


def _random_partitions(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for row in rng.integers(0, 21, size=(count, 7)):
        # sparsify so empty regions are common
        row = row * (rng.random(7) < 0.7)
        yield RegionPartition(*(int(v) for v in row))


def _check_bounds(p: RegionPartition) -> None:
    r = p.to_sizes()
    assert to_partition(r) == p
    for v in Variant:
        w = weight(r, v)
        assert w == weight_general(p, int(v))
        for size in (r.x, r.y, r.z):
            assert Weight(edge_cap(v, size)) >= w
            assert edge_bound(v, size, w, inclusive=True)
        assert pair_bound(v, r.x, r.y, r.xy) >= w
        assert pair_bound(v, r.x, r.z, r.xz) >= w
        assert pair_bound(v, r.y, r.z, r.yz) >= w
        assert triplet_bound(v, r) >= w
        assert BoundSet(v, w).triplet_ok(r)


@pytest.mark.parametrize("seed", range(4))
def test_bounds_dominate_weight(seed):
    for p in _random_partitions(25_000, seed):
        _check_bounds(p)


@pytest.mark.parametrize("seed", range(4))
def test_bounds_hold_for_every_common_core(seed):
    """Test the bounds for each triple-intersection size the pairwise sizes allow."""
    for p in _random_partitions(1_500, 100 + seed):
        r = p.to_sizes()
        for xyz in range(min(r.xy, r.xz, r.yz) + 1):
            try:
                swept = replace(r, xyz=xyz).validate()
            except InvalidTripletError:
                continue
            _check_bounds(to_partition(swept))


def test_bound_set_without_threshold_keeps_everything():
    bounds = BoundSet(Variant.COMMON)
    assert bounds.edge_ok(0)
    assert bounds.pair_ok(1, 1, 0)
    assert bounds.triplet_ok(RegionSizes(1, 1, 1, 0, 0, 0, 0))


def test_disjoint_edge_cap_halves_size():
    assert edge_cap(Variant.DISJOINT, 5) == 2
    assert not edge_bound(Variant.DISJOINT, 5, Weight(2, 1))
    assert edge_bound(Variant.DISJOINT, 5, Weight(2, 1), inclusive=True)
