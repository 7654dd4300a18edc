#!/usr/bin/env python3
import pytest

import pruned
from exceptions import SearchError
from exhaustive import basic_search
from pruned import SearchConfig, SearchMode, make_config, max_search
from variant_types import Variant
from weights import Weight


@pytest.mark.parametrize("v, expected", [
    (Variant.INDEPENDENT, Weight(5, 9)),
    (Variant.DISJOINT, Weight(2, 2)),
    (Variant.COMMON, Weight(1, 1)),
])
def test_max_golden(golden, v, expected):
    [result] = max_search(golden, SearchConfig(variant=v))
    assert result.ranks == (0, 1, 2)
    assert (result.weight.num, result.weight.den) == (expected.num, expected.den)
    assert sorted(result.to_dict()["regions"].values()) == [1, 2, 2, 3, 5, 6, 7]


def test_max_matches_basic(family):
    for name, h in family:
        for v in Variant:
            basic = basic_search(h, v)
            pruned = max_search(h, SearchConfig(variant=v))
            if basic.empty:
                assert pruned == [], (name, v)
                continue
            assert len(pruned) == 1, (name, v)
            assert pruned[0].ranks == basic.ranks, (name, v)
            assert pruned[0].weight == basic.weight, (name, v)


def test_top1_equals_max(small_family):
    for name, h in small_family:
        for v in Variant:
            top = max_search(h, SearchConfig(variant=v, mode="topk", k=1))
            best = max_search(h, SearchConfig(variant=v))
            assert [r.ranks for r in top] == [r.ranks for r in best], (name, v)


def test_topk_matches_brute_force(small_family, small_brute):
    for name, h in small_family:
        for v in Variant:
            expected = small_brute[name, v][:7]
            found = max_search(h, SearchConfig(variant=v, mode=SearchMode.TOPK, k=7))
            assert [r.ranks for r in found] == [r.ranks for r in expected], (name, v)


@pytest.mark.parametrize("tau", ["0/1", "1/2", "1/1", "2/1"])
def test_threshold_matches_brute_force(small_family, small_brute, tau):
    limit = Weight.parse(tau)
    for name, h in small_family:
        for v in Variant:
            expected = [r for r in small_brute[name, v] if r.weight >= limit]
            found = max_search(h, SearchConfig(variant=v, mode="threshold", tau=tau))
            assert [r.ranks for r in found] == [r.ranks for r in expected], (name, v, tau)


def test_local_matches_brute_force(small_family, small_brute):
    for name, h in small_family[:20]:
        for q in (0, h.edge_count // 2, h.edge_count - 1):
            label = h.edge_labels[q]
            for v in Variant:
                expected = [r for r in small_brute[name, v] if q in r.ranks][:3]
                found = max_search(h, SearchConfig(variant=v, mode="local", k=3, query_label=label))
                assert [r.ranks for r in found] == [r.ranks for r in expected], (name, q, v)
                assert all(q in r.ranks for r in found)


def test_threads_do_not_change_results(small_family):
    for name, h in small_family:
        for v in Variant:
            one = max_search(h, SearchConfig(variant=v, mode="topk", k=5, threads=1))
            four = max_search(h, SearchConfig(variant=v, mode="topk", k=5, threads=4))
            assert [r.ranks for r in four] == [r.ranks for r in one], (name, v)
            assert [r.weight for r in four] == [r.weight for r in one], (name, v)


def test_pruning_threshold_never_falls(mocker, family):
    """Test every threshold the search prunes with is at least the one read before it."""
    name, h = max(family, key=lambda item: item[1].edge_count)
    read = mocker.spy(pruned._Search, "_bounds")
    for v in Variant:
        start = len(read.spy_return_list)
        max_search(h, SearchConfig(variant=v, mode="topk", k=3))
        seen = [bounds.threshold for bounds in read.spy_return_list[start:]]
        assert seen[0] is None, (name, v)
        raised = [t for t in seen if t is not None]
        assert raised, (name, v)
        assert seen.index(raised[0]) + len(raised) == len(seen), (name, v)
        assert all(a <= b for a, b in zip(raised, raised[1:])), (name, v)


def test_no_closed_triplet_gives_empty_list(make_hypergraph):
    h = make_hypergraph([1, 2], [3, 4], [5, 6], [7])
    assert max_search(h, SearchConfig(variant="common")) == []
    assert max_search(h, SearchConfig(variant="disjoint", mode="topk", k=4)) == []


def test_weight_zero_closed_triplets_are_candidates(make_hypergraph):
    # closed but no node in all three hyperedges
    h = make_hypergraph([1, 2], [2, 3], [1, 3])
    [result] = max_search(h, SearchConfig(variant=Variant.COMMON))
    assert result.weight == Weight(0, 1)
    assert basic_search(h, Variant.COMMON).ranks == result.ranks


def test_degree_floor_two_is_exact(small_family):
    for name, h in small_family[:10]:
        for v in Variant:
            plain = max_search(h, SearchConfig(variant=v))
            floored = max_search(h, SearchConfig(variant=v, degree_floor=2))
            assert [r.ranks for r in floored] == [r.ranks for r in plain], (name, v)


def test_requires_three_edges(make_hypergraph):
    with pytest.raises(SearchError):
        max_search(make_hypergraph([1], [1, 2]), SearchConfig(variant=1))


def test_unknown_query_label(golden):
    with pytest.raises(SearchError, match="Unknown query"):
        max_search(golden, SearchConfig(variant=1, mode="local", query_label="zzz"))


@pytest.mark.parametrize("kwargs", [
    {"variant": "common", "mode": "threshold"},
    {"variant": "common", "mode": "local"},
    {"variant": "common", "mode": "topk", "k": 0},
    {"variant": "common", "threads": 0},
    {"variant": "sideways"},
    {"variant": "common", "mode": "threshold", "tau": "1/0"},
])
def test_invalid_config(kwargs):
    with pytest.raises(SearchError, match="Invalid search configuration"):
        make_config(**kwargs)


def test_config_parses_tau_and_variant():
    cfg = make_config(variant="disjoint", mode="threshold", tau="3/4")
    assert cfg.variant is Variant.DISJOINT
    assert cfg.tau == Weight(3, 4)
    assert cfg.mode is SearchMode.THRESHOLD
