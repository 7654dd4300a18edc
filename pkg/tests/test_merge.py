#!/usr/bin/env python3
import io
import json

import pydot
import pytest

from exceptions import MergeError
from merge import build_merge_graph, component_records, components, export_dot, write_components_json
from pruned import SearchConfig, max_search
from results import TripletResult
from variant_types import Variant
from weights import Weight


def _triplet(*ranks, labels=None):
    labels = labels or tuple(f"e{r}" for r in ranks)
    return TripletResult(ranks=tuple(ranks), labels=tuple(labels), sizes=None, weight=Weight(1, 1),
                         variant=Variant.COMMON)


def _dot_edges(text):
    [graph] = pydot.graph_from_dot_data(text)
    return graph.get_edges()


def test_single_triplet_gives_triangle():
    g = build_merge_graph([_triplet(0, 1, 2)])
    assert g.number_of_nodes() == 3
    assert sorted(g.edges(data="weight")) == [(0, 1, 1), (0, 2, 1), (1, 2, 1)]
    assert len(_dot_edges(export_dot(g))) == 3


def test_shared_pair_weight_counts_triplets():
    g = build_merge_graph([_triplet(0, 1, 2), _triplet(0, 1, 3)])
    assert g[0][1]["weight"] == 2
    assert g.size(weight="weight") == 6


def test_build_ignores_triplet_order():
    triplets = [_triplet(0, 1, 2), _triplet(1, 2, 5), _triplet(7, 8, 9)]
    forward = build_merge_graph(triplets)
    backward = build_merge_graph(list(reversed(triplets)))
    assert sorted(forward.edges(data="weight")) == sorted(backward.edges(data="weight"))


def test_penwidth_is_proportional_to_weight():
    g = build_merge_graph([_triplet(0, 1, 2), _triplet(0, 1, 3)])
    widths = {}
    for edge in _dot_edges(export_dot(g)):
        key = tuple(sorted((int(edge.get_source()), int(edge.get_destination()))))
        widths[key] = float(str(edge.get("penwidth")).strip('"'))
    assert widths[(0, 1)] == 2 * widths[(0, 2)]
    scaled = _dot_edges(export_dot(g, penwidth_scale=2.5))
    assert max(float(str(e.get("penwidth")).strip('"')) for e in scaled) == 5.0


def test_dot_reparses_with_labels():
    g = build_merge_graph([_triplet(0, 1, 2, labels=("alpha", "beta", "gamma"))])
    [graph] = pydot.graph_from_dot_data(export_dot(g))
    labels = {str(node.get("label")).strip('"') for node in graph.get_nodes() if node.get("label")}
    assert labels == {"alpha", "beta", "gamma"}


def test_empty_input_rejected():
    with pytest.raises(MergeError):
        build_merge_graph([])
    with pytest.raises(MergeError):
        build_merge_graph([TripletResult.no_candidate(Variant.COMMON)])


def test_components_sorted_by_size_then_smallest_member():
    g = build_merge_graph([_triplet(5, 6, 7), _triplet(0, 1, 2), _triplet(6, 7, 8)])
    assert components(g) == [[5, 6, 7, 8], [0, 1, 2]]
    g = build_merge_graph([_triplet(4, 5, 6), _triplet(0, 1, 2)])
    assert components(g) == [[0, 1, 2], [4, 5, 6]]


def test_planted_clusters_through_threshold_search(make_hypergraph):
    core_a = list(range(100, 110))
    core_b = list(range(200, 208))
    h = make_hypergraph(
        *[core_a + [1000 + i] for i in range(3)],
        *[core_b + [2000 + i] for i in range(4)],
        [1, 2], [2, 3], [3, 4]
    )
    found = max_search(h, SearchConfig(variant=Variant.COMMON, mode="threshold", tau="5/1"))
    assert len(found) == 1 + 4
    g = build_merge_graph(found)
    assert g.size(weight="weight") == 3 * len(found)
    records = component_records(g)
    assert [r["members"] for r in records] == [["3", "4", "5", "6"], ["0", "1", "2"]]
    assert [r["weight_total"] for r in records] == [12, 3]
    out = io.StringIO()
    write_components_json(g, out)
    assert json.loads(out.getvalue())[1]["ranks"] == [0, 1, 2]
