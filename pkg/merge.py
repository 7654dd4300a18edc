#!/usr/bin/env python3
"""Merge high-weight triplets into hyperedge clusters.

Vertices are hyperedge ranks; two hyperedges are joined by an edge whose
weight counts the triplets they share. Connected components of this graph
are the merged clusters.
"""
import json
import logging
from typing import Dict, Iterable, List, TextIO

import networkx as nx
from networkx.drawing.nx_pydot import to_pydot

from exceptions import MergeError
from results import TripletResult

logger = logging.getLogger(__name__)


def build_merge_graph(triplets: Iterable[TripletResult]) -> nx.Graph:
    g = nx.Graph()
    count = 0
    for result in triplets:
        if result.empty:
            continue
        count += 1
        for rank, label in zip(result.ranks, result.labels):
            g.add_node(rank, label=label)
        x, y, z = result.ranks
        for a, b in ((x, y), (x, z), (y, z)):
            if g.has_edge(a, b):
                g[a][b]["weight"] += 1
            else:
                g.add_edge(a, b, weight=1)
    if not count:
        raise MergeError("Cannot build a merge graph from zero triplets.")
    logger.info(f"Merge graph has {g.number_of_nodes()} hyperedges and {g.number_of_edges()} edges "
                f"from {count} triplets.")
    return g


def components(g: nx.Graph) -> List[List[int]]:
    """Connected components, largest first, ties by smallest member rank."""
    found = [sorted(component) for component in nx.connected_components(g)]
    found.sort(key=lambda members: (-len(members), members[0]))
    return found


def component_records(g: nx.Graph) -> List[Dict]:
    records = []
    for component_id, members in enumerate(components(g)):
        internal = g.subgraph(members).size(weight="weight")
        records.append({
            "component_id": component_id,
            "size": len(members),
            "members": [g.nodes[m].get("label", str(m)) for m in members],
            "ranks": members,
            "weight_total": int(internal)
        })
    return records


def write_components_json(g: nx.Graph, stream: TextIO) -> None:
    json.dump(component_records(g), stream, indent=2)
    stream.write("\n")


def export_dot(g: nx.Graph, penwidth_scale: float = 1.0) -> str:
    """DOT text with penwidth proportional to edge weight and original hyperedge labels."""
    drawn = nx.Graph()
    for node in sorted(g.nodes):
        drawn.add_node(node, label=g.nodes[node].get("label", str(node)))
    for a, b in sorted(tuple(sorted(edge)) for edge in g.edges):
        w = g[a][b]["weight"]
        drawn.add_edge(a, b, weight=w, penwidth=f"{w * penwidth_scale:g}")
    return to_pydot(drawn).to_string()
