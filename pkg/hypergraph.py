#!/usr/bin/env python3
"""Hypergraph loading, canonical ordering and statistics.

Hyperedges are strictly ascending lists of dense node ids; ``node_adj`` is the
inverse incidence. Node ids are assigned in first-seen order.
"""
import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, TextIO

from exceptions import InputFormatError

logger = logging.getLogger(__name__)

COMMENT_CHAR = "#"


@dataclass(frozen=True)
class Hypergraph:
    edges: List[List[int]]
    node_adj: List[List[int]]
    node_labels: List[str]
    edge_labels: List[str]
    dedup_count: int = 0
    dropped_empty: int = 0

    @property
    def node_count(self) -> int:
        return len(self.node_adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degree_sum(self) -> int:
        return sum(len(e) for e in self.edges)

    @classmethod
    def from_edges(cls, edge_lists: Iterable[Iterable[Hashable]],
                   edge_labels: Optional[Sequence[str]] = None,
                   dedup_count: int = 0) -> "Hypergraph":
        """Build a hypergraph from node tokens per hyperedge.

        Tokens are interned in first-seen order. Repeated tokens inside one
        hyperedge are collapsed and counted; empty hyperedges are dropped.
        """
        node_ids: Dict[Hashable, int] = {}
        node_labels: List[str] = []
        edges: List[List[int]] = []
        kept_labels: List[str] = []
        dropped = 0
        for index, tokens in enumerate(edge_lists):
            members = set()
            for token in tokens:
                node = node_ids.get(token)
                if node is None:
                    node = len(node_labels)
                    node_ids[token] = node
                    node_labels.append(str(token))
                if node in members:
                    dedup_count += 1
                members.add(node)
            if not members:
                dropped += 1
                continue
            edges.append(sorted(members))
            kept_labels.append(str(edge_labels[index]) if edge_labels is not None else str(len(kept_labels)))

        if dropped:
            logger.warning(f"Dropped {dropped} empty hyperedges.")
        if dedup_count:
            logger.warning(f"Collapsed {dedup_count} duplicate node tokens inside hyperedges.")

        return cls(
            edges=edges,
            node_adj=_build_adjacency(edges, len(node_labels)),
            node_labels=node_labels,
            edge_labels=kept_labels,
            dedup_count=dedup_count,
            dropped_empty=dropped
        )

    def validate(self) -> None:
        """Full scan of incidence symmetry and the storage invariants."""
        seen = 0
        for e, nodes in enumerate(self.edges):
            if not nodes:
                raise InputFormatError(f"Hyperedge {e} is empty.")
            for prev, node in zip(nodes, nodes[1:]):
                if prev >= node:
                    raise InputFormatError(f"Hyperedge {e} is not strictly ascending.")
            for node in nodes:
                if not _contains(self.node_adj[node], e):
                    raise InputFormatError(f"Node {node} is missing hyperedge {e} in its adjacency.")
            seen += len(nodes)
        adjacency_total = 0
        for node, incident in enumerate(self.node_adj):
            for prev, e in zip(incident, incident[1:]):
                if prev >= e:
                    raise InputFormatError(f"Adjacency of node {node} is not strictly ascending.")
            for e in incident:
                if not _contains(self.edges[e], node):
                    raise InputFormatError(f"Hyperedge {e} is missing node {node}.")
            adjacency_total += len(incident)
        if seen != adjacency_total:
            raise InputFormatError("Incidence counts differ between hyperedges and nodes.",
                                   details=f"{seen} != {adjacency_total}")


@dataclass(frozen=True)
class HypergraphStats:
    node_count: int
    edge_count: int
    degree_sum: int
    max_edge_size: int

    def to_dict(self) -> Dict[str, int]:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "degree_sum": self.degree_sum,
            "max_edge_size": self.max_edge_size
        }


@dataclass(frozen=True)
class CanonicalHypergraph:
    """Hypergraph whose edge ids are ranks by non-increasing cardinality.

    ``original_ids[r]`` is the id, in the source hypergraph, of the edge now
    at rank ``r``.
    """
    hypergraph: Hypergraph
    original_ids: List[int]
    _filtered: Dict[int, List[List[int]]] = field(default_factory=dict, compare=False, repr=False)

    @property
    def edges(self) -> List[List[int]]:
        return self.hypergraph.edges

    @property
    def node_adj(self) -> List[List[int]]:
        return self.hypergraph.node_adj

    @property
    def edge_labels(self) -> List[str]:
        return self.hypergraph.edge_labels

    @property
    def node_labels(self) -> List[str]:
        return self.hypergraph.node_labels

    @property
    def edge_count(self) -> int:
        return self.hypergraph.edge_count

    @property
    def node_count(self) -> int:
        return self.hypergraph.node_count

    def size(self, rank: int) -> int:
        return len(self.hypergraph.edges[rank])

    def rank_of_label(self, label: str) -> Optional[int]:
        for rank, edge_label in enumerate(self.hypergraph.edge_labels):
            if edge_label == label:
                return rank
        return None

    def intersection_edges(self, degree_floor: int = 0) -> List[List[int]]:
        """Edge node lists restricted to nodes of degree >= ``degree_floor``.

        Only used for intersections; cardinalities always use ``edges``.
        """
        if degree_floor <= 1:
            return self.hypergraph.edges
        cached = self._filtered.get(degree_floor)
        if cached is None:
            adj = self.hypergraph.node_adj
            cached = [[v for v in e if len(adj[v]) >= degree_floor] for e in self.hypergraph.edges]
            self._filtered[degree_floor] = cached
        return cached


def load_hyperlist(text_stream: TextIO) -> Hypergraph:
    """One hyperedge per line, whitespace-separated node tokens, '#' comments."""
    logger.info("Parsing hyperlist input.")
    token_lines = []
    for line in _read_lines(text_stream):
        tokens = line.split()
        if tokens:
            token_lines.append(tokens)
    if not token_lines:
        raise InputFormatError("Input contains zero hyperedges.")
    h = Hypergraph.from_edges(token_lines)
    logger.info(f"Loaded hypergraph with {h.node_count} nodes and {h.edge_count} hyperedges.")
    return h


def load_bipartite(text_stream: TextIO) -> Hypergraph:
    """One 'edge_label node_label' membership pair per line, '#' comments."""
    logger.info("Parsing bipartite input.")
    members: Dict[str, List[str]] = {}
    seen_pairs = set()
    duplicates = 0
    for number, line in enumerate(_read_lines(text_stream), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise InputFormatError(f"Malformed bipartite line {number}: expected 2 tokens, got {len(tokens)}.",
                                   details=line.strip())
        edge_label, node_label = tokens
        if (edge_label, node_label) in seen_pairs:
            duplicates += 1
            continue
        seen_pairs.add((edge_label, node_label))
        members.setdefault(edge_label, []).append(node_label)
    if not members:
        raise InputFormatError("Input contains zero hyperedges.")
    if duplicates:
        logger.warning(f"Ignored {duplicates} duplicate membership pairs.")
    labels = list(members)
    h = Hypergraph.from_edges([members[label] for label in labels], edge_labels=labels, dedup_count=duplicates)
    logger.info(f"Loaded hypergraph with {h.node_count} nodes and {h.edge_count} hyperedges.")
    return h


def load_path(path: str, input_format: str = "hyperlist") -> Hypergraph:
    loaders = {"hyperlist": load_hyperlist, "bipartite": load_bipartite}
    if input_format not in loaders:
        raise InputFormatError(f"Unknown input format '{input_format}'.")
    logger.info(f"Loading {input_format} file '{path}'.")
    try:
        with open(path, "r", encoding="utf-8", newline=None) as stream:
            return loaders[input_format](stream)
    except OSError as e:
        raise InputFormatError(f"Failed to read '{path}'.", details=str(e))


def export_hyperlist(h: Hypergraph, text_stream: TextIO) -> None:
    """Write one line per hyperedge, node tokens in internal sorted order."""
    for nodes in h.edges:
        text_stream.write(" ".join(h.node_labels[v] for v in nodes))
        text_stream.write("\n")


def canonicalize(h) -> CanonicalHypergraph:
    """Rename hyperedges by non-increasing cardinality, ties by ascending id."""
    base = h.hypergraph if isinstance(h, CanonicalHypergraph) else h
    order = sorted(range(base.edge_count), key=lambda e: (-len(base.edges[e]), e))
    edges = [base.edges[e] for e in order]
    ranked = Hypergraph(
        edges=edges,
        node_adj=_build_adjacency(edges, base.node_count),
        node_labels=base.node_labels,
        edge_labels=[base.edge_labels[e] for e in order],
        dedup_count=base.dedup_count,
        dropped_empty=base.dropped_empty
    )
    if isinstance(h, CanonicalHypergraph):
        order = [h.original_ids[e] for e in order]
    return CanonicalHypergraph(hypergraph=ranked, original_ids=order)


def stats(h) -> HypergraphStats:
    base = h.hypergraph if isinstance(h, CanonicalHypergraph) else h
    return HypergraphStats(
        node_count=base.node_count,
        edge_count=base.edge_count,
        degree_sum=base.degree_sum,
        max_edge_size=max((len(e) for e in base.edges), default=0)
    )


def _build_adjacency(edges: List[List[int]], node_count: int) -> List[List[int]]:
    adj: List[List[int]] = [[] for _ in range(node_count)]
    for e, nodes in enumerate(edges):
        for v in nodes:
            adj[v].append(e)
    return adj


def _contains(sorted_list: List[int], value: int) -> bool:
    i = bisect_left(sorted_list, value)
    return i < len(sorted_list) and sorted_list[i] == value


def _read_lines(text_stream: TextIO):
    try:
        for raw in text_stream:
            line = raw.split(COMMENT_CHAR, 1)[0].rstrip("\r\n")
            yield line
    except (OSError, UnicodeDecodeError) as e:
        raise InputFormatError("Failed to read hypergraph input.", details=str(e))
