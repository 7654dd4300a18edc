#!/usr/bin/env python3
"""Random hypergraphs from the Erdős–Rényi and Chung–Lu bipartite models.

Every generator draws from a numpy PCG64 bit generator seeded from its
parameters. Reference samplers consume one uniform per (edge, node) pair
in row-major order, so equal parameters give the same hypergraph.
"""
import logging
import math
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from exceptions import GeneratorError
from hypergraph import CanonicalHypergraph, Hypergraph

logger = logging.getLogger(__name__)

MAX_SEED = 2 ** 64 - 1


class ERSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_nodes: int = Field(ge=0)
    n_edges: int = Field(ge=0)
    p: float = Field(ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)


class ChungLuSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    node_degrees: List[int]
    edge_sizes: List[int]
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    fast: bool = False

    @model_validator(mode="after")
    def _check_sequences(self):
        if any(d < 0 for d in self.node_degrees) or any(s < 0 for s in self.edge_sizes):
            raise ValueError("degree and size sequences must be nonnegative")
        if sum(self.node_degrees) != sum(self.edge_sizes):
            raise ValueError(f"sequence sums differ: {sum(self.node_degrees)} != {sum(self.edge_sizes)}")
        return self

    @property
    def total(self) -> int:
        return sum(self.edge_sizes)


def er_spec(**kwargs) -> ERSpec:
    try:
        return ERSpec(**kwargs)
    except ValidationError as e:
        raise GeneratorError("Invalid Erdős–Rényi parameters.", details=str(e))


def chung_lu_spec(**kwargs) -> ChungLuSpec:
    try:
        return ChungLuSpec(**kwargs)
    except ValidationError as e:
        raise GeneratorError("Invalid Chung–Lu parameters.", details=str(e))


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_er(spec: ERSpec) -> Hypergraph:
    """Each (node, edge) membership is an independent Bernoulli(p) draw."""
    logger.info(f"Generating Erdős–Rényi hypergraph: {spec.n_nodes} nodes, {spec.n_edges} edges, "
                f"p={spec.p}, seed={spec.seed}.")
    rng = _rng(spec.seed)
    edges = []
    for _ in range(spec.n_edges):
        draws = rng.random(spec.n_nodes)
        edges.append(np.flatnonzero(draws < spec.p).tolist())
    return _finish(edges, "Erdős–Rényi")


def membership_probabilities(spec: ChungLuSpec) -> np.ndarray:
    """Matrix of min(1, d_v * s_e / M), one row per edge."""
    if spec.total == 0:
        return np.zeros((len(spec.edge_sizes), len(spec.node_degrees)))
    degrees = np.asarray(spec.node_degrees, dtype=float)
    sizes = np.asarray(spec.edge_sizes, dtype=float)
    return np.minimum(1.0, np.outer(sizes, degrees) / spec.total)


def gen_chung_lu(spec: ChungLuSpec) -> Hypergraph:
    """Membership (v, e) with probability min(1, d_v * s_e / M), independently."""
    mode = "fast" if spec.fast else "reference"
    logger.info(f"Generating Chung–Lu hypergraph ({mode} sampler): {len(spec.node_degrees)} nodes, "
                f"{len(spec.edge_sizes)} edges, seed={spec.seed}.")
    rng = _rng(spec.seed)
    if spec.total == 0:
        return _finish([[] for _ in spec.edge_sizes], "Chung–Lu")
    if spec.fast:
        return _finish(_skipping_memberships(spec, rng), "Chung–Lu")
    degrees = np.asarray(spec.node_degrees, dtype=float)
    edges = []
    for size in spec.edge_sizes:
        probs = np.minimum(1.0, degrees * size / spec.total)
        draws = rng.random(len(degrees))
        edges.append(np.flatnonzero(draws < probs).tolist())
    return _finish(edges, "Chung–Lu")


def _skipping_memberships(spec: ChungLuSpec, rng: np.random.Generator) -> List[List[int]]:
    """Geometric skipping over nodes sorted by degree, descending.

    Expected time is linear in the number of memberships drawn rather than
    in nodes times edges.
    """
    order = sorted(range(len(spec.node_degrees)), key=lambda v: (-spec.node_degrees[v], v))
    degrees = [spec.node_degrees[v] for v in order]
    n = len(order)
    edges = []
    for size in spec.edge_sizes:
        members = []
        v = 0
        p = min(1.0, degrees[0] * size / spec.total) if n else 0.0
        while v < n and p > 0:
            if p < 1:
                r = 1.0 - rng.random()
                v += int(math.floor(math.log(r) / math.log(1 - p)))
            if v < n:
                q = min(1.0, degrees[v] * size / spec.total)
                if rng.random() < q / p:
                    members.append(order[v])
                p = q
                v += 1
        edges.append(sorted(members))
    return edges


def degree_sequence(h) -> Tuple[List[int], List[int]]:
    """Node degrees (by node id) and edge sizes (by edge id; by rank for a canonical hypergraph)."""
    base = h.hypergraph if isinstance(h, CanonicalHypergraph) else h
    return [len(incident) for incident in base.node_adj], [len(nodes) for nodes in base.edges]


def _finish(edges: List[List[int]], model: str) -> Hypergraph:
    h = Hypergraph.from_edges(edges)
    logger.info(f"Generated {model} hypergraph with {h.node_count} nodes, {h.edge_count} hyperedges "
                f"and {h.degree_sum} memberships ({h.dropped_empty} empty hyperedges dropped).")
    return h
