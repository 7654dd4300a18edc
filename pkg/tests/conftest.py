#!/usr/bin/env python3
import io
import os
import sys

import numpy as np
import pytest

# Add project root to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from exhaustive import brute_force_all  # noqa: E402
from generators import ChungLuSpec, ERSpec, gen_chung_lu, gen_er  # noqa: E402
from hypergraph import canonicalize, load_hyperlist  # noqa: E402
from variant_types import Variant  # noqa: E402

# Edge A has 7 exclusive nodes, B 5 and C 6; pairwise-only regions 2, 2, 3; one common node.
EDGE_A = list(range(1, 13))
EDGE_B = [8, 9, 12, 13, 14, 15, 16, 17, 18, 19, 20]
EDGE_C = [10, 11, 12, 18, 19, 20, 21, 22, 23, 24, 25, 26]

GOLDEN_TEXT = "\n".join(" ".join(str(v) for v in edge) for edge in (EDGE_A, EDGE_B, EDGE_C)) + "\n"


@pytest.fixture
def golden_text():
    return GOLDEN_TEXT


@pytest.fixture
def golden():
    return canonicalize(load_hyperlist(io.StringIO(GOLDEN_TEXT)))


@pytest.fixture
def golden_file(tmp_path):
    path = tmp_path / "golden.hyperlist"
    path.write_text(GOLDEN_TEXT)
    return str(path)


def hyperlist(*edges):
    return canonicalize(load_hyperlist(io.StringIO("\n".join(" ".join(str(v) for v in e) for e in edges))))


def random_chung_lu(seed: int, max_edges: int = 60, max_nodes: int = 80):
    """Zipf-like edge sizes over a Zipf-like degree sequence with the same total."""
    rng = np.random.default_rng(seed)
    n_edges = int(rng.integers(3, max_edges + 1))
    n_nodes = int(rng.integers(5, max_nodes + 1))
    sizes = np.minimum(rng.zipf(2.0, n_edges), n_nodes).tolist()
    weights = 1.0 / np.arange(1, n_nodes + 1)
    degrees = rng.multinomial(sum(sizes), weights / weights.sum()).tolist()
    h = gen_chung_lu(ChungLuSpec(node_degrees=degrees, edge_sizes=sizes, seed=seed))
    return canonicalize(h) if h.edge_count >= 3 else None


def random_er(seed: int, max_edges: int = 60, max_nodes: int = 80):
    rng = np.random.default_rng(10_000 + seed)
    spec = ERSpec(
        n_nodes=int(rng.integers(5, max_nodes + 1)),
        n_edges=int(rng.integers(3, max_edges + 1)),
        p=float(rng.uniform(0.02, 0.3)),
        seed=seed
    )
    h = gen_er(spec)
    return canonicalize(h) if h.edge_count >= 3 else None


def instance_family(count: int = 100, max_edges: int = 60):
    """(name, hypergraph) pairs: `count` Chung–Lu and `count` Erdős–Rényi instances."""
    family = []
    for seed in range(count):
        for name, build in (("chung-lu", random_chung_lu), ("er", random_er)):
            h = build(seed, max_edges=max_edges)
            if h is not None:
                family.append((f"{name}-{seed}", h))
    return family


@pytest.fixture
def make_hypergraph():
    """Build a canonical hypergraph from node lists, one per hyperedge."""
    return hyperlist


@pytest.fixture(scope="session")
def family():
    return instance_family(100)


@pytest.fixture(scope="session")
def small_family():
    return instance_family(25, max_edges=30)


@pytest.fixture(scope="session")
def small_brute(small_family):
    """Every candidate of each small instance, best first."""
    return {(name, v): sorted(brute_force_all(h, v), reverse=True) for name, h in small_family for v in Variant}
