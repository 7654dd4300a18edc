#!/usr/bin/env python3
"""Exhaustive triplet search: the correctness oracle and the runtime baseline."""
import logging
from bisect import bisect_right
from math import comb
from typing import List, Optional

from bounds import edge_bound
from exceptions import SearchError
from hypergraph import CanonicalHypergraph
from intersections import PairIndex, intersect3_size, intersect_size
from results import TripletResult
from variant_types import Variant
from weights import RegionSizes, region_sizes, weight

logger = logging.getLogger(__name__)

DEFAULT_BRUTE_FORCE_CAP = 2_000_000


def pairwise_intersections(h: CanonicalHypergraph, keep_nodes: bool = True,
                           degree_floor: int = 0) -> PairIndex:
    """Every non-empty pairwise intersection, via each node's higher-id incident edges."""
    lists = h.intersection_edges(degree_floor)
    adj = h.node_adj
    index = PairIndex(keep_nodes=keep_nodes)
    for x, nodes in enumerate(lists):
        local = {}
        for u in nodes:
            incident = adj[u]
            for y in incident[bisect_right(incident, x):]:
                local.setdefault(y, []).append(u)
        for y in sorted(local):
            index.add(x, y, local[y])
    logger.debug(f"Pair index holds {len(index)} intersecting pairs.")
    return index


def basic_search(h: CanonicalHypergraph, v: Variant, degree_floor: int = 0) -> TripletResult:
    """Maximum-weight triplet over the whole candidate set, in ascending rank order.

    Independent considers every triplet; disjoint and common consider closed
    triplets only. Loops break once the cardinality bound of the current rank
    can no longer beat the best weight.
    """
    v = Variant(v)
    _require_triplets(h)
    logger.info(f"Running basic search for the {v.name.lower()} variant on {h.edge_count} hyperedges.")
    lists = h.intersection_edges(degree_floor)
    index = pairwise_intersections(h, keep_nodes=v != Variant.INDEPENDENT, degree_floor=degree_floor)
    sizes = [h.size(r) for r in range(h.edge_count)]
    best: Optional[TripletResult] = None

    def alive(size: int) -> bool:
        return best is None or edge_bound(v, size, best.weight)

    if v == Variant.INDEPENDENT:
        n = h.edge_count
        for x in range(n):
            if not alive(sizes[x]):
                break
            for y in range(x + 1, n):
                if not alive(sizes[y]):
                    break
                xy = index.size(x, y)
                for z in range(y + 1, n):
                    if not alive(sizes[z]):
                        break
                    xz = index.size(x, z)
                    yz = index.size(y, z)
                    xyz = intersect3_size(lists[x], lists[y], lists[z]) if min(xy, xz, yz) else 0
                    r = RegionSizes(sizes[x], sizes[y], sizes[z], xy, xz, yz, xyz)
                    w = weight(r, v)
                    if best is None or w > best.weight:
                        best = TripletResult.build(h, (x, y, z), r, v, w)
    else:
        for x in range(h.edge_count):
            if not alive(sizes[x]):
                break
            partners = index.higher(x)
            for i, y in enumerate(partners):
                if not alive(sizes[y]):
                    break
                nodes_xy = index.nodes(x, y)
                for z in partners[i + 1:]:
                    if not alive(sizes[z]):
                        break
                    yz = index.size(y, z)
                    if not yz:
                        continue
                    xyz = intersect_size(nodes_xy, lists[z])
                    r = RegionSizes(sizes[x], sizes[y], sizes[z], len(nodes_xy), index.size(x, z), yz, xyz)
                    w = weight(r, v)
                    if best is None or w > best.weight:
                        best = TripletResult.build(h, (x, y, z), r, v, w)

    if best is None:
        logger.warning(f"No closed triplet exists for the {v.name.lower()} variant.")
        return TripletResult.no_candidate(v)
    logger.info(f"Basic search found {best.labels} with weight {best.weight}.")
    return best


def brute_force_all(h: CanonicalHypergraph, v: Variant, cap: int = DEFAULT_BRUTE_FORCE_CAP,
                    degree_floor: int = 0) -> List[TripletResult]:
    """Every candidate triplet with its weight, computed directly from the edge lists."""
    v = Variant(v)
    _require_triplets(h)
    n = h.edge_count
    total = comb(n, 3)
    if total > cap:
        raise SearchError(f"Brute force would enumerate {total} triplets, above the cap of {cap}.")
    results = []
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                r = region_sizes(h, (x, y, z), degree_floor)
                if v != Variant.INDEPENDENT and min(r.xy, r.xz, r.yz) == 0:
                    continue
                results.append(TripletResult.build(h, (x, y, z), r, v))
    return results


def best_of(results: List[TripletResult]) -> Optional[TripletResult]:
    best = None
    for result in results:
        if best is None or result.beats(best):
            best = result
    return best


def _require_triplets(h: CanonicalHypergraph) -> None:
    if h.edge_count < 3:
        raise SearchError(f"At least 3 hyperedges are required, got {h.edge_count}.")
