#!/usr/bin/env python3
"""Pruned triplet search with edge, pair and triplet upper bounds.

The outer loop walks hyperedges y in ascending rank and only considers
triplets with y as the middle rank (x < y < z). Intersections of y with
higher-ranked edges are gathered once per y and, when y can still
contribute, published to a shared pair cache for later iterations.

A subtree is skipped only when its bound is strictly below the current
threshold, so equal-weight triplets are still visited and the
lexicographic tie rule holds regardless of visiting order.
"""
import logging
import threading
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, InstanceOf, ValidationError, field_validator, model_validator

from bounds import BoundSet
from collectors import SharedThreshold, ThresholdCollector, ThresholdHook, TopKCollector, merge_results
from exceptions import SearchError
from hypergraph import CanonicalHypergraph
from intersections import intersect, intersect_size
from results import TripletResult
from variant_types import Variant, parse_variant
from weights import RegionSizes, Weight, weight

logger = logging.getLogger(__name__)

_EMPTY: List[int] = []


class SearchMode(str, Enum):
    MAX = "max"
    TOPK = "topk"
    THRESHOLD = "threshold"
    LOCAL = "local"


class SearchConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    variant: Variant
    mode: SearchMode = SearchMode.MAX
    k: int = Field(default=1, ge=1)
    tau: Optional[InstanceOf[Weight]] = None
    query_label: Optional[str] = None
    threads: int = Field(default=1, ge=1)
    degree_floor: int = Field(default=0, ge=0)

    @field_validator("variant", mode="before")
    @classmethod
    def _parse_variant(cls, value):
        return parse_variant(value)

    @field_validator("tau", mode="before")
    @classmethod
    def _parse_tau(cls, value):
        if value is None or isinstance(value, Weight):
            return value
        return Weight.parse(value)

    @model_validator(mode="after")
    def _check_mode(self):
        if self.mode == SearchMode.THRESHOLD and self.tau is None:
            raise ValueError("threshold mode requires tau")
        if self.mode == SearchMode.LOCAL and not self.query_label:
            raise ValueError("local mode requires query_label")
        return self


def make_config(**kwargs) -> SearchConfig:
    try:
        return SearchConfig(**kwargs)
    except ValidationError as e:
        raise SearchError("Invalid search configuration.", details=str(e))


class _PairCache:
    """Intersections of each processed edge x with higher ranks below ``cut[x]``.

    For z < cut[x] a missing entry means an empty intersection; anything
    else falls back to a merge, so lookups are exact in every mode.
    """

    def __init__(self, edge_count: int):
        self._lock = threading.Lock()
        self._higher: Dict[int, Dict[int, List[int]]] = {}
        self._cut: Dict[int, int] = {}
        self._lower: Dict[int, List[Tuple[int, List[int]]]] = {}
        self._done = [False] * edge_count
        self._frontier = 0
        self._min_cut = edge_count

    def store(self, x: int, partners: Dict[int, List[int]], cut: int) -> None:
        with self._lock:
            self._higher[x] = partners
            for z, nodes in partners.items():
                self._lower.setdefault(z, []).append((x, nodes))
            self._cut[x] = cut
            self._done[x] = True
            while self._frontier < len(self._done) and self._done[self._frontier]:
                self._min_cut = min(self._min_cut, self._cut[self._frontier])
                self._frontier += 1

    def nodes(self, x: int, z: int, lists: List[List[int]]) -> List[int]:
        cut = self._cut.get(x)
        if cut is not None and z < cut:
            return self._higher[x].get(z, _EMPTY)
        return intersect(lists[x], lists[z])

    def lower(self, y: int, lists: List[List[int]], adj: List[List[int]]) -> List[Tuple[int, List[int]]]:
        """Edges x < y intersecting y, with the intersection."""
        if self._frontier >= y and self._min_cut > y:
            return self._lower.get(y, [])
        found: Dict[int, List[int]] = {}
        for u in lists[y]:
            for x in adj[u]:
                if x >= y:
                    break
                found.setdefault(x, []).append(u)
        return sorted(found.items())


class _Search:
    def __init__(self, h: CanonicalHypergraph, cfg: SearchConfig, on_threshold: Optional[ThresholdHook]):
        self.h = h
        self.cfg = cfg
        self.v = cfg.variant
        self.on_threshold = on_threshold
        self.n = h.edge_count
        self.sizes = [h.size(r) for r in range(self.n)]
        self.lists = h.intersection_edges(cfg.degree_floor)
        self.adj = h.node_adj
        self.cache = _PairCache(self.n)
        self.shared = SharedThreshold()
        self.logger = logging.getLogger(__name__)

    # -- collectors and thresholds --

    def _collector(self):
        if self.cfg.mode == SearchMode.THRESHOLD:
            return ThresholdCollector(self.cfg.tau, self.on_threshold)
        k = 1 if self.cfg.mode == SearchMode.MAX else self.cfg.k
        return TopKCollector(k, self.on_threshold)

    def _limit(self) -> Optional[int]:
        if self.cfg.mode == SearchMode.THRESHOLD:
            return None
        return 1 if self.cfg.mode == SearchMode.MAX else self.cfg.k

    def _bounds(self, collector) -> BoundSet:
        own = collector.threshold()
        shared = self.shared.get()
        if own is None or (shared is not None and shared > own):
            own = shared
        return BoundSet(self.v, own)

    def _offer(self, collector, ranks: Tuple[int, int, int], r: RegionSizes, w: Weight) -> None:
        if collector.offer(TripletResult.build(self.h, ranks, r, self.v, w)):
            self.shared.raise_to(collector.threshold())

    def _cut_after(self, y: int, bounds: BoundSet) -> int:
        """First rank after y whose edge can no longer reach the threshold."""
        lo, hi = y + 1, self.n
        while lo < hi:
            mid = (lo + hi) // 2
            if bounds.edge_ok(self.sizes[mid]):
                lo = mid + 1
            else:
                hi = mid
        return lo

    # -- main loop --

    def run(self) -> List[TripletResult]:
        threads = min(self.cfg.threads, max(self.n, 1))
        if threads == 1:
            parts = [self._worker(0, 1)]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [pool.submit(self._worker, offset, threads) for offset in range(threads)]
                parts = [future.result() for future in futures]
        return merge_results(parts, self._limit())

    def _worker(self, offset: int, stride: int) -> List[TripletResult]:
        collector = self._collector()
        for y in range(offset, self.n, stride):
            if not self._scan(y, collector):
                break
            if y and y % 1000 == 0:
                self.logger.debug(f"Processed outer hyperedge {y} of {self.n}.")
        return collector.results()

    def _scan(self, y: int, collector) -> bool:
        bounds = self._bounds(collector)
        if not bounds.edge_ok(self.sizes[y]):
            self.cache.store(y, {}, y + 1)
            return False
        limit = self._cut_after(y, bounds)
        above: Dict[int, List[int]] = {}
        for u in self.lists[y]:
            incident = self.adj[u]
            for z in incident[bisect_right(incident, y):]:
                if z >= limit:
                    break
                above.setdefault(z, []).append(u)

        if self.v == Variant.INDEPENDENT:
            self._scan_independent(y, above, collector)
        else:
            self._scan_closed(y, above, collector)

        bounds = self._bounds(collector)
        if bounds.edge_ok(self.sizes[y]):
            cut = self._cut_after(y, bounds)
            self.cache.store(y, {z: nodes for z, nodes in above.items() if z < cut}, cut)
        else:
            self.cache.store(y, {}, y + 1)
        return True

    def _scan_independent(self, y: int, above: Dict[int, List[int]], collector) -> None:
        sizes = self.sizes
        sy = sizes[y]
        for z in range(y + 1, self.n):
            bounds = self._bounds(collector)
            sz = sizes[z]
            if not bounds.edge_ok(sz):
                break
            n_yz = above.get(z, _EMPTY)
            d_yz = len(n_yz)
            if not bounds.pair_ok(sy, sz, d_yz):
                continue
            for x in range(y):
                n_xy = self.cache.nodes(x, y, self.lists)
                n_xz = self.cache.nodes(x, z, self.lists)
                partial = RegionSizes(sizes[x], sy, sz, len(n_xy), len(n_xz), d_yz, 0)
                if not bounds.triplet_ok(partial):
                    continue
                xyz = intersect_size(n_xy, n_yz) if n_xy and n_xz and n_yz else 0
                r = replace(partial, xyz=xyz)
                w = weight(r, self.v)
                if bounds.threshold is None or w >= bounds.threshold:
                    self._offer(collector, (x, y, z), r, w)
                    bounds = self._bounds(collector)

    def _scan_closed(self, y: int, above: Dict[int, List[int]], collector) -> None:
        sizes = self.sizes
        sy = sizes[y]
        below = self.cache.lower(y, self.lists, self.adj)
        if not below:
            return
        for z in sorted(above):
            bounds = self._bounds(collector)
            sz = sizes[z]
            if not bounds.edge_ok(sz):
                break
            n_yz = above[z]
            if not bounds.pair_ok(sy, sz, len(n_yz)):
                continue
            for x, n_xy in below:
                if not bounds.pair_ok(sizes[x], sy, len(n_xy)):
                    continue
                n_xz = self.cache.nodes(x, z, self.lists)
                if not n_xz:
                    continue
                partial = RegionSizes(sizes[x], sy, sz, len(n_xy), len(n_xz), len(n_yz), 0)
                if not bounds.triplet_ok(partial):
                    continue
                r = replace(partial, xyz=intersect_size(n_xy, n_yz))
                w = weight(r, self.v)
                if bounds.threshold is None or w >= bounds.threshold:
                    self._offer(collector, (x, y, z), r, w)
                    bounds = self._bounds(collector)

    # -- local mode --

    def run_local(self, q: int) -> List[TripletResult]:
        collector = self._collector()
        sizes = self.sizes
        sq = sizes[q]
        touching: Dict[int, List[int]] = {}
        for u in self.lists[q]:
            for e in self.adj[u]:
                if e != q:
                    touching.setdefault(e, []).append(u)
        if self.v == Variant.INDEPENDENT:
            partners = [e for e in range(self.n) if e != q]
        else:
            partners = sorted(touching)

        for i, a in enumerate(partners):
            bounds = self._bounds(collector)
            if not bounds.edge_ok(min(sq, sizes[a])):
                break
            n_qa = touching.get(a, _EMPTY)
            if self.v != Variant.INDEPENDENT and not n_qa:
                continue
            if not bounds.pair_ok(sq, sizes[a], len(n_qa)):
                continue
            for b in partners[i + 1:]:
                bounds = self._bounds(collector)
                if not bounds.edge_ok(min(sq, sizes[b])):
                    break
                n_qb = touching.get(b, _EMPTY)
                d_ab = intersect_size(self.lists[a], self.lists[b])
                if self.v != Variant.INDEPENDENT and not d_ab:
                    continue
                pair = {frozenset((q, a)): len(n_qa), frozenset((q, b)): len(n_qb), frozenset((a, b)): d_ab}
                x, y, z = sorted((q, a, b))
                partial = RegionSizes(sizes[x], sizes[y], sizes[z], pair[frozenset((x, y))],
                                      pair[frozenset((x, z))], pair[frozenset((y, z))], 0)
                if not bounds.triplet_ok(partial):
                    continue
                xyz = intersect_size(n_qa, self.lists[b]) if n_qa and n_qb and d_ab else 0
                r = replace(partial, xyz=xyz)
                w = weight(r, self.v)
                if bounds.threshold is None or w >= bounds.threshold:
                    self._offer(collector, (x, y, z), r, w)
        return collector.results()


def max_search(h: CanonicalHypergraph, cfg: SearchConfig,
               on_threshold: Optional[ThresholdHook] = None) -> List[TripletResult]:
    """Pruned search in max, top-k, threshold or local mode.

    Results come best first: weight descending, then ascending ranks.
    ``on_threshold`` is called each time a worker's running threshold rises.
    """
    if h.edge_count < 3:
        raise SearchError(f"At least 3 hyperedges are required, got {h.edge_count}.")
    search = _Search(h, cfg, on_threshold)
    name = cfg.variant.name.lower()
    if cfg.mode == SearchMode.LOCAL:
        q = h.rank_of_label(cfg.query_label)
        if q is None:
            raise SearchError(f"Unknown query hyperedge '{cfg.query_label}'.")
        logger.info(f"Running local {name} search around hyperedge '{cfg.query_label}' (k={cfg.k}).")
        results = search.run_local(q)[:cfg.k]
    else:
        logger.info(f"Running {cfg.mode.value} {name} search on {h.edge_count} hyperedges "
                    f"with {cfg.threads} thread(s).")
        results = search.run()
    logger.info(f"Search returned {len(results)} triplet(s).")
    return results
