#!/usr/bin/env python3
import logging
import time
from typing import Any, Dict, List, Optional, TextIO

import networkx as nx

from census import CensusReport, census
from entropy import EntropyRow, entropy_report
from exceptions import HypergraphMinerError, InputFormatError, SearchError
from exhaustive import basic_search, brute_force_all
from generators import chung_lu_spec, degree_sequence, er_spec, gen_chung_lu, gen_er
from hypergraph import CanonicalHypergraph, Hypergraph, HypergraphStats, canonicalize, load_hyperlist, load_path, stats
from merge import build_merge_graph
from pruned import SearchMode, make_config, max_search
from results import TripletResult
from settings import MinerSettings, get_settings
from variant_types import ALGORITHMS, INPUT_FORMATS, Variant, parse_variant

NULL_MODELS = ("er", "chung-lu")


class HypergraphMiner:
    """Loads a hypergraph once and runs searches, census and reports on it."""

    def __init__(self, settings: Optional[MinerSettings] = None):
        self.settings = settings or get_settings()
        self.hypergraph: Optional[CanonicalHypergraph] = None
        self.logger = logging.getLogger(__name__)

    def load(self, input_path: Optional[str] = None, input_format: Optional[str] = None) -> CanonicalHypergraph:
        """Load and canonicalize a hypergraph file, falling back to the configured input path."""
        input_path = input_path or self.settings.input_path
        input_format = input_format or self.settings.input_format
        if not input_path:
            raise InputFormatError("No input path provided and HYPERTRIPLET_INPUT_PATH is not set.")
        if input_format not in INPUT_FORMATS:
            raise InputFormatError(f"Unknown input format '{input_format}'.",
                                   details=f"Expected one of: {', '.join(INPUT_FORMATS)}")
        self.logger.info(f"Opening hypergraph file: {input_path}")
        try:
            self.hypergraph = canonicalize(load_path(input_path, input_format))
            self.logger.info(f"Successfully loaded hypergraph file: {input_path}")
            return self.hypergraph
        except HypergraphMinerError:
            raise
        except Exception as e:
            raise HypergraphMinerError("Failed to load hypergraph.", details=str(e))

    def load_stream(self, stream: TextIO) -> CanonicalHypergraph:
        self.logger.info("Reading hyperlist from stream.")
        self.hypergraph = canonicalize(load_hyperlist(stream))
        return self.hypergraph

    def use(self, h) -> CanonicalHypergraph:
        """Adopt an in-memory hypergraph."""
        self.hypergraph = h if isinstance(h, CanonicalHypergraph) else canonicalize(h)
        return self.hypergraph

    def _require(self) -> CanonicalHypergraph:
        if self.hypergraph is None:
            raise HypergraphMinerError("No hypergraph loaded. Call load() first.")
        return self.hypergraph

    def get_stats(self) -> HypergraphStats:
        return stats(self._require())

    def search(self, variant, mode: str = "max", algo: str = "max", k: int = 1, tau: Optional[str] = None,
               query: Optional[str] = None, threads: Optional[int] = None,
               degree_floor: Optional[int] = None) -> List[TripletResult]:
        """Run one search; results come best first and never include an empty marker."""
        h = self._require()
        threads = threads if threads is not None else self.settings.threads
        degree_floor = degree_floor if degree_floor is not None else self.settings.degree_floor
        self.logger.info(f"Searching {mode} triplets for variant '{variant}' with algorithm '{algo}'.")
        try:
            v = parse_variant(variant)
            if algo not in ALGORITHMS:
                raise SearchError(f"Unknown algorithm '{algo}'.", details=f"Expected one of: {', '.join(ALGORITHMS)}")
            if degree_floor > 2:
                self.logger.warning(f"Degree floor {degree_floor} drops intersecting nodes; results are approximate.")
            if algo == "basic":
                if mode != "max":
                    raise SearchError("The basic algorithm only supports max mode.")
                best = basic_search(h, v, degree_floor=degree_floor)
                results = [] if best.empty else [best]
            else:
                cfg = make_config(variant=v, mode=SearchMode(mode), k=k, tau=tau, query_label=query,
                                  threads=threads, degree_floor=degree_floor)
                results = max_search(h, cfg)
            self.logger.info(f"Successfully found {len(results)} triplet(s).")
            return results
        except HypergraphMinerError:
            raise
        except Exception as e:
            raise HypergraphMinerError("Failed to search triplets.", details=str(e))

    def brute_force(self, variant, degree_floor: Optional[int] = None) -> List[TripletResult]:
        """Every candidate triplet, best first, refused above the configured brute force cap."""
        h = self._require()
        degree_floor = degree_floor if degree_floor is not None else self.settings.degree_floor
        self.logger.info(f"Enumerating every triplet for variant '{variant}'.")
        try:
            results = brute_force_all(h, parse_variant(variant), cap=self.settings.brute_force_cap,
                                      degree_floor=degree_floor)
            return sorted(results, reverse=True)
        except HypergraphMinerError:
            raise
        except Exception as e:
            raise HypergraphMinerError("Failed to enumerate triplets.", details=str(e))

    def merge(self, variant, tau: str, threads: Optional[int] = None,
              degree_floor: Optional[int] = None) -> nx.Graph:
        triplets = self.search(variant, mode="threshold", tau=tau, threads=threads, degree_floor=degree_floor)
        self.logger.info(f"Merging {len(triplets)} triplets with weight at least {tau}.")
        try:
            return build_merge_graph(triplets)
        except HypergraphMinerError:
            raise
        except Exception as e:
            raise HypergraphMinerError("Failed to merge triplets.", details=str(e))

    def census(self, max_edge_size: Optional[int] = None, null_model: Optional[str] = None,
               seed: int = 0) -> List[CensusReport]:
        """Census of the input, plus the size-filtered and null-model counterparts when requested."""
        h = self._require()
        self.logger.info("Running h-motif census.")
        try:
            reports = [census(h, source="original")]
            if max_edge_size is not None:
                reports.append(census(h, max_edge_size, source="filtered"))
            if null_model is not None:
                null = canonicalize(self.null_model(null_model, seed))
                reports.append(census(null, max_edge_size, source=null_model))
            self.logger.info(f"Successfully produced {len(reports)} census report(s).")
            return reports
        except HypergraphMinerError:
            raise
        except Exception as e:
            raise HypergraphMinerError("Failed to run census.", details=str(e))

    def null_model(self, model: str, seed: int = 0) -> Hypergraph:
        """Random counterpart of the loaded hypergraph with the same size statistics."""
        h = self._require()
        if model not in NULL_MODELS:
            raise HypergraphMinerError(f"Unknown null model '{model}'.",
                                       details=f"Expected one of: {', '.join(NULL_MODELS)}")
        if model == "er":
            s = stats(h)
            p = s.degree_sum / (s.node_count * s.edge_count)
            return gen_er(er_spec(n_nodes=s.node_count, n_edges=s.edge_count, p=p, seed=seed))
        degrees, sizes = degree_sequence(h)
        return gen_chung_lu(chung_lu_spec(node_degrees=degrees, edge_sizes=sizes, seed=seed))

    def generate(self, model: str, seed: int = 0, **params) -> Hypergraph:
        self.logger.info(f"Generating '{model}' hypergraph with seed {seed}.")
        try:
            if model == "er":
                return gen_er(er_spec(seed=seed, **params))
            if model == "chung-lu":
                return gen_chung_lu(chung_lu_spec(seed=seed, **params))
            raise HypergraphMinerError(f"Unknown generator model '{model}'.")
        except HypergraphMinerError:
            raise
        except Exception as e:
            raise HypergraphMinerError("Failed to generate hypergraph.", details=str(e))

    def entropy(self, variant, k: int, threads: Optional[int] = None,
                degree_floor: Optional[int] = None) -> List[EntropyRow]:
        v = parse_variant(variant)
        if v == Variant.COMMON:
            raise SearchError("Entropy report is defined for the independent and disjoint variants only.")
        results = self.search(v, mode="topk", k=k, threads=threads, degree_floor=degree_floor)
        try:
            return entropy_report(results, v)
        except HypergraphMinerError:
            raise
        except Exception as e:
            raise HypergraphMinerError("Failed to compute entropy report.", details=str(e))

    def bench(self, variant, repeat: int = 1, threads: Optional[int] = None) -> Dict[str, Any]:
        """Time the basic and pruned searches on the loaded hypergraph."""
        h = self._require()
        v = parse_variant(variant)
        self.logger.info(f"Benchmarking basic against max for variant '{v.name.lower()}' ({repeat} run(s)).")
        try:
            basic_times, max_times = [], []
            basic = pruned = None
            for _ in range(max(repeat, 1)):
                start = time.perf_counter()
                basic = basic_search(h, v)
                basic_times.append(time.perf_counter() - start)
                start = time.perf_counter()
                pruned = self.search(v, mode="max", threads=threads)
                max_times.append(time.perf_counter() - start)
            basic_seconds, max_seconds = min(basic_times), min(max_times)
            pruned_weight = pruned[0].weight if pruned else None
            report = {
                "variant": v.name.lower(),
                "edge_count": h.edge_count,
                "basic_seconds": basic_seconds,
                "max_seconds": max_seconds,
                "speedup": basic_seconds / max_seconds if max_seconds > 0 else None,
                "basic_weight": str(basic.weight),
                "max_weight": str(pruned_weight) if pruned_weight is not None else str(basic.weight),
                "weights_equal": basic.empty if pruned_weight is None else basic.weight == pruned_weight
            }
            self.logger.info(f"Benchmark finished: speedup {report['speedup']}.")
            return report
        except HypergraphMinerError:
            raise
        except Exception as e:
            raise HypergraphMinerError("Failed to benchmark searches.", details=str(e))
