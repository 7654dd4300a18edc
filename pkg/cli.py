#!/usr/bin/env python3
"""Command-line driver: searches, merge, census, generators and reports."""
import json
import logging
import sys
from enum import Enum
from typing import List, Optional

import click
import typer
from rich.console import Console
from rich.logging import RichHandler

from census import write_census_json, write_census_tsv
from entropy import write_entropy_tsv
from exceptions import HypergraphMinerError
from generators import degree_sequence
from hypergraph import export_hyperlist, stats
from merge import build_merge_graph, export_dot, write_components_json
from miner import HypergraphMiner
from results import TripletResult, write_results
from settings import get_settings

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

EXIT_ERROR = 1
EXIT_EMPTY = 2

app = typer.Typer(help="Mine high-weight hyperedge triplets.", no_args_is_help=True, add_completion=False)
gen_app = typer.Typer(help="Generate synthetic hypergraphs in hyperlist format.", no_args_is_help=True)
app.add_typer(gen_app, name="gen")

logger = logging.getLogger(__name__)


class InputFormat(str, Enum):
    hyperlist = "hyperlist"
    bipartite = "bipartite"


class VariantName(str, Enum):
    independent = "independent"
    disjoint = "disjoint"
    common = "common"


class EntropyVariant(str, Enum):
    independent = "independent"
    disjoint = "disjoint"


class Algorithm(str, Enum):
    basic = "basic"
    max = "max"


class OutFormat(str, Enum):
    jsonl = "jsonl"
    tsv = "tsv"


class CensusFormat(str, Enum):
    tsv = "tsv"
    json = "json"


class NullModel(str, Enum):
    er = "er"
    chung_lu = "chung-lu"


InputOpt = typer.Option(None, "--input", "-i", help="Hypergraph file (defaults to HYPERTRIPLET_INPUT_PATH).")
FormatOpt = typer.Option(None, "--format", "-f", help="Input format (defaults to HYPERTRIPLET_INPUT_FORMAT).")
VariantOpt = typer.Option(..., "--variant", "-v", help="Weight variant.")
ThreadsOpt = typer.Option(None, "--threads", min=1, help="Worker threads for the pruned search.")
FloorOpt = typer.Option(None, "--degree-floor", min=0, help="Ignore nodes below this degree in intersections.")
OutOpt = typer.Option(None, "--out", "-o", help="Output file (stdout when omitted).")
OutFormatOpt = typer.Option(OutFormat.jsonl, "--out-format", help="Result serialization.")


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True
    )


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", help="Log at DEBUG level.")):
    _configure_logging(verbose)


def _fail(e: HypergraphMinerError) -> typer.Exit:
    logger.error(f"{e.args[0]} - Details: {e.details}")
    typer.echo(json.dumps(e.to_dict()), err=True)
    return typer.Exit(code=EXIT_ERROR)


def _miner(input_path: Optional[str], input_format: Optional[InputFormat]) -> HypergraphMiner:
    miner = HypergraphMiner()
    miner.load(input_path, input_format.value if input_format else None)
    return miner


def _emit(results: List[TripletResult], out: Optional[str], out_format: OutFormat, schema_version: str) -> None:
    with click.open_file(out or "-", "w", encoding="utf-8") as stream:
        write_results(results, stream, out_format.value, schema_version)
    if not results:
        logger.warning("Empty result set.")
        raise typer.Exit(code=EXIT_EMPTY)


def _run_search(input_path, input_format, variant, out, out_format, **kwargs) -> None:
    try:
        miner = _miner(input_path, input_format)
        results = miner.search(variant.value, **kwargs)
    except HypergraphMinerError as e:
        raise _fail(e)
    _emit(results, out, out_format, miner.settings.schema_version)


@app.command("max")
def max_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                variant: VariantName = VariantOpt,
                algo: Algorithm = typer.Option(Algorithm.max, "--algo", help="Search algorithm."),
                threads: Optional[int] = ThreadsOpt, degree_floor: Optional[int] = FloorOpt,
                out: Optional[str] = OutOpt, out_format: OutFormat = OutFormatOpt):
    """Maximum-weight triplet."""
    _run_search(input_path, input_format, variant, out, out_format, mode="max", algo=algo.value,
                threads=threads, degree_floor=degree_floor)


@app.command("topk")
def topk_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                 variant: VariantName = VariantOpt, k: int = typer.Option(..., "--k", min=1),
                 threads: Optional[int] = ThreadsOpt, degree_floor: Optional[int] = FloorOpt,
                 out: Optional[str] = OutOpt, out_format: OutFormat = OutFormatOpt):
    """The k highest-weight triplets."""
    _run_search(input_path, input_format, variant, out, out_format, mode="topk", k=k,
                threads=threads, degree_floor=degree_floor)


@app.command("threshold")
def threshold_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                      variant: VariantName = VariantOpt,
                      tau: str = typer.Option(..., "--tau", help="Minimum weight as NUM/DEN."),
                      threads: Optional[int] = ThreadsOpt, degree_floor: Optional[int] = FloorOpt,
                      out: Optional[str] = OutOpt, out_format: OutFormat = OutFormatOpt):
    """Every triplet with weight at least tau."""
    _run_search(input_path, input_format, variant, out, out_format, mode="threshold", tau=tau,
                threads=threads, degree_floor=degree_floor)


@app.command("local")
def local_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                  variant: VariantName = VariantOpt,
                  query: str = typer.Option(..., "--query", help="Label of the hyperedge to search around."),
                  k: int = typer.Option(1, "--k", min=1),
                  threads: Optional[int] = ThreadsOpt, degree_floor: Optional[int] = FloorOpt,
                  out: Optional[str] = OutOpt, out_format: OutFormat = OutFormatOpt):
    """The k best triplets containing one hyperedge."""
    _run_search(input_path, input_format, variant, out, out_format, mode="local", k=k, query=query,
                threads=threads, degree_floor=degree_floor)


@app.command("merge")
def merge_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                  variant: VariantName = VariantOpt,
                  tau: str = typer.Option(..., "--tau", help="Minimum weight as NUM/DEN."),
                  dot: Optional[str] = typer.Option(None, "--dot", help="Write the merge graph as DOT."),
                  components: Optional[str] = typer.Option(None, "--components", help="Write components as JSON."),
                  threads: Optional[int] = ThreadsOpt, degree_floor: Optional[int] = FloorOpt):
    """Merge threshold triplets into connected hyperedge clusters."""
    try:
        miner = _miner(input_path, input_format)
        triplets = miner.search(variant.value, mode="threshold", tau=tau, threads=threads,
                                degree_floor=degree_floor)
        if not triplets:
            logger.warning("No triplet reaches the threshold; nothing to merge.")
            raise typer.Exit(code=EXIT_EMPTY)
        g = build_merge_graph(triplets)
        if dot:
            with click.open_file(dot, "w", encoding="utf-8") as stream:
                stream.write(export_dot(g, miner.settings.penwidth_scale))
        with click.open_file(components or "-", "w", encoding="utf-8") as stream:
            write_components_json(g, stream)
    except HypergraphMinerError as e:
        raise _fail(e)


@app.command("census")
def census_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                   max_edge_size: Optional[int] = typer.Option(None, "--max-edge-size", min=1,
                                                               help="Also count with larger hyperedges removed."),
                   null_model: Optional[NullModel] = typer.Option(None, "--null-model",
                                                                  help="Also count a random counterpart."),
                   seed: int = typer.Option(0, "--seed", min=0),
                   out: Optional[str] = OutOpt,
                   out_format: CensusFormat = typer.Option(CensusFormat.tsv, "--out-format")):
    """h-motif census of connected triplets."""
    try:
        reports = _miner(input_path, input_format).census(
            max_edge_size, null_model.value if null_model else None, seed)
    except HypergraphMinerError as e:
        raise _fail(e)
    with click.open_file(out or "-", "w", encoding="utf-8") as stream:
        if out_format == CensusFormat.json:
            write_census_json(reports, stream)
        else:
            write_census_tsv(reports, stream)


@app.command("entropy")
def entropy_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                    variant: EntropyVariant = VariantOpt, k: int = typer.Option(..., "--k", min=1),
                    threads: Optional[int] = ThreadsOpt, degree_floor: Optional[int] = FloorOpt,
                    out: Optional[str] = OutOpt):
    """Region entropy of the top-k triplets."""
    try:
        rows = _miner(input_path, input_format).entropy(variant.value, k, threads, degree_floor)
    except HypergraphMinerError as e:
        raise _fail(e)
    with click.open_file(out or "-", "w", encoding="utf-8") as stream:
        write_entropy_tsv(rows, stream)
    if not rows:
        raise typer.Exit(code=EXIT_EMPTY)


@app.command("stats")
def stats_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt):
    """Node, hyperedge and membership counts."""
    try:
        miner = _miner(input_path, input_format)
    except HypergraphMinerError as e:
        raise _fail(e)
    typer.echo(json.dumps(stats(miner.hypergraph).to_dict(), sort_keys=True))


@app.command("bench")
def bench_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                  variant: Optional[List[VariantName]] = typer.Option(None, "--variant", "-v",
                                                                      help="Repeat for several variants."),
                  repeat: int = typer.Option(1, "--repeat", min=1),
                  threads: Optional[int] = ThreadsOpt):
    """Time basic against max and report the speedup."""
    variants = variant or list(VariantName)
    try:
        miner = _miner(input_path, input_format)
        for name in variants:
            typer.echo(json.dumps(miner.bench(name.value, repeat, threads), sort_keys=True))
    except HypergraphMinerError as e:
        raise _fail(e)


def _write_generated(h, out: Optional[str]) -> None:
    with click.open_file(out or "-", "w", encoding="utf-8") as stream:
        export_hyperlist(h, stream)
    if h.dropped_empty:
        logger.info(f"{h.dropped_empty} empty generated hyperedges were dropped.")


@gen_app.command("er")
def gen_er_command(nodes: int = typer.Option(..., "--nodes", min=0),
                   edges: int = typer.Option(..., "--edges", min=0),
                   p: float = typer.Option(..., "--p", help="Membership probability."),
                   seed: int = typer.Option(0, "--seed", min=0),
                   out: Optional[str] = OutOpt):
    """Erdős–Rényi bipartite model."""
    try:
        h = HypergraphMiner().generate("er", seed=seed, n_nodes=nodes, n_edges=edges, p=p)
    except HypergraphMinerError as e:
        raise _fail(e)
    _write_generated(h, out)


@gen_app.command("chung-lu")
def gen_chung_lu_command(input_path: Optional[str] = InputOpt, input_format: Optional[InputFormat] = FormatOpt,
                         seed: int = typer.Option(0, "--seed", min=0),
                         fast: bool = typer.Option(False, "--fast", help="Use the geometric skipping sampler."),
                         out: Optional[str] = OutOpt):
    """Chung–Lu bipartite model matching the degrees and sizes of an input hypergraph."""
    try:
        miner = _miner(input_path, input_format)
        degrees, sizes = degree_sequence(miner.hypergraph)
        h = miner.generate("chung-lu", seed=seed, node_degrees=degrees, edge_sizes=sizes, fast=fast)
    except HypergraphMinerError as e:
        raise _fail(e)
    _write_generated(h, out)


if __name__ == "__main__":
    sys.exit(app())
