#!/usr/bin/env python3
from datetime import datetime
from mcp.server.fastmcp import FastMCP
from typing import Dict, Any
import logging
import json
import functools
from miner import HypergraphMiner
from exceptions import HypergraphMinerError
from dotenv import load_dotenv
from merge import component_records, export_dot

# Load environment variables from .env file
load_dotenv()

SERVER_NAME = "hypertriplet"

# Create MCP server instance
mcp = FastMCP(SERVER_NAME)
miner = HypergraphMiner()

# Set up logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

# --- Helper Functions ---
def _handle_error(e: Exception, tool_name: str) -> Dict[str, Any]:
    """Unified error handling for tools."""
    if isinstance(e, HypergraphMinerError):
        logger.error(f"Error in {tool_name}: {e.args[0]} - Details: {e.details}")
        error_response = {"status": "error", "message": e.args[0], "details": e.details}
    elif isinstance(e, ValueError):
        logger.error(f"Invalid arguments for {tool_name}: {str(e)}")
        error_response = {"status": "error", "message": str(e), "details": None}
    else:
        logger.error(f"An unexpected error occurred in {tool_name}: {str(e)}", exc_info=True)
        error_response = {"status": "error", "message": "An unexpected error occurred.", "details": str(e)}
    return error_response

def _validate_args(args: Dict[str, Any], required_fields: list) -> None:
    """Validate presence of required fields in arguments."""
    for field in required_fields:
        if field not in args or args[field] in (None, ""):
            raise ValueError(f"Missing required argument: '{field}'")

def tool_handler(func):
    """Decorator to handle tool execution logging and error handling."""
    @functools.wraps(func)
    def wrapper(args: Dict[str, Any], input_path: str = None) -> Dict[str, Any]:
        tool_name = func.__name__
        logger.info(f"Executing tool: {tool_name} with args: {args}")
        try:
            result = func(args, input_path)
            logger.info(f"Tool {tool_name} executed successfully.")
            logger.debug(json.dumps(result, indent=4))
            return result
        except Exception as e:
            return _handle_error(e, tool_name)
    return wrapper

def _load(args: Dict[str, Any], input_path: str = None) -> None:
    miner.load(args.get("input_path") or input_path, args.get("input_format"))

def _search(args: Dict[str, Any], input_path: str, mode: str, **kwargs) -> Dict[str, Any]:
    _validate_args(args, ["variant"])
    _load(args, input_path)
    results = miner.search(
        args["variant"],
        mode=mode,
        threads=args.get("threads"),
        degree_floor=args.get("degree_floor"),
        **kwargs
    )
    return {"status": "success", "data": [r.to_dict(miner.settings.schema_version) for r in results]}

# --- Tool Implementations ---
@mcp.tool(
    name="hypergraph_stats",
    description="Reports node, hyperedge and membership counts of a hypergraph file.",
)
@tool_handler
def hypergraph_stats(args: Dict[str, Any], input_path: str = None) -> Dict[str, Any]:
    _load(args, input_path)
    return {"status": "success", "data": miner.get_stats().to_dict()}

@mcp.tool(
    name="find_max_triplet",
    description="Finds the maximum-weight hyperedge triplet for the independent, disjoint or common variant.",
)
@tool_handler
def find_max_triplet(args: Dict[str, Any], input_path: str = None) -> Dict[str, Any]:
    return _search(args, input_path, "max", algo=args.get("algo", "max"))

@mcp.tool(
    name="find_top_k_triplets",
    description="Finds the k highest-weight hyperedge triplets.",
)
@tool_handler
def find_top_k_triplets(args: Dict[str, Any], input_path: str = None) -> Dict[str, Any]:
    _validate_args(args, ["k"])
    return _search(args, input_path, "topk", k=int(args["k"]))

@mcp.tool(
    name="find_threshold_triplets",
    description="Finds every hyperedge triplet whose weight is at least tau (given as NUM/DEN).",
)
@tool_handler
def find_threshold_triplets(args: Dict[str, Any], input_path: str = None) -> Dict[str, Any]:
    _validate_args(args, ["tau"])
    return _search(args, input_path, "threshold", tau=str(args["tau"]))

@mcp.tool(
    name="find_local_triplets",
    description="Finds the k best triplets containing the hyperedge with the given label.",
)
@tool_handler
def find_local_triplets(args: Dict[str, Any], input_path: str = None) -> Dict[str, Any]:
    _validate_args(args, ["query"])
    return _search(args, input_path, "local", query=str(args["query"]), k=int(args.get("k", 1)))

@mcp.tool(
    name="merge_triplets",
    description="Merges triplets with weight at least tau into connected hyperedge clusters.",
)
@tool_handler
def merge_triplets(args: Dict[str, Any], input_path: str = None) -> Dict[str, Any]:
    _validate_args(args, ["variant", "tau"])
    _load(args, input_path)
    g = miner.merge(args["variant"], str(args["tau"]), args.get("threads"), args.get("degree_floor"))
    data = {"components": component_records(g)}
    if args.get("dot"):
        data["dot"] = export_dot(g, miner.settings.penwidth_scale)
    return {"status": "success", "data": data}

@mcp.tool(
    name="hmotif_census",
    description="Counts connected hyperedge triplets by h-motif class, optionally with a size filter or null model.",
)
@tool_handler
def hmotif_census(args: Dict[str, Any], input_path: str = None) -> Dict[str, Any]:
    _load(args, input_path)
    reports = miner.census(args.get("max_edge_size"), args.get("null_model"), int(args.get("seed", 0)))
    return {"status": "success", "data": [report.to_dict() for report in reports]}


if __name__ == "__main__":
    logger.info(f"Hypertriplet MCP server starting at {datetime.now().isoformat()}")
    logger.info(f"Server name: {SERVER_NAME}")
    mcp.run()
