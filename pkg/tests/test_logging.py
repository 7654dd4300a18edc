#!/usr/bin/env python3
import io
import logging
from unittest.mock import patch

import pytest

from server import find_max_triplet, hypergraph_stats
from miner import HypergraphMiner
from exceptions import HypergraphMinerError, SearchError
from settings import MinerSettings

@pytest.fixture
def mock_miner():
    """Fixture to mock the server's miner."""
    with patch('server.miner') as mock_m:
        yield mock_m

@pytest.fixture(autouse=True)
def configure_caplog(caplog):
    """Configure caplog to capture INFO level logs."""
    caplog.set_level(logging.INFO)

def test_server_tool_logging_success(mock_miner, caplog):
    """Test that tool execution success is logged correctly."""
    mock_miner.search.return_value = []

    result = find_max_triplet({"variant": "common"}, "data.hyperlist")

    assert result['status'] == 'success'
    assert "Executing tool: find_max_triplet" in caplog.text
    assert "Tool find_max_triplet executed successfully." in caplog.text
    assert "error" not in caplog.text.lower()

def test_server_tool_logging_error(mock_miner, caplog):
    """Test that tool execution errors are logged correctly."""
    mock_miner.load.side_effect = HypergraphMinerError("Failed to load hypergraph.", details="disk gone")

    result = hypergraph_stats({}, "data.hyperlist")

    assert result['status'] == 'error'
    assert "Executing tool: hypergraph_stats" in caplog.text
    assert "Error in hypergraph_stats: Failed to load hypergraph. - Details: disk gone" in caplog.text
    assert "executed successfully" not in caplog.text

def test_miner_logging_load_success(golden_file, caplog):
    """Test logging on a successful load."""
    miner = HypergraphMiner(MinerSettings())

    miner.load(golden_file)

    assert f"Opening hypergraph file: {golden_file}" in caplog.text
    assert "Loaded hypergraph with 26 nodes and 3 hyperedges." in caplog.text
    assert f"Successfully loaded hypergraph file: {golden_file}" in caplog.text

def test_miner_logging_search(golden_file, caplog):
    """Test logging around a search."""
    miner = HypergraphMiner(MinerSettings())
    miner.load(golden_file)

    miner.search("disjoint", mode="topk", k=2)

    assert "Searching topk triplets for variant 'disjoint' with algorithm 'max'." in caplog.text
    assert "Successfully found 1 triplet(s)." in caplog.text

def test_miner_logging_degree_floor_warning(golden_file, caplog):
    """Test the approximate degree floor is flagged."""
    miner = HypergraphMiner(MinerSettings())
    miner.load(golden_file)

    miner.search("common", degree_floor=3)

    assert "results are approximate" in caplog.text

def test_loader_logging_duplicate_tokens(caplog):
    """Test that repeated node tokens are reported."""
    miner = HypergraphMiner(MinerSettings())

    miner.load_stream(io.StringIO("1 2 2\n2 3\n3 1\n"))

    assert "Collapsed 1 duplicate node tokens inside hyperedges." in caplog.text

def test_miner_logging_search_error(caplog):
    """Test search errors propagate after the attempt is logged."""
    miner = HypergraphMiner(MinerSettings())
    miner.load_stream(io.StringIO("1 2\n2 3\n"))

    with pytest.raises(SearchError):
        miner.search("common")

    assert "Searching max triplets for variant 'common'" in caplog.text
