#!/usr/bin/env python3

class HypergraphMinerError(Exception):
    """Base exception for hypergraph loading, searching and reporting errors."""
    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        return {
            "error": self.args[0],
            "details": self.details or "No additional details provided."
        }


class InputFormatError(HypergraphMinerError):
    """Unreadable or malformed hypergraph input."""


class InvalidTripletError(HypergraphMinerError):
    """Triplet ids or region sizes that violate their invariants."""


class SearchError(HypergraphMinerError):
    """A search cannot run with the given hypergraph or configuration."""


class GeneratorError(HypergraphMinerError):
    """Invalid synthetic generator parameters."""


class MergeError(HypergraphMinerError):
    """Triplet merging received unusable input."""
