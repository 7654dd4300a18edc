#!/usr/bin/env python3
import heapq
import threading
from typing import Callable, List, Optional

from results import TripletResult
from weights import Weight

ThresholdHook = Callable[[Weight], None]


class SharedThreshold:
    """Monotone best-known threshold read opportunistically by search workers."""

    def __init__(self):
        self._lock = threading.Lock()
        self._value: Optional[Weight] = None

    def get(self) -> Optional[Weight]:
        return self._value

    def raise_to(self, value: Optional[Weight]) -> None:
        if value is None:
            return
        with self._lock:
            if self._value is None or value > self._value:
                self._value = value


class TopKCollector:
    """Keeps the k best results under (weight desc, ranks asc).

    The heap top is the current k-th best, which is the pruning threshold once
    the heap is full.
    """

    def __init__(self, k: int, on_threshold: Optional[ThresholdHook] = None):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.k = k
        self.heap: List[TripletResult] = []
        self.on_threshold = on_threshold

    def __len__(self) -> int:
        return len(self.heap)

    def threshold(self) -> Optional[Weight]:
        if len(self.heap) < self.k:
            return None
        return self.heap[0].weight

    def offer(self, result: TripletResult) -> bool:
        before = self.threshold()
        if len(self.heap) < self.k:
            heapq.heappush(self.heap, result)
        elif result.beats(self.heap[0]):
            heapq.heapreplace(self.heap, result)
        else:
            return False
        after = self.threshold()
        if self.on_threshold is not None and after is not None and (before is None or after > before):
            self.on_threshold(after)
        return True

    def results(self) -> List[TripletResult]:
        return sorted(self.heap, reverse=True)


class ThresholdCollector:
    """Keeps every result whose weight is at least ``tau``."""

    def __init__(self, tau: Weight, on_threshold: Optional[ThresholdHook] = None):
        self.tau = tau
        self.items: List[TripletResult] = []
        if on_threshold is not None:
            on_threshold(tau)

    def __len__(self) -> int:
        return len(self.items)

    def threshold(self) -> Optional[Weight]:
        return self.tau

    def offer(self, result: TripletResult) -> bool:
        if result.weight >= self.tau:
            self.items.append(result)
            return True
        return False

    def results(self) -> List[TripletResult]:
        return sorted(self.items, reverse=True)


def merge_results(parts: List[List[TripletResult]], limit: Optional[int] = None) -> List[TripletResult]:
    """Deterministic reduction of per-worker result lists."""
    merged = sorted((result for part in parts for result in part), reverse=True)
    return merged if limit is None else merged[:limit]
