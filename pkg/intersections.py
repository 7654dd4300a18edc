"""Intersection primitives over strictly ascending integer lists.

Every hyperedge and every node adjacency list is kept sorted, so all set
operations here are merges. When one list is much shorter than the other the
merge gallops through the longer one with ``bisect``.
"""
from bisect import bisect_left
from typing import Dict, Iterable, List, Sequence, Tuple

# Length ratio above which galloping beats a linear merge.
GALLOP_RATIO = 8


def intersect(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Sorted intersection of two strictly ascending lists."""
    if len(a) > len(b):
        a, b = b, a
    if not a:
        return []
    if len(b) >= GALLOP_RATIO * len(a):
        return _gallop(a, b)
    out = []
    i = j = 0
    end_a, end_b = len(a), len(b)
    while i < end_a and j < end_b:
        x = a[i]
        y = b[j]
        if x < y:
            i += 1
        elif y < x:
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    return out


def _gallop(short: Sequence[int], long: Sequence[int]) -> List[int]:
    out = []
    lo = 0
    end = len(long)
    for x in short:
        lo = bisect_left(long, x, lo, end)
        if lo == end:
            break
        if long[lo] == x:
            out.append(x)
            lo += 1
    return out


def intersect_size(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) > len(b):
        a, b = b, a
    if not a:
        return 0
    if len(b) >= GALLOP_RATIO * len(a):
        return len(_gallop(a, b))
    count = 0
    i = j = 0
    end_a, end_b = len(a), len(b)
    while i < end_a and j < end_b:
        x = a[i]
        y = b[j]
        if x < y:
            i += 1
        elif y < x:
            j += 1
        else:
            count += 1
            i += 1
            j += 1
    return count


def intersect3_size(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """Size of a ∩ b ∩ c, merging the two shortest lists first."""
    first, second, third = sorted((a, b, c), key=len)
    if not first:
        return 0
    return intersect_size(intersect(first, second), third)


class PairIndex:
    """Map from an ordered hyperedge pair (x < y) to its non-empty intersection.

    With ``keep_nodes`` the sorted node list is stored, otherwise only the size.
    Empty intersections are never stored.
    """

    def __init__(self, keep_nodes: bool = True):
        self.keep_nodes = keep_nodes
        self._pairs: Dict[Tuple[int, int], object] = {}
        # x -> ascending partners y > x, and y -> ascending partners x < y
        self._higher: Dict[int, List[int]] = {}
        self._lower: Dict[int, List[int]] = {}

    def __len__(self) -> int:
        return len(self._pairs)

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        return _ordered(*pair) in self._pairs

    def add(self, x: int, y: int, nodes: List[int]) -> None:
        if not nodes:
            return
        key = _ordered(x, y)
        if key in self._pairs:
            return
        self._pairs[key] = list(nodes) if self.keep_nodes else len(nodes)
        self._higher.setdefault(key[0], []).append(key[1])
        self._lower.setdefault(key[1], []).append(key[0])

    def size(self, x: int, y: int) -> int:
        value = self._pairs.get(_ordered(x, y))
        if value is None:
            return 0
        return len(value) if self.keep_nodes else value

    def nodes(self, x: int, y: int) -> List[int]:
        if not self.keep_nodes:
            raise ValueError("PairIndex was built without node lists.")
        return self._pairs.get(_ordered(x, y), [])

    def higher(self, x: int) -> List[int]:
        """Partners y > x intersecting x, ascending."""
        partners = self._higher.get(x, [])
        partners.sort()
        return partners

    def lower(self, y: int) -> List[int]:
        """Partners x < y intersecting y, ascending."""
        partners = self._lower.get(y, [])
        partners.sort()
        return partners

    def items(self) -> Iterable[Tuple[Tuple[int, int], int]]:
        for key in sorted(self._pairs):
            yield key, self.size(*key)


def _ordered(x: int, y: int) -> Tuple[int, int]:
    return (x, y) if x < y else (y, x)
