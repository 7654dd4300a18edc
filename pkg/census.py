#!/usr/bin/env python3
"""Hyperedge-triplet motif census.

A connected triplet is described by which of its seven regions are
non-empty. Patterns equal up to relabelling the three hyperedges form one
motif class; classes are numbered by sorting their canonical 7-bit words.
"""
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Optional, TextIO, Tuple, Union

from exhaustive import pairwise_intersections
from hypergraph import CanonicalHypergraph
from intersections import intersect_size
from weights import RegionPartition, RegionSizes, to_partition

logger = logging.getLogger(__name__)

REGION_NAMES = ("a", "b", "c", "ab", "ac", "bc", "abc")
CENSUS_COLUMNS = ("source", "class_id", "canonical_pattern_bits", "closed_flag", "degenerate_flag", "count")

_PAIRS = ((0, 1), (0, 2), (1, 2))
_PAIR_SLOT = {pair: 3 + i for i, pair in enumerate(_PAIRS)}


@dataclass(frozen=True)
class Pattern:
    """Emptiness indicators of the regions (a, b, c, ab, ac, bc, abc)."""
    bits: Tuple[bool, bool, bool, bool, bool, bool, bool]

    @classmethod
    def from_word(cls, word: int) -> "Pattern":
        return cls(tuple(bool(word >> (6 - i) & 1) for i in range(7)))

    @property
    def word(self) -> int:
        # region a is the most significant bit so that word order is tuple order
        return sum(1 << (6 - i) for i, bit in enumerate(self.bits) if bit)

    def __str__(self) -> str:
        return "".join("1" if bit else "0" for bit in self.bits)

    def permuted(self, perm: Tuple[int, int, int]) -> "Pattern":
        """Relabel hyperedges: position i of the result is hyperedge perm[i]."""
        bits = [self.bits[perm[i]] for i in range(3)]
        for i, j in _PAIRS:
            bits.append(self.bits[_PAIR_SLOT[tuple(sorted((perm[i], perm[j])))]])
        bits.append(self.bits[6])
        return Pattern(tuple(bits))

    def intersects(self, i: int, j: int) -> bool:
        return self.bits[_PAIR_SLOT[tuple(sorted((i, j)))]] or self.bits[6]

    def edge_nonempty(self, i: int) -> bool:
        return self.bits[i] or self.bits[6] or any(self.bits[_PAIR_SLOT[p]] for p in _PAIRS if i in p)

    def is_connected(self) -> bool:
        return sum(self.intersects(i, j) for i, j in _PAIRS) >= 2

    def is_closed(self) -> bool:
        return all(self.intersects(i, j) for i, j in _PAIRS)

    def forced_duplicate(self) -> bool:
        """Some two hyperedges are equal as sets for every partition with this pattern."""
        for i, j in _PAIRS:
            k = 3 - i - j
            if not (self.bits[i] or self.bits[j]
                    or self.bits[_PAIR_SLOT[tuple(sorted((i, k)))]]
                    or self.bits[_PAIR_SLOT[tuple(sorted((j, k)))]]):
                return True
        return False

    def canonical(self) -> "Pattern":
        return min((self.permuted(p) for p in permutations(range(3))), key=lambda pat: pat.word)


@dataclass(frozen=True)
class MotifClass:
    class_id: int
    pattern: Pattern
    closed: bool
    degenerate: bool = False

    def to_dict(self) -> Dict:
        return {
            "class_id": self.class_id,
            "canonical_pattern_bits": str(self.pattern),
            "closed": self.closed,
            "degenerate": self.degenerate
        }


@dataclass(frozen=True)
class Degenerate:
    """Pattern that forces two hyperedges to coincide."""
    motif: MotifClass


@dataclass(frozen=True)
class Disconnected:
    pattern: Pattern


Classification = Union[MotifClass, Degenerate, Disconnected]


def pattern_of(p: RegionPartition) -> Pattern:
    return Pattern(tuple(size > 0 for size in p.as_tuple()))


@lru_cache(maxsize=1)
def motif_classes() -> Tuple[MotifClass, ...]:
    """All classes of connected patterns with three non-empty hyperedges."""
    words = set()
    for word in range(128):
        pat = Pattern.from_word(word)
        if pat.is_connected() and all(pat.edge_nonempty(i) for i in range(3)):
            words.add(pat.canonical().word)
    classes = []
    for class_id, word in enumerate(sorted(words)):
        pat = Pattern.from_word(word)
        classes.append(MotifClass(class_id, pat, pat.is_closed(), pat.forced_duplicate()))
    return tuple(classes)


@lru_cache(maxsize=1)
def _by_word() -> Dict[int, MotifClass]:
    return {cls.pattern.word: cls for cls in motif_classes()}


def canonical_class(pat: Pattern) -> Classification:
    if not pat.is_connected() or not all(pat.edge_nonempty(i) for i in range(3)):
        return Disconnected(pat.canonical())
    cls = _by_word()[pat.canonical().word]
    return Degenerate(cls) if cls.degenerate else cls


def classify_sizes(r: RegionSizes) -> Classification:
    return canonical_class(pattern_of(to_partition(r)))


@dataclass
class CensusReport:
    counts: Dict[int, int] = field(default_factory=dict)
    max_edge_size: Optional[int] = None
    source: str = "original"

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def degenerate(self) -> int:
        return sum(self.counts.get(cls.class_id, 0) for cls in motif_classes() if cls.degenerate)

    def closed_counts(self) -> Dict[int, int]:
        return {cls.class_id: self.counts.get(cls.class_id, 0)
                for cls in motif_classes() if cls.closed and not cls.degenerate}

    def rows(self) -> List[Tuple[str, ...]]:
        return [
            (self.source, str(cls.class_id), str(cls.pattern), str(int(cls.closed)),
             str(int(cls.degenerate)), str(self.counts.get(cls.class_id, 0)))
            for cls in motif_classes()
        ]

    def to_dict(self) -> Dict:
        return {
            "source": self.source,
            "max_edge_size": self.max_edge_size,
            "total": self.total,
            "degenerate": self.degenerate,
            "classes": [dict(cls.to_dict(), count=self.counts.get(cls.class_id, 0)) for cls in motif_classes()]
        }


def census(h: CanonicalHypergraph, max_edge_size: Optional[int] = None, source: str = "original") -> CensusReport:
    """Count every connected triplet by motif class.

    Triplets are found as wedges around a center hyperedge. A closed triplet
    has three centers and is counted at its smallest one.
    """
    logger.info(f"Running motif census on {h.edge_count} hyperedges"
                + (f" with max edge size {max_edge_size}." if max_edge_size is not None else "."))
    index = pairwise_intersections(h, keep_nodes=True)
    lists = h.edges
    kept = [max_edge_size is None or h.size(r) <= max_edge_size for r in range(h.edge_count)]
    tally: Counter = Counter()
    for center in range(h.edge_count):
        if not kept[center]:
            continue
        neighbors = [e for e in sorted(index.lower(center) + index.higher(center)) if kept[e]]
        for i, a in enumerate(neighbors):
            for b in neighbors[i + 1:]:
                ab = index.size(a, b)
                if ab and center > a:
                    continue
                x, y, z = sorted((a, b, center))
                xyz = intersect_size(index.nodes(x, y), lists[z]) if ab else 0
                r = RegionSizes(h.size(x), h.size(y), h.size(z),
                                index.size(x, y), index.size(x, z), index.size(y, z), xyz)
                found = classify_sizes(r)
                motif = found.motif if isinstance(found, Degenerate) else found
                tally[motif.class_id] += 1
    report = CensusReport({cls.class_id: tally.get(cls.class_id, 0) for cls in motif_classes()},
                          max_edge_size=max_edge_size, source=source)
    logger.info(f"Census counted {report.total} connected triplets ({report.degenerate} degenerate).")
    return report


def write_census_tsv(reports: List[CensusReport], stream: TextIO) -> None:
    stream.write("\t".join(CENSUS_COLUMNS) + "\n")
    for report in reports:
        for row in report.rows():
            stream.write("\t".join(row) + "\n")


def write_census_json(reports: List[CensusReport], stream: TextIO) -> None:
    json.dump([report.to_dict() for report in reports], stream, indent=2, sort_keys=True)
    stream.write("\n")
