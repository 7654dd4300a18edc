#!/usr/bin/env python3
import json
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, TextIO, Tuple

from variant_types import Variant
from weights import RegionSizes, Weight, ZERO, to_partition, weight

SCHEMA_VERSION = "1"

TSV_COLUMNS = ("labels", "ranks", "N_a", "N_b", "N_c", "N_ab", "N_ac", "N_bc", "N_abc",
               "weight", "weight_float", "variant")


@dataclass(frozen=True)
class TripletResult:
    """One scored triplet. ``ranks`` is ascending and matches the order of ``sizes``."""
    ranks: Tuple[int, int, int]
    labels: Tuple[str, str, str]
    sizes: Optional[RegionSizes]
    weight: Weight
    variant: Variant
    empty: bool = False

    @classmethod
    def build(cls, h, ranks: Tuple[int, int, int], sizes: RegionSizes, variant: Variant,
              w: Optional[Weight] = None) -> "TripletResult":
        return cls(
            ranks=ranks,
            labels=tuple(h.edge_labels[r] for r in ranks),
            sizes=sizes,
            weight=w if w is not None else weight(sizes, variant),
            variant=Variant(variant)
        )

    @classmethod
    def no_candidate(cls, variant: Variant) -> "TripletResult":
        return cls(ranks=(-1, -1, -1), labels=("", "", ""), sizes=None, weight=ZERO,
                   variant=Variant(variant), empty=True)

    def beats(self, other: "TripletResult") -> bool:
        """Higher weight wins; equal weights go to the lexicographically smaller ranks."""
        if self.weight != other.weight:
            return self.weight > other.weight
        return self.ranks < other.ranks

    def __lt__(self, other: "TripletResult") -> bool:
        # heap order: the worst result sits at the top of a min-heap
        return other.beats(self)

    def to_dict(self, schema_version: str = SCHEMA_VERSION) -> Dict[str, Any]:
        if self.empty:
            return {
                "schema_version": schema_version,
                "variant": self.variant.name.lower(),
                "empty": True,
                "weight": str(self.weight),
                "weight_float": float(self.weight)
            }
        partition = to_partition(self.sizes)
        return {
            "schema_version": schema_version,
            "variant": self.variant.name.lower(),
            "labels": list(self.labels),
            "ranks": list(self.ranks),
            "regions": {
                "a": partition.a, "b": partition.b, "c": partition.c,
                "ab": partition.ab, "ac": partition.ac, "bc": partition.bc,
                "abc": partition.abc
            },
            "weight": str(self.weight),
            "weight_num": self.weight.num,
            "weight_den": self.weight.den,
            "weight_float": float(self.weight)
        }

    def to_row(self) -> Tuple[str, ...]:
        partition = to_partition(self.sizes)
        return (
            ",".join(self.labels),
            ",".join(str(r) for r in self.ranks),
            *(str(v) for v in partition.as_tuple()),
            str(self.weight),
            repr(float(self.weight)),
            self.variant.name.lower()
        )


def write_results(results: Iterable[TripletResult], stream: TextIO, out_format: str = "jsonl",
                  schema_version: str = SCHEMA_VERSION) -> int:
    """Write results as JSON lines or TSV; returns the number of rows written."""
    count = 0
    if out_format == "tsv":
        stream.write("\t".join(TSV_COLUMNS) + "\n")
        for result in results:
            if result.empty:
                continue
            stream.write("\t".join(result.to_row()) + "\n")
            count += 1
        return count
    if out_format != "jsonl":
        raise ValueError(f"Unknown output format '{out_format}'")
    for result in results:
        if result.empty:
            continue
        stream.write(json.dumps(result.to_dict(schema_version), sort_keys=True) + "\n")
        count += 1
    return count
