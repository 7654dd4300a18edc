#!/usr/bin/env python3
"""Shannon entropy of triplet region sizes."""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, TextIO, Tuple

import numpy as np

from exceptions import SearchError
from results import TripletResult
from variant_types import Variant
from weights import to_partition

logger = logging.getLogger(__name__)

ENTROPY_COLUMNS = ("labels", "weight", "weight_float", "target_bits", "target_normalized",
                   "grouped_bits", "grouped_normalized")


def shannon_entropy(sizes: Sequence[int]) -> Tuple[float, float]:
    """Entropy in bits of the distribution proportional to ``sizes``, raw and normalized.

    Zero entries contribute nothing; the normalized value divides by log2 of
    the number of categories.
    """
    values = np.asarray(sizes, dtype=float)
    if values.size == 0 or np.any(values < 0) or values.sum() <= 0:
        raise ValueError(f"Entropy needs nonnegative sizes with a positive total, got {list(sizes)}")
    positive = values[values > 0]
    if np.all(positive == positive[0]):
        # uniform over the non-empty categories
        bits = float(np.log2(positive.size))
    else:
        p = positive / positive.sum()
        bits = float(-(p * np.log2(p)).sum())
    if values.size < 2:
        return bits, 0.0
    return bits, bits / float(np.log2(values.size))


@dataclass(frozen=True)
class EntropyRow:
    result: TripletResult
    target: Tuple[float, float]
    grouped: Tuple[float, float]

    def to_row(self) -> Tuple[str, ...]:
        return (
            ",".join(self.result.labels),
            str(self.result.weight),
            repr(float(self.result.weight)),
            *(repr(value) for value in (*self.target, *self.grouped))
        )


def entropy_report(results: Iterable[TripletResult], v: Variant) -> List[EntropyRow]:
    """Target-region and grouped entropy for each triplet.

    Independent: target over the three exclusive regions, grouped over
    (sum of exclusive, sum of pairwise-only, 3 * common). Disjoint: target
    over the three pairwise-only regions, grouped over (their sum, 3 * common).
    """
    v = Variant(v)
    if v == Variant.COMMON:
        raise SearchError("Entropy report is defined for the independent and disjoint variants only.")
    rows = []
    for result in results:
        if result.empty:
            continue
        p = to_partition(result.sizes)
        exclusive, pairwise, common = p.level(1), p.level(2), p.abc
        if v == Variant.INDEPENDENT:
            target = exclusive
            grouped = (sum(exclusive), sum(pairwise), 3 * common)
        else:
            target = pairwise
            grouped = (sum(pairwise), 3 * common)
        rows.append(EntropyRow(result, _safe_entropy(target), _safe_entropy(grouped)))
    logger.info(f"Computed entropy for {len(rows)} triplets.")
    return rows


def _safe_entropy(sizes: Sequence[int]) -> Tuple[float, float]:
    # an all-empty target region (weight 0 triplet) has no distribution
    if sum(sizes) == 0:
        return 0.0, 0.0
    return shannon_entropy(sizes)


def write_entropy_tsv(rows: Iterable[EntropyRow], stream: TextIO) -> int:
    stream.write("\t".join(ENTROPY_COLUMNS) + "\n")
    count = 0
    for row in rows:
        stream.write("\t".join(row.to_row()) + "\n")
        count += 1
    return count
