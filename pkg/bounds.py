#!/usr/bin/env python3
"""Upper bounds on triplet weights from partial region information.

Cheapest first: a hyperedge cardinality, then a pair (two cardinalities and
their intersection), then all three pairwise intersections with the triple
intersection still unknown. Each bound dominates the weight of every triplet
that completes the partial information.
"""
from dataclasses import dataclass
from typing import Optional

from variant_types import Variant
from weights import RegionSizes, Weight


def edge_cap(v: Variant, size: int) -> int:
    """Largest weight any triplet containing an edge of this size can reach."""
    return size // 2 if v == Variant.DISJOINT else size


def edge_bound(v: Variant, size: int, best: Weight, inclusive: bool = False) -> bool:
    """Whether an edge of ``size`` can still beat ``best``.

    Strict by default; ``inclusive`` also keeps edges that can only tie.
    """
    cap = edge_cap(v, size)
    if inclusive:
        return cap * best.den >= best.num
    return cap * best.den > best.num


def pair_bound(v: Variant, sy: int, sz: int, d: int) -> Weight:
    if v == Variant.INDEPENDENT:
        return Weight(min(sy, sz) - d, d + 1)
    return Weight(d, 1)


def triplet_bound(v: Variant, partial: RegionSizes) -> Weight:
    """Bound with xyz unknown; ``partial.xyz`` is ignored."""
    d = min(partial.xy, partial.xz, partial.yz)
    if v == Variant.INDEPENDENT:
        num = min(partial.x - partial.xy - partial.xz,
                  partial.y - partial.xy - partial.yz,
                  partial.z - partial.xz - partial.yz) + d
        return Weight(max(num, 0), partial.xy + partial.xz + partial.yz - 2 * d + 1)
    return Weight(d, 1)


@dataclass
class BoundSet:
    """The three pruning tests of one variant against a running threshold.

    ``threshold`` is None until the first candidate is recorded; a None
    threshold lets everything through.
    """
    variant: Variant
    threshold: Optional[Weight] = None

    def edge_ok(self, size: int) -> bool:
        if self.threshold is None:
            return True
        return edge_bound(self.variant, size, self.threshold, inclusive=True)

    def pair_ok(self, sy: int, sz: int, d: int) -> bool:
        if self.threshold is None:
            return True
        return pair_bound(self.variant, sy, sz, d) >= self.threshold

    def triplet_ok(self, partial: RegionSizes) -> bool:
        if self.threshold is None:
            return True
        return triplet_bound(self.variant, partial) >= self.threshold
