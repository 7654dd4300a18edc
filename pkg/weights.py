#!/usr/bin/env python3
"""Seven-region partition of a hyperedge triplet and the three weights.

``RegionSizes`` holds cardinalities and inclusive intersection sizes
(x, y, z, xy, xz, yz, xyz); ``RegionPartition`` holds the exclusive region
sizes. Weights are kept as unreduced fractions and compared by
cross-multiplication, so 2/2 stays 2/2 and equals 1/1.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Tuple

from exceptions import InvalidTripletError
from intersections import intersect, intersect_size
from variant_types import Variant


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, eq=False)
class Weight:
    num: int
    den: int = 1

    def __post_init__(self):
        if self.den < 1:
            raise ValueError(f"Weight denominator must be >= 1, got {self.den}")
        if self.num < 0:
            raise ValueError(f"Weight numerator must be >= 0, got {self.num}")

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse 'NUM/DEN' or a bare integer."""
        num, sep, den = str(text).strip().partition("/")
        if sep and not den.strip():
            raise ValueError(f"Invalid weight '{text}': missing denominator")
        try:
            return cls(int(num), int(den) if den else 1)
        except ValueError as e:
            raise ValueError(f"Invalid weight '{text}': {e}") from None

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def exceeds(self, size: int) -> bool:
        """True when the integer ``size`` is strictly greater than this weight."""
        return size * self.den > self.num

    def __float__(self) -> float:
        return self.num / self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __lt__(self, other: "Weight") -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Weight") -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: "Weight") -> bool:
        return self.num * other.den > other.num * self.den

    def __ge__(self, other: "Weight") -> bool:
        return self.num * other.den >= other.num * self.den


ZERO = Weight(0, 1)


def compare(a: Weight, b: Weight) -> Ordering:
    left = a.num * b.den
    right = b.num * a.den
    if left < right:
        return Ordering.LESS
    if left > right:
        return Ordering.GREATER
    return Ordering.EQUAL


@dataclass(frozen=True)
class RegionSizes:
    x: int
    y: int
    z: int
    xy: int
    xz: int
    yz: int
    xyz: int

    def validate(self) -> "RegionSizes":
        values = (self.x, self.y, self.z, self.xy, self.xz, self.yz, self.xyz)
        if any(v < 0 for v in values):
            raise InvalidTripletError("Region sizes must be nonnegative.", details=str(values))
        if self.xyz > min(self.xy, self.xz, self.yz):
            raise InvalidTripletError("Triple intersection exceeds a pairwise intersection.", details=str(values))
        if self.xy > min(self.x, self.y) or self.xz > min(self.x, self.z) or self.yz > min(self.y, self.z):
            raise InvalidTripletError("Pairwise intersection exceeds a hyperedge size.", details=str(values))
        a, b, c = self.independent()
        if min(a, b, c) < 0:
            raise InvalidTripletError("Independent region size is negative.", details=str(values))
        return self

    def independent(self) -> Tuple[int, int, int]:
        return (
            self.x - self.xy - self.xz + self.xyz,
            self.y - self.xy - self.yz + self.xyz,
            self.z - self.xz - self.yz + self.xyz
        )

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.x, self.y, self.z, self.xy, self.xz, self.yz, self.xyz)


@dataclass(frozen=True)
class RegionPartition:
    a: int
    b: int
    c: int
    ab: int
    ac: int
    bc: int
    abc: int

    def validate(self) -> "RegionPartition":
        if any(v < 0 for v in self.as_tuple()):
            raise InvalidTripletError("Region partition sizes must be nonnegative.", details=str(self.as_tuple()))
        return self

    def level(self, j: int) -> Tuple[int, ...]:
        if j == 1:
            return (self.a, self.b, self.c)
        if j == 2:
            return (self.ab, self.ac, self.bc)
        if j == 3:
            return (self.abc,)
        raise ValueError(f"Region level must be 1, 2 or 3, got {j}")

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.a, self.b, self.c, self.ab, self.ac, self.bc, self.abc)

    def to_sizes(self) -> RegionSizes:
        return RegionSizes(
            x=self.a + self.ab + self.ac + self.abc,
            y=self.b + self.ab + self.bc + self.abc,
            z=self.c + self.ac + self.bc + self.abc,
            xy=self.ab + self.abc,
            xz=self.ac + self.abc,
            yz=self.bc + self.abc,
            xyz=self.abc
        )


def region_sizes(h, ids: Sequence[int], degree_floor: int = 0) -> RegionSizes:
    """Region sizes of the triplet ``ids`` (canonical ranks) in ``h``."""
    if len(ids) != 3:
        raise InvalidTripletError(f"A triplet needs exactly 3 hyperedge ids, got {len(ids)}.")
    a, b, c = ids
    if len({a, b, c}) != 3:
        raise InvalidTripletError("Triplet contains a duplicate hyperedge id.", details=str(tuple(ids)))
    for e in ids:
        if not 0 <= e < h.edge_count:
            raise InvalidTripletError(f"Hyperedge id {e} is out of range.", details=f"edge_count={h.edge_count}")
    lists = h.intersection_edges(degree_floor)
    ab = intersect(lists[a], lists[b])
    return RegionSizes(
        x=h.size(a),
        y=h.size(b),
        z=h.size(c),
        xy=len(ab),
        xz=intersect_size(lists[a], lists[c]),
        yz=intersect_size(lists[b], lists[c]),
        xyz=intersect_size(ab, lists[c])
    )


def to_partition(r: RegionSizes) -> RegionPartition:
    r.validate()
    a, b, c = r.independent()
    return RegionPartition(
        a=a, b=b, c=c,
        ab=r.xy - r.xyz,
        ac=r.xz - r.xyz,
        bc=r.yz - r.xyz,
        abc=r.xyz
    )


def weight(r: RegionSizes, v: Variant) -> Weight:
    v = Variant(v)
    if v is Variant.INDEPENDENT:
        num = min(r.x - r.xy - r.xz, r.y - r.xy - r.yz, r.z - r.xz - r.yz) + r.xyz
        return Weight(num, r.xy + r.xz + r.yz - 2 * r.xyz + 1)
    if v is Variant.DISJOINT:
        return Weight(min(r.xy, r.xz, r.yz) - r.xyz, r.xyz + 1)
    return Weight(r.xyz, 1)


def weight_general(p: RegionPartition, j: int) -> Weight:
    """Minimum j-level region over one plus every deeper region."""
    if j not in (1, 2, 3):
        raise ValueError(f"Region level must be 1, 2 or 3, got {j}")
    deeper = sum(sum(p.level(i)) for i in range(j + 1, 4))
    return Weight(min(p.level(j)), 1 + deeper)
