from enum import IntEnum


class Variant(IntEnum):
    INDEPENDENT = 1
    DISJOINT = 2
    COMMON = 3


VARIANT_NAMES = {
    "independent": Variant.INDEPENDENT,
    "disjoint": Variant.DISJOINT,
    "common": Variant.COMMON
}

INPUT_FORMATS = ("hyperlist", "bipartite")

ALGORITHMS = ("basic", "max")


def parse_variant(value) -> Variant:
    """Accept a Variant, its number or its lowercase name."""
    if isinstance(value, Variant):
        return value
    if isinstance(value, int):
        return Variant(value)
    key = str(value).strip().lower()
    if key.isdigit():
        return Variant(int(key))
    if key not in VARIANT_NAMES:
        raise ValueError(f"Unknown variant '{value}'. Expected one of: {', '.join(VARIANT_NAMES)}")
    return VARIANT_NAMES[key]
