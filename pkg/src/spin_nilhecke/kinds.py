"""Tags shared by every module: polynomial variant and Weyl type."""

from enum import Enum


class Variant(str, Enum):
    SPIN = "spin"
    EVEN = "even"


class WeylType(str, Enum):
    A = "a"
    B = "b"
    D = "d"


def as_variant(v) -> Variant:
    return v if isinstance(v, Variant) else Variant(str(v).lower())


def as_type(t) -> WeylType:
    return t if isinstance(t, WeylType) else WeylType(str(t).lower())


def check_rank(wtype: WeylType, n: int) -> None:
    """Raise ValueError when `n` is not a valid rank for `wtype`."""
    wtype = as_type(wtype)
    minimum = 2 if wtype is WeylType.D else 1
    if not isinstance(n, int) or n < minimum:
        raise ValueError(f"rank {n!r} invalid for type {wtype.name} (need n >= {minimum})")


def generator_indices(wtype: WeylType, n: int) -> range:
    """Simple reflection indices; index n is the type B/D special generator."""
    wtype = as_type(wtype)
    check_rank(wtype, n)
    return range(1, n) if wtype is WeylType.A else range(1, n + 1)


class GeneratorIndexError(IndexError, ValueError):
    """A simple reflection index outside the valid range."""


def check_index(wtype: WeylType, n: int, index: int) -> None:
    if index not in generator_indices(wtype, n):
        raise GeneratorIndexError(f"generator index {index} out of range for {as_type(wtype).name}{n}")
