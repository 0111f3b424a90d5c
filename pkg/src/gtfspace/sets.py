"""Bitmask point sets over a finite labelled universe.

A point set is a plain ``int`` whose bit ``i`` is set when point ``i`` is a
member.  A set family is a ``frozenset`` of such masks.  Python integers are
arbitrary precision, so the same representation serves the 2**n element
posets used by the subset-indexed gnets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import MalformedInputError

PointSet = int
SetFamily = frozenset

EMPTY = 0
EMPTY_SYMBOL = "∅"


def bit(i: int) -> PointSet:
    return 1 << i


def from_indices(indices: Iterable[int]) -> PointSet:
    mask = 0
    for i in indices:
        if i < 0:
            raise MalformedInputError(f"negative point index {i}")
        mask |= 1 << i
    return mask


def iter_bits(mask: PointSet) -> Iterator[int]:
    """Yield member indices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def indices(mask: PointSet) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def size(mask: PointSet) -> int:
    return mask.bit_count()


def is_subset(a: PointSet, b: PointSet) -> bool:
    return a & ~b == 0


def lowest(mask: PointSet) -> int:
    """Smallest member index; ``mask`` must be non-empty."""
    if not mask:
        raise ValueError("empty set has no lowest member")
    return (mask & -mask).bit_length() - 1


def submasks(mask: PointSet) -> Iterator[PointSet]:
    """Every subset of ``mask``, the empty set included, in no particular order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def all_subsets(n: int) -> range:
    return range(1 << n)


def union_all(sets: Iterable[PointSet]) -> PointSet:
    out = 0
    for s in sets:
        out |= s
    return out


def intersect_all(sets: Iterable[PointSet], universe_mask: PointSet) -> PointSet:
    """Intersection of ``sets``; the empty intersection is the whole universe."""
    out = universe_mask
    for s in sets:
        out &= s
    return out


def canonical_key(mask: PointSet) -> tuple[int, tuple[int, ...]]:
    return (size(mask), indices(mask))


def canonical(family: Iterable[PointSet]) -> list[PointSet]:
    """Sort sets by cardinality, then lexicographically by member indices."""
    return sorted(set(family), key=canonical_key)


@dataclass(frozen=True)
class Universe:
    """Ordered, duplicate-free point labels; point ``i`` has label ``labels[i]``."""

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        if not labels:
            raise MalformedInputError("universe must be non-empty")
        if len(set(labels)) != len(labels):
            raise MalformedInputError(f"duplicate labels in universe {list(labels)}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        """Universe labelled ``a, b, c, ...`` (falls back to ``p<i>`` past 26)."""
        if n <= 26:
            return cls(tuple(chr(ord("a") + i) for i in range(n)))
        return cls(tuple(f"p{i}" for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> PointSet:
        return (1 << len(self.labels)) - 1

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise MalformedInputError(f"unknown point label {label!r}") from None

    def parse(self, labels: Iterable) -> PointSet:
        return from_indices(self.index(x) for x in labels)

    def parse_literal(self, text: str) -> PointSet:
        """Parse a comma separated label list; ``""`` is the empty set."""
        text = text.strip()
        if text in ("", EMPTY_SYMBOL, "{}"):
            return EMPTY
        text = text.strip("{}")
        return self.parse(part.strip() for part in text.split(",") if part.strip())

    def check(self, mask: PointSet) -> PointSet:
        if mask < 0 or mask & ~self.full:
            raise MalformedInputError(
                f"set {bin(mask)} references points outside a universe of size {self.size}"
            )
        return mask

    def labels_of(self, mask: PointSet) -> list[str]:
        return [self.labels[i] for i in iter_bits(mask)]

    def format(self, mask: PointSet) -> str:
        if not mask:
            return EMPTY_SYMBOL
        return "{" + ",".join(self.labels_of(mask)) + "}"

    def format_family(self, family: Iterable[PointSet]) -> str:
        return ", ".join(self.format(s) for s in canonical(family))
