"""Ordered super-alphabet: indices split into an even and an odd copy of the
positive integers, with every even index smaller than every odd one."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple

EVEN = 0
ODD = 1


class SuperIndex(NamedTuple):
    """A letter of the super-alphabet: a positive integer with a parity.

    Tuple order is (parity, value), so the natural tuple comparison realises
    the alphabet order: even letters first, then odd, each copy by value.
    """

    parity: int
    value: int

    def __str__(self) -> str:
        return f"{self.value}'" if self.parity else f"{self.value}"

    def conjugate(self) -> "SuperIndex":
        """Same value in the opposite copy."""
        return SuperIndex(1 - self.parity, self.value)


def ev(value: int) -> SuperIndex:
    return SuperIndex(EVEN, value)


def od(value: int) -> SuperIndex:
    return SuperIndex(ODD, value)


class IndexRange(NamedTuple):
    """The alphabet fragment {1..even_count} + {1'..odd_count}."""

    even_count: int
    odd_count: int

    @property
    def size(self) -> int:
        return self.even_count + self.odd_count

    def __iter__(self) -> Iterator[SuperIndex]:
        for v in range(1, self.even_count + 1):
            yield SuperIndex(EVEN, v)
        for v in range(1, self.odd_count + 1):
            yield SuperIndex(ODD, v)

    def __contains__(self, idx: object) -> bool:
        if not isinstance(idx, SuperIndex):
            return False
        bound = self.odd_count if idx.parity else self.even_count
        return 1 <= idx.value <= bound

    def indices(self) -> tuple[SuperIndex, ...]:
        return tuple(self)


Word = tuple[SuperIndex, ...]


def parity_of_word(items: Iterable[SuperIndex]) -> int:
    """Total parity of a sequence of letters."""
    p = 0
    for idx in items:
        p ^= idx.parity
    return p


def mutual_parity_count(items: Iterable[SuperIndex]) -> int:
    """Number of unordered odd/odd pairs: the exponent usually written
    as a sum of p(i_a)p(i_b) over a < b."""
    odd_seen = 0
    total = 0
    for idx in items:
        if idx.parity:
            total += odd_seen
            odd_seen += 1
    return total


def cross_parity_count(left: Word, right: Word) -> int:
    """Exponent sum p(left_a) * p(right_b) over pairs with a > b.

    This is the sign exponent attached to an interleaving where the a-th
    left letter passes the first a-1 right letters.
    """
    total = 0
    odd_right_before = 0
    for a in range(len(left)):
        if a > 0 and right[a - 1].parity:
            odd_right_before += 1
        if left[a].parity:
            total += odd_right_before
    return total


class SuperSequence:
    """A word over a fixed index range.

    Immutable; equality and hashing go through the letter tuple and range.
    """

    __slots__ = ("items", "range")

    def __init__(self, items: Iterable[SuperIndex], index_range: IndexRange):
        items = tuple(items)
        for idx in items:
            if idx not in index_range:
                raise ValueError(f"index {idx} outside range {index_range}")
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "range", index_range)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("SuperSequence is immutable")

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[SuperIndex]:
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperSequence)
            and self.items == other.items
            and self.range == other.range
        )

    def __hash__(self) -> int:
        return hash((self.items, self.range))

    def __repr__(self) -> str:
        return "(" + ",".join(str(i) for i in self.items) + ")"

    @property
    def parity(self) -> int:
        return parity_of_word(self.items)

    def parity_vector(self) -> tuple[int, ...]:
        return tuple(idx.parity for idx in self.items)

    def concat(self, other: "SuperSequence") -> "SuperSequence":
        if other.range != self.range:
            raise ValueError("concatenation requires a common range")
        return SuperSequence(self.items + other.items, self.range)


def all_words(index_range: IndexRange, length: int) -> Iterator[Word]:
    """All length-`length` words over the range, in alphabet order."""
    yield from itertools.product(index_range.indices(), repeat=length)
