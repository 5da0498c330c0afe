"""Bitmask subsets of a bounded ground set, plus naturals extended by infinity.

A subset of {0, ..., n-1} is stored as an int bitmask, one machine word for
n <= 64.  Comparing two masks as integers compares the sets
colexicographically (the largest differing element decides), so colex order
is plain numeric order on masks and is the canonical order everywhere in
this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_GROUND_SIZE = 64


def mask_from_members(members: Iterable[int]) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def members_of_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_masks_of_size(n: int, size: int) -> Iterator[int]:
    """All size-subsets of {0..n-1} as masks, in colex (= numeric) order."""
    if size < 0 or size > n:
        return
    if size == 0:
        yield 0
        return
    for top in range(size - 1, n):
        bit = 1 << top
        for rest in iter_masks_of_size(top, size - 1):
            yield rest | bit


def iter_submasks_of_size(mask: int, size: int) -> Iterator[int]:
    """All size-subsets of `mask`, in colex order."""
    mem = members_of_mask(mask)

    def rec(limit: int, need: int) -> Iterator[int]:
        if need == 0:
            yield 0
            return
        for i in range(need - 1, limit):
            bit = 1 << mem[i]
            for rest in rec(i, need - 1):
                yield rest | bit

    if 0 <= size <= len(mem):
        yield from rec(len(mem), size)


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of `mask` in ascending (colex) order, including 0 and mask."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class VertexSet:
    """Immutable subset of {0..n-1}, n <= 64, stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_GROUND_SIZE:
            raise ValueError(
                f"ground set size must be in [0, {MAX_GROUND_SIZE}], got {self.n}"
            )
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"vertex outside ground set of size {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> "VertexSet":
        return cls(mask_from_members(members), n)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    @classmethod
    def prefix(cls, n: int, size: int) -> "VertexSet":
        """The initial segment {0, ..., size-1}."""
        if size < 0 or size > n:
            raise ValueError(f"prefix size {size} out of range for n={n}")
        return cls((1 << size) - 1, n)

    def members(self) -> tuple[int, ...]:
        return members_of_mask(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("vertex sets live on different ground sets")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members())) + "}"


@dataclass(frozen=True)
class ExtNat:
    """A natural number or infinity; infinity exceeds every natural.

    Degree minima over empty hypergraphs are infinite by convention, and that
    convention must survive comparisons against binomial thresholds, so
    infinity is a distinct value rather than a sentinel integer.
    """

    value: int | None = None  # None encodes infinity

    def __post_init__(self) -> None:
        if self.value is not None and self.value < 0:
            raise ValueError("ExtNat holds naturals only")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @staticmethod
    def _val(other: "ExtNat | int") -> int | None:
        if isinstance(other, ExtNat):
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (ExtNat, int)):
            return self.value == self._val(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("ExtNat", self.value))

    def __lt__(self, other: "ExtNat | int") -> bool:
        o = self._val(other)
        if o is NotImplemented:
            return NotImplemented
        if self.value is None:
            return False
        if o is None:
            return True
        return self.value < o

    def __le__(self, other: "ExtNat | int") -> bool:
        o = self._val(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            return True
        if self.value is None:
            return False
        return self.value <= o

    def __gt__(self, other: "ExtNat | int") -> bool:
        le = self.__le__(other)
        return NotImplemented if le is NotImplemented else not le

    def __ge__(self, other: "ExtNat | int") -> bool:
        lt = self.__lt__(other)
        return NotImplemented if lt is NotImplemented else not lt

    def to_json(self) -> int | str:
        return "infinity" if self.value is None else self.value

    def __repr__(self) -> str:
        return "ExtNat(inf)" if self.value is None else f"ExtNat({self.value})"


INFINITY = ExtNat(None)
