"""Uniform hypergraphs on small ground sets.

Provides the canonical edge representation (distinct edges in colex order),
the plain-text storage format, and the basic predicates the rest of the
toolkit is built on: t-intersection and minimum positive codegrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from .bitset import (
    INFINITY,
    ExtNat,
    VertexSet,
    iter_submasks_of_size,
    mask_from_members,
)
from .errors import ParseError


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform edge family on {0..n-1}.

    Edges are distinct and stored in colex order, so two hypergraphs are
    equal exactly when they are the same family.
    """

    n: int
    r: int
    edges: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.r <= self.n:
            raise ValueError(f"need 0 <= r <= n, got r={self.r}, n={self.n}")
        prev = -1
        for e in self.edges:
            if e.n != self.n:
                raise ValueError("edge on a different ground set")
            if len(e) != self.r:
                raise ValueError(f"edge {e} does not have size {self.r}")
            if e.bits <= prev:
                raise ValueError("edges must be distinct and in colex order")
            prev = e.bits

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(e.bits for e in self.edges)

    @cached_property
    def mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @classmethod
    def from_masks(cls, n: int, r: int, masks: Iterable[int]) -> "Hypergraph":
        ordered = sorted(masks)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError("duplicate edge")
        return cls(n, r, tuple(VertexSet(m, n) for m in ordered))

    @classmethod
    def from_edges(
        cls, n: int, r: int, edges: Iterable[Iterable[int]]
    ) -> "Hypergraph":
        return cls.from_masks(n, r, (mask_from_members(e) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Params:
    """Parameter tuple (k, r, s, t) of the codegree threshold problem.

    Valid range: 1 <= s <= k, s <= t <= r.
    """

    k: int
    r: int
    s: int
    t: int

    def __post_init__(self) -> None:
        if not 1 <= self.s <= self.k:
            raise ValueError(f"need 1 <= s <= k, got s={self.s}, k={self.k}")
        if not self.s <= self.t <= self.r:
            raise ValueError(
                f"need s <= t <= r, got s={self.s}, t={self.t}, r={self.r}"
            )

    @property
    def codegree_threshold(self) -> int:
        """The strict lower bound C(k-1, s) imposed on delta^+_{r-s}."""
        return comb(self.k - 1, self.s)

    @property
    def core_bound(self) -> int:
        """k-s+t: the forced minimum for uniformity and sunflower cores."""
        return self.k - self.s + self.t

    def kernel_dimensions(self) -> tuple[int, int]:
        """(set size, meet threshold) of the associated kernel construction."""
        return 2 * self.k - 2 * self.s + self.t, self.k - self.s + self.t


def is_t_intersecting(H: Hypergraph, t: int) -> bool:
    """True iff every pair of distinct edges meets in >= t vertices.

    Vacuously true for at most one edge.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    masks = H.masks
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if (a & b).bit_count() < t:
                return False
    return True


def cover_map(H: Hypergraph, i: int) -> dict[int, int]:
    """For each covered i-set S (as a mask), the bitmap of edge indices containing S.

    Only i-subsets of actual edges are visited, never all C(n, i) sets.
    """
    if not 0 <= i <= H.r:
        raise ValueError(f"i must be in [0, {H.r}], got {i}")
    cover: dict[int, int] = {}
    for idx, m in enumerate(H.masks):
        bit = 1 << idx
        for sub in iter_submasks_of_size(m, i):
            cover[sub] = cover.get(sub, 0) | bit
    return cover


def min_positive_degree(H: Hypergraph, i: int) -> ExtNat:
    """Minimum positive i-degree: the least edge count over covered i-sets.

    Infinite when the hypergraph has no edges.
    """
    return min_positive_degree_witness(H, i)[0]


def min_positive_degree_witness(
    H: Hypergraph, i: int
) -> tuple[ExtNat, VertexSet | None]:
    """As min_positive_degree, plus an i-set attaining the minimum."""
    cover = cover_map(H, i)
    if not cover:
        return INFINITY, None
    best_mask, best = None, None
    for mask in sorted(cover):
        count = cover[mask].bit_count()
        if best is None or count < best:
            best_mask, best = mask, count
    assert best is not None and best_mask is not None
    return ExtNat(best), VertexSet(best_mask, H.n)


def covered_isets(H: Hypergraph, i: int) -> tuple[VertexSet, ...]:
    """All i-sets contained in at least one edge, colex-ordered."""
    return tuple(VertexSet(m, H.n) for m in sorted(cover_map(H, i)))


def relabel(H: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Apply a vertex permutation (perm[v] is the image of v)."""
    if sorted(perm) != list(range(H.n)):
        raise ValueError("relabeling must be a bijection on the ground set")
    out = []
    for m in H.masks:
        image = 0
        while m:
            low = m & -m
            image |= 1 << perm[low.bit_length() - 1]
            m ^= low
        out.append(image)
    return Hypergraph.from_masks(H.n, H.r, out)


def parse_hypergraph(text: str) -> Hypergraph:
    """Read the plain-text format.

    Line 1 is "n r"; every further line is one edge as r space-separated
    vertex labels.  Lines starting with '#' are comments; blank lines are
    ignored; duplicate edges are a parse error naming the line.
    """
    header: tuple[int, int] | None = None
    masks: dict[int, int] = {}  # mask -> first line where it appeared
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"not an integer list: {line!r}", lineno) from None
        if header is None:
            if len(values) != 2:
                raise ParseError("header must be 'n r'", lineno)
            n, r = values
            if not 1 <= n <= 64:
                raise ParseError(f"ground set size {n} out of range [1, 64]", lineno)
            if not 1 <= r <= n:
                raise ParseError(f"edge size {r} out of range [1, {n}]", lineno)
            header = (n, r)
            continue
        n, r = header
        if len(values) != r:
            raise ParseError(f"expected {r} vertex labels, got {len(values)}", lineno)
        mask = 0
        for v in values:
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range [0, {n - 1}]", lineno)
            if mask >> v & 1:
                raise ParseError(f"repeated vertex {v} in edge", lineno)
            mask |= 1 << v
        if mask in masks:
            raise ParseError(
                f"duplicate edge (first seen on line {masks[mask]})", lineno
            )
        masks[mask] = lineno
    if header is None:
        raise ParseError("missing 'n r' header line")
    return Hypergraph.from_masks(header[0], header[1], masks)


def format_hypergraph(H: Hypergraph) -> str:
    """Serialize to the plain-text format; a fixed point under parse/format."""
    if H.r < 1:
        raise ValueError("text format requires edge size >= 1")
    lines = [f"{H.n} {H.r}"]
    lines.extend(" ".join(map(str, e.members())) for e in H.edges)
    return "\n".join(lines) + "\n"
