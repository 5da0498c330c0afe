"""Kernel systems and the named families built from them.

An (a, b)-kernel system on {0..n-1} is the family of all r-sets meeting a
fixed a-set X in at least b vertices.  The distinguished sets here are always
initial segments of the ground set; `relabel` covers every other placement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bitset import VertexSet, mask_from_members
from .hypergraph import Hypergraph, Params, is_t_intersecting, min_positive_degree
from .bitset import ExtNat


@dataclass(frozen=True)
class KernelSpec:
    """Parameters (n, r, X, threshold) of one kernel system.

    The system is empty whenever r < threshold; threshold > |X| is allowed
    and also yields the empty system.
    """

    n: int
    r: int
    threshold: int
    X: VertexSet

    def __post_init__(self) -> None:
        if not 0 <= self.r <= self.n:
            raise ValueError(f"need 0 <= r <= n, got r={self.r}, n={self.n}")
        if self.X.n != self.n:
            raise ValueError("kernel set lives on a different ground set")
        if self.threshold < 0:
            raise ValueError("threshold must be nonnegative")

    @property
    def size(self) -> int:
        return len(self.X)

    @classmethod
    def prefix(cls, n: int, r: int, a: int, b: int) -> "KernelSpec":
        """Spec with X fixed to the initial segment {0..a-1}."""
        return cls(n=n, r=r, threshold=b, X=VertexSet.prefix(n, a))


def build_kernel(spec: KernelSpec) -> Hypergraph:
    """All r-sets h with |h meet X| >= threshold."""
    inside = spec.X.members()
    outside = tuple(v for v in range(spec.n) if v not in spec.X)
    masks = []
    lo = max(spec.threshold, spec.r - len(outside))
    hi = min(len(inside), spec.r)
    for j in range(lo, hi + 1):
        for ins in combinations(inside, j):
            base = mask_from_members(ins)
            for outs in combinations(outside, spec.r - j):
                masks.append(base | mask_from_members(outs))
    return Hypergraph.from_masks(spec.n, spec.r, masks)


def kernel_edge_count(n: int, r: int, a: int, b: int) -> int:
    """Closed-form size of the (a, b)-kernel system of r-sets on [n]."""
    if not 0 <= a <= n or not 0 <= r <= n:
        raise ValueError("need 0 <= a <= n and 0 <= r <= n")
    total = 0
    for j in range(max(b, r - (n - a)), min(a, r) + 1):
        total += comb(a, j) * comb(n - a, r - j)
    return total


def extremal_family(params: Params, n: int) -> Hypergraph:
    """The (2k-2s+t, k-s+t)-kernel system, with X an initial segment."""
    a, b = params.kernel_dimensions()
    if n < a:
        raise ValueError(f"need n >= {a} to place the kernel set, got n={n}")
    return build_kernel(KernelSpec.prefix(n, params.r, a, b))


@dataclass(frozen=True)
class CodegreeReport:
    """Observed codegree of the extremal kernel versus the predicted C(k, s)."""

    delta: ExtNat
    expected: int
    t_intersecting: bool
    guaranteed: bool  # n >= a + r, the regime where equality is promised

    @property
    def ok(self) -> bool:
        return self.delta == self.expected and self.t_intersecting


def codegree_check(params: Params, n: int) -> CodegreeReport:
    """Compare delta^+_{r-s} of the extremal kernel against C(k, s).

    Requires r >= k-s+t (smaller r has no nonempty kernel system) and
    n large enough to place the kernel set.  Equality is guaranteed only for
    n >= (2k-2s+t) + r; smaller n is reported, not rejected.
    """
    a, b = params.kernel_dimensions()
    if params.r < b:
        raise ValueError(f"need r >= k-s+t = {b}, got r={params.r}")
    H = extremal_family(params, n)
    return CodegreeReport(
        delta=min_positive_degree(H, params.r - params.s),
        expected=comb(params.k, params.s),
        t_intersecting=is_t_intersecting(H, params.t),
        guaranteed=n >= a + params.r,
    )


SPECIAL_SIX = 6  # the distinguished 6-set {0..5} of the counterexample family
SPECIAL_FOUR_MASK = 0b1111  # the removed 4-set {0,1,2,3}


def counterexample_family(r: int, n: int) -> Hypergraph:
    """Edges meeting {0..5} in >= 4 vertices, minus those containing {0,1,2,3}.

    A 2-intersecting family whose minimum positive (r-2)-degree is 5, yet no
    6-set has all its 4-subsets occurring as sunflower cores: {0,1,2,3} is in
    no edge at all.
    """
    if r < 4:
        raise ValueError(f"construction needs r >= 4, got r={r}")
    if n < SPECIAL_SIX + (r - 4):
        raise ValueError(f"need n >= {SPECIAL_SIX + (r - 4)}, got n={n}")
    base = build_kernel(KernelSpec.prefix(n, r, SPECIAL_SIX, 4))
    keep = [m for m in base.masks if m & SPECIAL_FOUR_MASK != SPECIAL_FOUR_MASK]
    return Hypergraph.from_masks(n, r, keep)
