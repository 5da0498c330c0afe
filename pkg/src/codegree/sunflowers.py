"""Sunflower search: the greedy Erdos-Rado recursion and an exhaustive
bounded-core finder, plus the core-size lower bound check.

A sunflower is an edge family whose pairwise intersections all equal one
common core; the edge remainders (petals) are pairwise disjoint.  A one-edge
family is represented with the edge as core and a single empty petal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .bitset import VertexSet, iter_submasks_of_size
from .errors import HypothesisViolation
from .hypergraph import Hypergraph, Params, is_t_intersecting, min_positive_degree


@dataclass(frozen=True)
class Sunflower:
    """Core plus pairwise-disjoint petals; petals are kept in colex order."""

    core: VertexSet
    petals: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if not self.petals:
            raise ValueError("a sunflower has at least one petal")
        if len(self.petals) == 1 and not self.petals[0].is_empty:
            raise ValueError(
                "one-edge sunflower must be stored with the edge as its core"
            )
        seen = 0
        prev = -1
        for p in self.petals:
            if p.n != self.core.n:
                raise ValueError("petal on a different ground set")
            if p.bits <= prev:
                raise ValueError("petals must be distinct and in colex order")
            if p.bits & self.core.bits:
                raise ValueError("petal meets the core")
            if p.bits & seen:
                raise ValueError("petals must be pairwise disjoint")
            seen |= p.bits
            prev = p.bits

    @property
    def petal_count(self) -> int:
        return len(self.petals)

    def edges(self) -> tuple[VertexSet, ...]:
        return tuple(
            VertexSet(self.core.bits | p.bits, self.core.n) for p in self.petals
        )


def _make_sunflower(n: int, core_mask: int, petal_masks: list[int]) -> Sunflower:
    petal_masks = sorted(petal_masks)
    if len(petal_masks) == 1:  # one-edge convention: the edge is the core
        core_mask |= petal_masks[0]
        petal_masks = [0]
    return Sunflower(
        VertexSet(core_mask, n), tuple(VertexSet(p, n) for p in petal_masks)
    )


def validate_sunflower(sf: Sunflower, H: Hypergraph) -> None:
    """Independent re-check that sf is a sunflower made of edges of H.

    Deliberately avoids the constructor's bit bookkeeping: works on plain
    Python sets and the definition (all pairwise edge intersections equal the
    core).  Raises ValueError with a reason on failure.
    """
    core = set(sf.core.members())
    edge_sets = [core | set(p.members()) for p in sf.petals]
    family = {frozenset(e.members()) for e in H.edges}
    for i, a in enumerate(edge_sets):
        if frozenset(a) not in family:
            raise ValueError(f"reconstructed edge {sorted(a)} is not an edge of H")
        for b in edge_sets[i + 1 :]:
            if a & b != core:
                raise ValueError(
                    f"edges {sorted(a)} and {sorted(b)} do not intersect in the core"
                )
    if len({frozenset(e) for e in edge_sets}) != len(edge_sets):
        raise ValueError("reconstructed edges are not distinct")


def erdos_rado_bound(r: int, p: int) -> int:
    """r! * (p-1)^r: above this many edges an r-graph must contain a
    sunflower with p petals."""
    if r < 0 or p < 1:
        raise ValueError("need r >= 0 and p >= 1")
    return factorial(r) * (p - 1) ** r


def find_sunflower(H: Hypergraph, p: int) -> Sunflower | None:
    """Greedy Erdos-Rado recursion.

    Either a maximal pairwise-disjoint subfamily already has >= p edges
    (a sunflower with empty core), or every edge meets its union and some
    vertex has high degree; recurse on that vertex's link.  Complete whenever
    |H| > r!(p-1)^r.  Deterministic: greedy picks in colex order, the pivot is
    the max-degree vertex with smallest label.
    """
    if p < 1:
        raise ValueError("need p >= 1")
    found = _er_search(list(H.masks), H.r, p, H.n)
    if found is None:
        return None
    core_mask, petal_masks = found
    return _make_sunflower(H.n, core_mask, petal_masks)


def _er_search(
    masks: list[int], r: int, p: int, n: int
) -> tuple[int, list[int]] | None:
    if not masks:
        return None
    chosen: list[int] = []
    used = 0
    for m in masks:
        if m & used == 0:
            chosen.append(m)
            used |= m
    if len(chosen) >= p:
        return 0, chosen
    if r == 0:
        return None
    degree = [0] * n
    for m in masks:
        mm = m
        while mm:
            low = mm & -mm
            degree[low.bit_length() - 1] += 1
            mm ^= low
    pivot = max(range(n), key=lambda v: (degree[v], -v))
    bit = 1 << pivot
    link = sorted(m ^ bit for m in masks if m & bit)
    sub = _er_search(link, r - 1, p, n)
    if sub is None:
        return None
    core_mask, petal_masks = sub
    return core_mask | bit, petal_masks


def _greedy_disjoint(remainders: list[int]) -> list[int]:
    # Remainders are distinct sets of one common size, so the empty remainder
    # can only occur alone and the plain greedy scan is safe.
    chosen: list[int] = []
    used = 0
    for m in remainders:
        if m & used == 0:
            chosen.append(m)
            used |= m
    return chosen


def _find_disjoint_family(remainders: list[int], want: int) -> list[int] | None:
    """Colex-first pairwise-disjoint subfamily of size `want`, exhaustively."""

    out: list[int] = []

    def rec(start: int, used: int) -> bool:
        if len(out) == want:
            return True
        if len(out) + (len(remainders) - start) < want:
            return False
        for i in range(start, len(remainders)):
            m = remainders[i]
            if m & used == 0:
                out.append(m)
                if rec(i + 1, used | m):
                    return True
                out.pop()
        return False

    return out if rec(0, 0) else None


def find_bounded_core_sunflower(
    H: Hypergraph, p: int, max_core: int
) -> Sunflower | None:
    """Exhaustive search for a sunflower with >= p petals and core size <= max_core.

    Complete at desk scale: any sunflower core is a subset of each of its
    edges, so enumerating all small subsets of edges enumerates all possible
    cores.  Cores are tried smallest first, then in colex order; petals are
    collected greedily in colex order, falling back to an exact disjoint-set
    search whenever the greedy count falls short but p is still achievable
    (each greedy petal of size q can block at most q others, so the true
    maximum is at most greedy_count * q).
    """
    if p < 1:
        raise ValueError("need p >= 1")
    if not 0 <= max_core <= H.r:
        raise ValueError(f"core cap must be in [0, {H.r}], got {max_core}")
    masks = H.masks
    for size in range(0, max_core + 1):
        cores: set[int] = set()
        for m in masks:
            cores.update(iter_submasks_of_size(m, size))
        for core in sorted(cores):
            containing = [m for m in masks if m & core == core]
            if len(containing) < p:
                continue
            remainders = sorted(m ^ core for m in containing)
            greedy = _greedy_disjoint(remainders)
            if len(greedy) >= p:
                return _make_sunflower(H.n, core, greedy)
            q = H.r - size
            if q >= 2 and len(greedy) * q >= p:
                exact = _find_disjoint_family(remainders, p)
                if exact is not None:
                    return _make_sunflower(H.n, core, exact)
    return None


def check_core_lower_bound(H: Hypergraph, params: Params) -> Sunflower | None:
    """Look for a sunflower with >= r+1 petals whose core is smaller than k-s+t.

    Under the hypothesis (t-intersecting, delta^+_{r-s} above C(k-1, s)) no
    such sunflower exists, so any returned witness is a refutation.  Raises
    HypothesisViolation when the hypothesis fails, to keep "inapplicable"
    distinct from "refuted".
    """
    if H.r != params.r:
        raise ValueError(f"hypergraph is {H.r}-uniform but params.r={params.r}")
    if not is_t_intersecting(H, params.t):
        raise HypothesisViolation(f"hypergraph is not {params.t}-intersecting")
    delta = min_positive_degree(H, params.r - params.s)
    if not delta > params.codegree_threshold:
        raise HypothesisViolation(
            f"delta^+_{params.r - params.s} = {delta.to_json()} is not above "
            f"C(k-1, s) = {params.codegree_threshold}"
        )
    cap = min(params.core_bound - 1, H.r)
    return find_bounded_core_sunflower(H, params.r + 1, cap)


@dataclass(frozen=True)
class SunflowerQuery:
    """CLI-facing bundle: required petal count and optional core-size cap."""

    p: int
    max_core: int | None = None

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("need p >= 1")
        if self.max_core is not None and self.max_core < 0:
            raise ValueError("core cap must be nonnegative")
