"""Exact maximization of edge count over t-intersecting r-graphs with a
positive codegree constraint.

The feasible region is NOT monotone in the edge lattice (adding or removing
edges can both break the codegree condition), so the branch-and-bound checks
feasibility at leaves and prunes with bounds that are sound for every
completion of a branch:

  (i)   candidate edges must t-intersect all included edges (monotone),
  (ii)  included + remaining <= incumbent cuts the branch,
  (iii) a covered (r-s)-set whose current count plus remaining containing
        candidates cannot exceed the threshold kills every completion,
  (iv)  optionally, the first included edge is fixed to the colex-least
        r-set: every nonempty family has a relabeling whose colex-least edge
        is exactly {0..r-1}, so the maximum is preserved.

A plain enumeration oracle over all edge subsets cross-checks the engine on
small universes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Iterator

from .bitset import VertexSet, iter_masks_of_size, iter_submasks_of_size
from .errors import BudgetExceeded
from .hypergraph import Hypergraph, Params, is_t_intersecting, min_positive_degree
from .kernels import extremal_family, kernel_edge_count


@dataclass(frozen=True)
class Feasibility:
    """The three hypothesis predicates; feasible means all of them."""

    uniform: bool
    t_intersecting: bool
    codegree_ok: bool

    @property
    def ok(self) -> bool:
        return self.uniform and self.t_intersecting and self.codegree_ok


@dataclass(frozen=True)
class SearchResult:
    max_edges: int
    witness: Hypergraph
    optimal: bool  # proved, as opposed to budget-truncated
    nodes_explored: int
    kernel_count: int  # reference value of the kernel construction
    matches_kernel: bool
    witness_is_kernel: bool


def feasible(H: Hypergraph, params: Params) -> Feasibility:
    """Evaluate the hypothesis on H; the empty hypergraph is feasible."""
    uniform = H.r == params.r
    codegree_ok = False
    if uniform:
        delta = min_positive_degree(H, params.r - params.s)
        codegree_ok = delta > params.codegree_threshold
    return Feasibility(
        uniform=uniform,
        t_intersecting=is_t_intersecting(H, params.t),
        codegree_ok=codegree_ok,
    )


def _prepare(n: int, params: Params):
    if params.r > n:
        raise ValueError(f"edge size {params.r} exceeds ground set size {n}")
    universe = list(iter_masks_of_size(n, params.r))
    m = len(universe)
    compat = [0] * m
    for j, ej in enumerate(universe):
        row = 0
        for i, ei in enumerate(universe):
            if (ei & ej).bit_count() >= params.t:
                row |= 1 << i
        compat[j] = row
    subs = [tuple(iter_submasks_of_size(e, params.r - params.s)) for e in universe]
    contain: dict[int, int] = {}
    for j, ss in enumerate(subs):
        bit = 1 << j
        for sv in ss:
            contain[sv] = contain.get(sv, 0) | bit
    return universe, compat, subs, contain


def max_feasible(
    n: int,
    params: Params,
    *,
    budget_nodes: int | None = None,
    symmetry: bool = True,
) -> SearchResult:
    """Branch-and-bound over r-sets in colex order.

    The incumbent starts from the kernel construction whenever it is feasible,
    so max_edges >= kernel_count always holds on return.  optimal is True only
    when the whole tree was exhausted within the node budget; otherwise the
    best incumbent is returned with optimal False.
    """
    tau = params.codegree_threshold
    universe, compat, subs, contain = _prepare(n, params)
    m = len(universe)

    a, b = params.kernel_dimensions()
    kernel_count = kernel_edge_count(n, params.r, a, b) if n >= a else 0
    best_masks: tuple[int, ...] = ()
    if n >= a and params.r >= b:
        kernel = extremal_family(params, n)
        if feasible(kernel, params).ok:
            best_masks = kernel.masks
    best_size = len(best_masks)

    counts: dict[int, int] = {}
    included: list[int] = []
    nodes = 0
    truncated = False

    def dfs(avail: int) -> None:
        nonlocal nodes, truncated, best_size, best_masks
        if truncated:
            return
        nodes += 1
        if budget_nodes is not None and nodes > budget_nodes:
            truncated = True
            return
        if len(included) + avail.bit_count() <= best_size:
            return
        for sv, cnt in counts.items():
            if cnt <= tau and cnt + (avail & contain[sv]).bit_count() <= tau:
                return
        if avail == 0:
            if included and all(c > tau for c in counts.values()):
                # bound (ii) already guarantees strict improvement here
                best_size = len(included)
                best_masks = tuple(sorted(included))
            return
        low = avail & -avail
        j = low.bit_length() - 1
        if not (symmetry and not included and j != 0):
            included.append(universe[j])
            for sv in subs[j]:
                counts[sv] = counts.get(sv, 0) + 1
            dfs(avail & compat[j] & ~((low << 1) - 1))
            for sv in subs[j]:
                c = counts[sv] - 1
                if c:
                    counts[sv] = c
                else:
                    del counts[sv]
            included.pop()
        dfs(avail ^ low)

    if m:
        dfs((1 << m) - 1)
    else:
        nodes = 1

    witness = Hypergraph.from_masks(n, params.r, best_masks)
    covering = find_covering_kernel_set(witness, params)
    return SearchResult(
        max_edges=best_size,
        witness=witness,
        optimal=not truncated,
        nodes_explored=nodes,
        kernel_count=kernel_count,
        matches_kernel=best_size == kernel_count,
        witness_is_kernel=covering is not None and best_size == kernel_count,
    )


def exhaustive_max(n: int, params: Params) -> tuple[int, Hypergraph]:
    """Plain enumeration over all 2^C(n,r) edge subsets; the pruning oracle.

    Refuses universes beyond 20 candidate edges.
    """
    universe, compat, subs, _ = _prepare(n, params)
    m = len(universe)
    if m > 20:
        raise ValueError(f"universe of {m} edges is too large for plain enumeration")
    tau = params.codegree_threshold
    best_size = 0
    best_subset = 0
    for subset in range(1, 1 << m):
        if subset.bit_count() <= best_size:
            continue
        ok = True
        rem = subset
        while rem:
            low = rem & -rem
            rem ^= low
            if subset & ~compat[low.bit_length() - 1]:
                ok = False
                break
        if not ok:
            continue
        counts: dict[int, int] = {}
        rem = subset
        while rem:
            low = rem & -rem
            rem ^= low
            for sv in subs[low.bit_length() - 1]:
                counts[sv] = counts.get(sv, 0) + 1
        if all(c > tau for c in counts.values()):
            best_size = subset.bit_count()
            best_subset = subset
    masks = [universe[i] for i in range(m) if best_subset >> i & 1]
    return best_size, Hypergraph.from_masks(n, params.r, masks)


def enumerate_feasible(
    n: int,
    params: Params,
    max_edges_cap: int | None = None,
    *,
    canonical_only: bool = False,
    budget_nodes: int | None = None,
) -> Iterator[Hypergraph]:
    """Yield every feasible hypergraph on [n] with at most max_edges_cap edges.

    Intended for tiny universes (guidance: C(n, r) <= 25).  With
    canonical_only, only relabeling-class representatives (colex-minimal
    images) are yielded.  Raises BudgetExceeded when the node budget runs out.
    """
    tau = params.codegree_threshold
    universe, compat, subs, contain = _prepare(n, params)
    m = len(universe)
    counts: dict[int, int] = {}
    included: list[int] = []
    nodes = 0

    def emit() -> Hypergraph | None:
        H = Hypergraph.from_masks(n, params.r, tuple(sorted(included)))
        if canonical_only and canonical_form(H) != H:
            return None
        return H

    def dfs(avail: int) -> Iterator[Hypergraph]:
        nonlocal nodes
        nodes += 1
        if budget_nodes is not None and nodes > budget_nodes:
            raise BudgetExceeded("node budget exhausted", {"nodes": nodes})
        for sv, cnt in counts.items():
            if cnt <= tau and cnt + (avail & contain[sv]).bit_count() <= tau:
                return
        if avail == 0:
            if not included or all(c > tau for c in counts.values()):
                H = emit()
                if H is not None:
                    yield H
            return
        low = avail & -avail
        j = low.bit_length() - 1
        if max_edges_cap is None or len(included) < max_edges_cap:
            included.append(universe[j])
            for sv in subs[j]:
                counts[sv] = counts.get(sv, 0) + 1
            yield from dfs(avail & compat[j] & ~((low << 1) - 1))
            for sv in subs[j]:
                c = counts[sv] - 1
                if c:
                    counts[sv] = c
                else:
                    del counts[sv]
            included.pop()
        yield from dfs(avail ^ low)

    yield from dfs((1 << m) - 1 if m else 0)


def find_covering_kernel_set(H: Hypergraph, params: Params) -> VertexSet | None:
    """Colex-least (2k-2s+t)-set W with every edge meeting W in >= k-s+t
    vertices, i.e. a kernel set whose system contains H; None if there is none."""
    a, b = params.kernel_dimensions()
    if a > H.n:
        return None
    for w in iter_masks_of_size(H.n, a):
        if all((m & w).bit_count() >= b for m in H.masks):
            return VertexSet(w, H.n)
    return None


def canonical_form(H: Hypergraph) -> Hypergraph:
    """Colex-minimal image of H under vertex permutations; exact, n <= 9 only."""
    if H.n > 9:
        raise ValueError("exact canonical form is limited to n <= 9")
    best: tuple[int, ...] | None = None
    for perm in permutations(range(H.n)):
        img = []
        for mask in H.masks:
            out = 0
            mm = mask
            while mm:
                low = mm & -mm
                out |= 1 << perm[low.bit_length() - 1]
                mm ^= low
            img.append(out)
        img_t = tuple(sorted(img))
        if best is None or img_t < best:
            best = img_t
    return Hypergraph.from_masks(H.n, H.r, best or ())
