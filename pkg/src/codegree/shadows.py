"""Shadows of uniform set families and the Kruskal-Katona special case.

Only the instance actually needed downstream is verified exhaustively: among
s-uniform families of size exactly C(k-1, s), the i-th shadow has at least
C(k-1, i) members.  Over-budget cells report "inconclusive", never a silent
pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bitset import VertexSet, iter_masks_of_size, iter_submasks_of_size

DEFAULT_FAMILY_BUDGET = 10_000_000


@dataclass(frozen=True)
class SetFamily:
    """A uniform family of member_size-subsets of {0..ground_size-1}."""

    ground_size: int
    member_size: int
    members: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        prev = -1
        for m in self.members:
            if m.n != self.ground_size:
                raise ValueError("member on a different ground set")
            if len(m) != self.member_size:
                raise ValueError(f"member {m} does not have size {self.member_size}")
            if m.bits <= prev:
                raise ValueError("members must be distinct and in colex order")
            prev = m.bits

    @classmethod
    def from_masks(cls, ground_size: int, member_size: int, masks) -> "SetFamily":
        ordered = sorted(set(masks))
        return cls(
            ground_size,
            member_size,
            tuple(VertexSet(m, ground_size) for m in ordered),
        )

    def __len__(self) -> int:
        return len(self.members)


def shadow(family: SetFamily, i: int) -> SetFamily:
    """The family of all i-subsets of members."""
    if not 0 <= i <= family.member_size:
        raise ValueError(f"shadow order must be in [0, {family.member_size}]")
    out: set[int] = set()
    for m in family.members:
        out.update(iter_submasks_of_size(m.bits, i))
    return SetFamily.from_masks(family.ground_size, i, out)


def complement_family(family: SetFamily, ambient: VertexSet) -> SetFamily:
    """Replace every member A by ambient minus A."""
    if ambient.n != family.ground_size:
        raise ValueError("ambient set on a different ground set")
    for m in family.members:
        if m.bits & ~ambient.bits:
            raise ValueError(f"member {m} is not inside the ambient set")
    size = len(ambient) - family.member_size
    return SetFamily.from_masks(
        family.ground_size, size, (ambient.bits & ~m.bits for m in family.members)
    )


@dataclass(frozen=True)
class KKVerification:
    """Outcome of one exhaustive shadow-bound cell."""

    k: int
    s: int
    i: int
    m: int
    family_size: int  # C(k-1, s), the size of each enumerated family
    required: int  # C(k-1, i), the claimed shadow minimum
    total_families: int
    status: str  # "verified" | "violated" | "inconclusive"
    min_shadow: int | None
    violator: SetFamily | None
    budget: int


def verify_kruskal_katona_cell(
    k: int, s: int, i: int, m: int, budget: int = DEFAULT_FAMILY_BUDGET
) -> KKVerification:
    """Exhaustively check all s-families of size C(k-1, s) on [m].

    Returns the first family whose i-th shadow is smaller than C(k-1, i) if
    one exists (none should), together with the minimum shadow size observed.
    Refuses to enumerate when the cell exceeds the family budget.
    """
    if not 1 <= s <= k - 1:
        raise ValueError(f"need 1 <= s <= k-1, got s={s}, k={k}")
    if not 0 <= i <= s <= m:
        raise ValueError(f"need 0 <= i <= s <= m, got i={i}, s={s}, m={m}")
    target = comb(k - 1, s)
    if comb(m, s) < target:
        raise ValueError(
            f"ground set too small: C({m},{s}) < C({k - 1},{s}) leaves no families"
        )
    required = comb(k - 1, i)
    total = comb(comb(m, s), target)
    if total > budget:
        return KKVerification(
            k, s, i, m, target, required, total, "inconclusive", None, None, budget
        )
    universe = list(iter_masks_of_size(m, s))
    min_shadow: int | None = None
    violator: SetFamily | None = None
    for fam in combinations(universe, target):
        sh: set[int] = set()
        for mask in fam:
            sh.update(iter_submasks_of_size(mask, i))
        size = len(sh)
        if min_shadow is None or size < min_shadow:
            min_shadow = size
            if size < required and violator is None:
                violator = SetFamily.from_masks(m, s, fam)
    status = "violated" if violator is not None else "verified"
    return KKVerification(
        k, s, i, m, target, required, total, status, min_shadow, violator, budget
    )
