"""Island systems: laminar families of bricks in a shared ambient shape.

A system is *laminar* when every pair of member bricks is nested or
disjoint, and *maximal* when no further brick (cube, in cubic mode) can be
added without breaking that condition.  This module holds the container
type plus the predicates and editing operations the rest of the library is
built on: maximal members, addability, restriction to a member brick,
greedy completion, and edge-gap profiling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .geometry import Brick, Shape, canonical_bricks, compatible, contains, enumerate_bricks


@dataclass(frozen=True)
class IslandSystem:
    """A set of bricks in an ambient shape, stored sorted and duplicate-free.

    Construction checks that every brick fits the shape (and is a cube when
    the cubic flag is set); laminarity is a separate, checkable predicate so
    that externally supplied systems can be loaded and then judged.
    """

    shape: Shape
    bricks: tuple[Brick, ...]
    cubic: bool = False

    def __post_init__(self):
        bricks = tuple(sorted(set(self.bricks)))
        object.__setattr__(self, "bricks", bricks)
        for b in bricks:
            if not b.valid_in(self.shape):
                raise ValueError(f"brick {b} does not fit in shape {self.shape}")
            if self.cubic and not b.is_cube:
                raise ValueError(f"brick {b} is not a cube but the system is cubic")

    def __len__(self):
        return len(self.bricks)

    def __iter__(self):
        return iter(self.bricks)

    def __contains__(self, brick):
        return brick in self.bricks

    @property
    def is_laminar(self) -> bool:
        return is_laminar(self.bricks)


def is_laminar(bricks: Iterable[Brick]) -> bool:
    """True iff every pair of bricks is nested or disjoint.

    Quadratic pairwise check; cheap at the scales this library targets.
    """
    items = list(bricks)
    for i, a in enumerate(items):
        for b in items[i + 1 :]:
            if not compatible(a, b):
                return False
    return True


def max_elements(system: IslandSystem) -> list[Brick]:
    """The inclusion-maximal members, the full ambient brick excluded.

    For a laminar system containing the full brick these are pairwise
    disjoint: the top layer sitting directly below the ambient box.
    """
    full = system.shape.full_brick()
    rest = [b for b in system.bricks if b != full]
    return [b for b in rest if not any(o != b and contains(o, b) for o in rest)]


def addable_bricks(system: IslandSystem) -> list[Brick]:
    """Every non-member brick compatible with all members, in brick order.

    Cubic systems only admit cubes.  An empty result is exactly maximality.
    """
    members = set(system.bricks)
    out = []
    for cand in enumerate_bricks(system.shape, system.cubic):
        if cand not in members and all(compatible(cand, b) for b in system.bricks):
            out.append(cand)
    return out


def is_maximal(system: IslandSystem) -> bool:
    """True iff no brick can be added; scans the whole candidate universe."""
    members = set(system.bricks)
    for cand in enumerate_bricks(system.shape, system.cubic):
        if cand not in members and all(compatible(cand, b) for b in system.bricks):
            return False
    return True


def restrict(system: IslandSystem, region: Brick) -> IslandSystem:
    """The sub-bricks of a member, re-based so the member becomes the shape.

    Coordinates are translated by ``-region.lo``, so the result is a system
    in the region's own frame and can be compared or recursed on directly.
    """
    if region not in system.bricks:
        raise ValueError(f"region {region} is not a member of the system")
    offset = tuple(-a for a in region.lo)
    inside = [b.translate(offset) for b in system.bricks if contains(region, b)]
    return IslandSystem(region.inner_shape(), inside, cubic=system.cubic)


def greedy_complete(system: IslandSystem) -> IslandSystem:
    """Extend to a maximal system by repeatedly adding the least addable brick.

    Deterministic by the lexicographic tie-break; a maximal input is returned
    unchanged.
    """
    current = system
    while True:
        additions = addable_bricks(current)
        if not additions:
            return current
        current = IslandSystem(
            current.shape, current.bricks + (additions[0],), cubic=current.cubic
        )


def canonical_form(system: IslandSystem) -> IslandSystem:
    """The least image of the system under the shape's symmetry group.

    Idempotent, and equal for any two systems in the same symmetry orbit.
    """
    return IslandSystem(
        system.shape, canonical_bricks(system.shape, system.bricks), cubic=system.cubic
    )


@dataclass(frozen=True)
class EdgeGap:
    """A maximal uncovered interval on one edge of the ambient box.

    The elementary flags describe the covered runs flanking the gap; a
    ``None`` flank means the gap ends at a corner of the box.
    """

    start: int
    end: int
    left_elementary: bool | None
    right_elementary: bool | None

    @property
    def length(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class GapProfile:
    """Coverage of one edge of the box by the system's maximal members.

    ``free_dim`` is the axis the edge runs along; ``sides`` picks the low (0)
    or high (1) face on each of the other axes.  ``covered`` and ``gaps``
    partition ``[0, m_free]`` without overlap.
    """

    free_dim: int
    sides: tuple[int, ...]
    covered: tuple[tuple[int, int], ...]
    gaps: tuple[EdgeGap, ...]


def gap_profiles(system: IslandSystem) -> list[GapProfile]:
    """Edge coverage profiles for all ``d * 2^(d-1)`` edges of the box.

    A maximal member covers a segment of an edge when it touches the chosen
    face on every other axis; for a maximal system those segments are
    pairwise separated, and the reported gaps are what is left over.
    """
    dims = system.shape.dims
    d = len(dims)
    members = max_elements(system)
    profiles = []
    for free in range(d):
        others = [j for j in range(d) if j != free]
        for sides in itertools.product((0, 1), repeat=d - 1):
            runs = []
            for r in members:
                on_edge = all(
                    r.lo[j] == 0 if side == 0 else r.hi[j] == dims[j]
                    for j, side in zip(others, sides)
                )
                if on_edge:
                    runs.append((r.lo[free], r.hi[free], r.is_cell))
            runs.sort()
            gaps = []
            pos = 0
            left_flank = None
            for a, b, elementary in runs:
                if a > pos:
                    gaps.append(EdgeGap(pos, a, left_flank, elementary))
                pos = max(pos, b)
                left_flank = elementary
            if pos < dims[free]:
                gaps.append(EdgeGap(pos, dims[free], left_flank, None))
            profiles.append(
                GapProfile(free, sides, tuple((a, b) for a, b, _ in runs), tuple(gaps))
            )
    return profiles
