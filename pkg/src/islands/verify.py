"""Verification sweeps: recompute closed-form claims by exhaustive search.

Each suite produces one row per checked instance with the columns
(shape, cubic, mode, expected, actual, status).  A row whose search hits a
resource cap is marked SKIPPED rather than failing the sweep; everything
else is PASS or FAIL by exact integer comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .constructors import minimal_maximal_systems
from .errors import CapExceeded
from .formulas import (
    max_brick_system_bounds,
    max_cube_system_bound,
    max_rect_system_size,
    min_brick_system_size,
)
from .geometry import Brick, Shape, contains
from .search import (
    DEFAULT_NODE_CAP,
    ENGINE_VERSION,
    ExtremalReport,
    SearchConfig,
    enumerate_maximal_systems,
    extremal_size,
    flat_extremal_size,
)
from .serialize import cache_append, cache_key, cache_lookup, report_from_dict, report_to_dict
from .system import IslandSystem, gap_profiles, is_maximal, max_elements, restrict

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass
class Searcher:
    """Runs extremal searches through the persistent report cache.

    A cached row is reused only when shape, cubic flag, mode, engine name
    and engine version all match; ``cache_path=None`` disables caching.
    """

    engine: str = "front"
    cache_path: str | None = None
    brick_count_cap: int | None = None
    node_cap: int = DEFAULT_NODE_CAP

    def report(self, shape: Shape, mode: str, cubic: bool = False) -> ExtremalReport:
        key = cache_key(shape, cubic, mode, self.engine, ENGINE_VERSION)
        if self.cache_path:
            row = cache_lookup(self.cache_path, key)
            if row is not None:
                return report_from_dict(row["report"])
        config = SearchConfig(
            mode=mode,
            cubic=cubic,
            brick_count_cap=self.brick_count_cap,
            node_cap=self.node_cap,
        )
        run = extremal_size if self.engine == "front" else flat_extremal_size
        report = run(shape, config)
        if self.cache_path:
            cache_append(self.cache_path, key, report_to_dict(report))
        return report

    def value(self, shape: Shape, mode: str, cubic: bool = False) -> int:
        return self.report(shape, mode, cubic).value


def _row(shape: Shape, cubic: bool, mode: str, expected, actual, status: str) -> dict:
    return {
        "shape": ",".join(str(m) for m in shape.dims),
        "cubic": cubic,
        "mode": mode,
        "expected": expected,
        "actual": actual,
        "status": status,
    }


def canonical_shapes(max_dim: int, max_side: int) -> list[Shape]:
    """All shapes with non-increasing sides, one per symmetry class."""
    shapes = []
    for d in range(1, max_dim + 1):
        for dims in itertools.combinations_with_replacement(range(max_side, 0, -1), d):
            shapes.append(Shape(dims))
    return shapes


def theorem1_rows(searcher: Searcher, max_dim: int, max_side: int) -> list[dict]:
    """Minimum maximal-system size equals sum of sides minus (d - 1)."""
    rows = []
    for shape in canonical_shapes(max_dim, max_side):
        expected = min_brick_system_size(shape)
        try:
            actual = searcher.value(shape, "min")
        except CapExceeded:
            rows.append(_row(shape, False, "min", expected, "", SKIPPED))
            continue
        rows.append(_row(shape, False, "min", expected, actual,
                         PASS if actual == expected else FAIL))
    return rows


def theorem2_rows(searcher: Searcher, max_dim: int, max_side: int) -> list[dict]:
    """Minimum maximal cubic-system size in an m-cube equals m."""
    rows = []
    for d in range(1, max_dim + 1):
        for m in range(1, max_side + 1):
            shape = Shape((m,) * d)
            try:
                actual = searcher.value(shape, "min", cubic=True)
            except CapExceeded:
                rows.append(_row(shape, True, "min", m, "", SKIPPED))
                continue
            rows.append(_row(shape, True, "min", m, actual, PASS if actual == m else FAIL))
    return rows


def theorem3_rows(searcher: Searcher, max_dim: int, max_side: int) -> list[dict]:
    """Maximum cubic-system size stays under ((m+1)^d - 1)/(2^d - 1).

    The bound column holds the floor; for m one less than a power of two the
    bound must be attained exactly.
    """
    rows = []
    for d in range(1, max_dim + 1):
        for m in range(1, max_side + 1):
            shape = Shape((m,) * d)
            bound = int(max_cube_system_bound(d, m))
            try:
                actual = searcher.value(shape, "max", cubic=True)
            except CapExceeded:
                rows.append(_row(shape, True, "max", bound, "", SKIPPED))
                continue
            tight = (m + 1) & m == 0  # m + 1 is a power of two
            ok = actual <= bound and (not tight or actual == bound)
            rows.append(_row(shape, True, "max", bound, actual, PASS if ok else FAIL))
    return rows


def prior_work_rows(searcher: Searcher, max_side: int) -> list[dict]:
    """The exact two-dimensional maximum, plus the sandwich bounds around it."""
    rows = []
    for m1 in range(1, max_side + 1):
        for m2 in range(m1, max_side + 1):
            shape = Shape((m2, m1))
            expected = max_rect_system_size(m1, m2)
            try:
                actual = searcher.value(shape, "max")
            except CapExceeded:
                rows.append(_row(shape, False, "max", expected, "", SKIPPED))
                continue
            bounds = max_brick_system_bounds(shape)
            ok = actual == expected and bounds.lower <= actual <= bounds.upper
            rows.append(_row(shape, False, "max", expected, actual, PASS if ok else FAIL))
    return rows


def classification_rows(shapes: list[Shape], cap: int = 60) -> list[dict]:
    """The minimum-size generator emits exactly the oracle's minimum systems.

    Comparison is by literal sorted brick lists, not up to symmetry.  The
    expected column holds the generator's count, the actual column the
    oracle's; the status reflects full set equality.
    """
    rows = []
    for shape in shapes:
        expected_size = min_brick_system_size(shape)
        try:
            generated = {system.bricks for system in minimal_maximal_systems(shape)}
            sizes_ok = all(len(bricks) == expected_size for bricks in generated)
            smallest: set[tuple[Brick, ...]] = set()
            best = None
            for system in enumerate_maximal_systems(shape, cap=cap):
                if best is None or len(system) < best:
                    best = len(system)
                    smallest = {system.bricks}
                elif len(system) == best:
                    smallest.add(system.bricks)
        except CapExceeded:
            rows.append(_row(shape, False, "classification", "", "", SKIPPED))
            continue
        ok = sizes_ok and best == expected_size and generated == smallest
        rows.append(
            _row(shape, False, "classification", len(generated), len(smallest),
                 PASS if ok else FAIL)
        )
    return rows


def corollary_rows(shapes: list[Shape], onedim_max: int = 6, cap: int = 60) -> list[dict]:
    """Structural facts about every maximal system on the given shapes.

    corners: with more than one maximal member, every corner cell of the box
    lies inside some maximal member.  gaps: edge gaps have length at most 2,
    and a length-2 gap never sits between two elementary cells.  restrict:
    restriction to any member is again maximal and the full brick is always
    a member.  onedim: every maximal system of a segment of length m has
    exactly m members (checked for m up to ``onedim_max``).
    """
    rows = []
    for shape in shapes:
        corner_bad = gap_bad = restrict_bad = 0
        try:
            for system in enumerate_maximal_systems(shape, cap=cap):
                corner_bad += _corner_violations(system)
                gap_bad += _gap_violations(system)
                restrict_bad += _restriction_violations(system)
        except CapExceeded:
            for prop in ("corners", "gaps", "restrict"):
                rows.append(_row(shape, False, prop, 0, "", SKIPPED))
            continue
        for prop, bad in (("corners", corner_bad), ("gaps", gap_bad), ("restrict", restrict_bad)):
            rows.append(_row(shape, False, prop, 0, bad, PASS if bad == 0 else FAIL))
    for m in range(1, onedim_max + 1):
        shape = Shape((m,))
        bad = sum(
            1 for system in enumerate_maximal_systems(shape, cap=cap) if len(system) != m
        )
        rows.append(_row(shape, False, "onedim", 0, bad, PASS if bad == 0 else FAIL))
    return rows


def _corner_cells(shape: Shape) -> list[Brick]:
    cells = []
    for corner in itertools.product((0, 1), repeat=shape.ndim):
        lo = tuple(0 if side == 0 else m - 1 for side, m in zip(corner, shape.dims))
        cells.append(Brick(lo, tuple(a + 1 for a in lo)))
    return cells


def _corner_violations(system: IslandSystem) -> int:
    members = max_elements(system)
    if len(members) <= 1:
        return 0
    return sum(
        1
        for cell in _corner_cells(system.shape)
        if not any(contains(member, cell) for member in members)
    )


def _gap_violations(system: IslandSystem) -> int:
    if len(max_elements(system)) <= 1:
        return 0
    bad = 0
    for profile in gap_profiles(system):
        for gap in profile.gaps:
            if gap.length > 2:
                bad += 1
            elif gap.left_elementary is None or gap.right_elementary is None:
                bad += 1  # a corner gap means an unoccupied corner cell
            elif gap.length == 2 and gap.left_elementary and gap.right_elementary:
                bad += 1
    return bad


def _restriction_violations(system: IslandSystem) -> int:
    bad = 0
    if system.shape.full_brick() not in system.bricks:
        bad += 1
    for member in system.bricks:
        if not is_maximal(restrict(system, member)):
            bad += 1
    return bad
