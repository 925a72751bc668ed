"""Integer-lattice geometry of bricks inside an ambient cuboid.

A :class:`Shape` fixes the ambient box ``[0, m_1] x ... x [0, m_d]``; a
:class:`Brick` is a closed sub-box with integer corners and positive side
lengths.  Every predicate here uses closed-set semantics: two bricks that
share only a face, an edge or a single corner point still intersect, so
they are never disjoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionMismatch


@dataclass(frozen=True)
class Shape:
    """Ambient cuboid, given by its positive integer side lengths."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(m) for m in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise ValueError("a shape needs at least one dimension")
        if any(m < 1 for m in dims):
            raise ValueError(f"side lengths must be positive, got {dims}")

    @property
    def ndim(self) -> int:
        return len(self.dims)

    @property
    def is_cube(self) -> bool:
        return len(set(self.dims)) == 1

    def full_brick(self) -> Brick:
        """The brick occupying the whole ambient box."""
        return Brick((0,) * self.ndim, self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __str__(self):
        return "x".join(str(m) for m in self.dims)


@dataclass(frozen=True, order=True)
class Brick:
    """Closed axis-aligned box ``[lo_1, hi_1] x ... x [lo_d, hi_d]``.

    Ordering is lexicographic on the concatenated corner vectors, which is
    the canonical brick order used for sorting systems and for search.
    """

    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def __post_init__(self):
        lo = tuple(int(a) for a in self.lo)
        hi = tuple(int(b) for b in self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not lo or len(lo) != len(hi):
            raise ValueError(f"corner vectors must be nonempty and equal-length, got {lo}, {hi}")
        for a, b in zip(lo, hi):
            if a < 0 or b <= a:
                raise ValueError(f"need 0 <= lo_i < hi_i on every axis, got {lo}, {hi}")

    @property
    def ndim(self) -> int:
        return len(self.lo)

    def sides(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.lo, self.hi))

    @property
    def is_cube(self) -> bool:
        return len(set(self.sides())) == 1

    @property
    def is_cell(self) -> bool:
        """True for an elementary cell: every side has length 1."""
        return all(b - a == 1 for a, b in zip(self.lo, self.hi))

    def valid_in(self, shape: Shape) -> bool:
        return self.ndim == shape.ndim and all(b <= m for b, m in zip(self.hi, shape.dims))

    def translate(self, offset: Iterable[int]) -> Brick:
        off = tuple(offset)
        return Brick(
            tuple(a + o for a, o in zip(self.lo, off)),
            tuple(b + o for b, o in zip(self.hi, off)),
        )

    def inner_shape(self) -> Shape:
        """The brick's own side lengths, as the shape of a re-based subproblem."""
        return Shape(self.sides())

    def __str__(self):
        return "x".join(f"[{a},{b}]" for a, b in zip(self.lo, self.hi))


def _check_same_dim(a: Brick, b: Brick) -> None:
    if a.ndim != b.ndim:
        raise DimensionMismatch(f"bricks of dimension {a.ndim} and {b.ndim} cannot be compared")


def contains(outer: Brick, inner: Brick) -> bool:
    """True iff ``inner`` lies inside ``outer`` (not necessarily strictly)."""
    _check_same_dim(outer, inner)
    return all(
        oa <= ia and ib <= ob
        for oa, ob, ia, ib in zip(outer.lo, outer.hi, inner.lo, inner.hi)
    )


def disjoint(a: Brick, b: Brick) -> bool:
    """True iff the closed boxes have empty intersection.

    Touching on a face, edge or corner counts as intersecting, so this
    requires a gap of at least one unit on some axis.
    """
    _check_same_dim(a, b)
    return any(
        max(al, bl) > min(ah, bh)
        for al, ah, bl, bh in zip(a.lo, a.hi, b.lo, b.hi)
    )


def compatible(a: Brick, b: Brick) -> bool:
    """True iff one brick contains the other or the two are disjoint."""
    return contains(a, b) or contains(b, a) or disjoint(a, b)


def enumerate_bricks(shape: Shape, cubic: bool = False) -> Iterator[Brick]:
    """Every brick valid in ``shape``, in lexicographic (lo, hi) order.

    With ``cubic`` set, only bricks with all sides equal are produced.
    """
    dims = shape.dims
    if cubic:
        for lo in itertools.product(*(range(m) for m in dims)):
            max_side = min(m - a for a, m in zip(lo, dims))
            for s in range(1, max_side + 1):
                yield Brick(lo, tuple(a + s for a in lo))
    else:
        for lo in itertools.product(*(range(m) for m in dims)):
            for hi in itertools.product(*(range(a + 1, m + 1) for a, m in zip(lo, dims))):
                yield Brick(lo, hi)


def brick_count(shape: Shape, cubic: bool = False) -> int:
    """Closed-form count of the bricks :func:`enumerate_bricks` yields."""
    if cubic:
        total = 0
        for s in range(1, min(shape.dims) + 1):
            positions = 1
            for m in shape.dims:
                positions *= m - s + 1
            total += positions
        return total
    count = 1
    for m in shape.dims:
        count *= m * (m + 1) // 2
    return count


def shape_symmetries(shape: Shape) -> Iterator[tuple[tuple[int, ...], tuple[bool, ...]]]:
    """All symmetries of the ambient box, as (axis permutation, flip mask).

    A permutation may only trade axes of equal length; ``perm[i]`` names the
    source axis whose interval lands on axis ``i``.  A set flip reflects the
    interval on that axis via ``x -> m_i - x``.
    """
    dims = shape.dims
    d = len(dims)
    for perm in itertools.permutations(range(d)):
        if any(dims[perm[i]] != dims[i] for i in range(d)):
            continue
        for flips in itertools.product((False, True), repeat=d):
            yield perm, flips


def transform_brick(
    brick: Brick, shape: Shape, perm: tuple[int, ...], flips: tuple[bool, ...]
) -> Brick:
    """Apply one shape symmetry to a brick."""
    lo = []
    hi = []
    for i in range(shape.ndim):
        a, b = brick.lo[perm[i]], brick.hi[perm[i]]
        if flips[i]:
            m = shape.dims[i]
            a, b = m - b, m - a
        lo.append(a)
        hi.append(b)
    return Brick(tuple(lo), tuple(hi))


def canonical_bricks(shape: Shape, bricks: Iterable[Brick]) -> tuple[Brick, ...]:
    """Lexicographically least image of a brick set under the shape symmetries.

    The result is sorted and duplicate-free, and is the same for every brick
    set in one symmetry orbit, which makes it usable as an isomorph-rejection
    key.
    """
    base = tuple(sorted(set(bricks)))
    best = base
    for perm, flips in shape_symmetries(shape):
        image = tuple(sorted({transform_brick(b, shape, perm, flips) for b in base}))
        if image < best:
            best = image
    return best
