"""Closed-form sizes and bounds for extremal island systems.

Everything here is exact: counts are integers, non-integral bounds are
`fractions.Fraction` values.  Comparing a cardinality against a fractional
bound should use the bound's floor, which is the tightest valid integer
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import Shape


@dataclass(frozen=True)
class BoundPair:
    """An exact lower/upper bound pair, lower <= upper."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")


def min_brick_system_size(shape: Shape) -> int:
    """Minimum size of a maximal brick system: sum of sides minus (d - 1)."""
    return sum(shape.dims) - (shape.ndim - 1)


def max_rect_system_size(m1: int, m2: int) -> int:
    """Maximum size of a maximal rectangle system in an m1 x m2 box.

    The exact two-dimensional value: floor((m1*m2 + m1 + m2 - 1) / 2).
    """
    _require_positive(m1=m1, m2=m2)
    return (m1 * m2 + m1 + m2 - 1) // 2


def min_square_system_size(m: int) -> int:
    """Minimum size of a maximal square system in an m x m square: m."""
    _require_positive(m=m)
    return m


def max_square_system_bound(m: int) -> Fraction:
    """Upper bound m(m+2)/3 on the size of a maximal square system.

    Attained exactly when m is one less than a power of two.
    """
    _require_positive(m=m)
    return Fraction(m * (m + 2), 3)


def max_brick_system_bounds(shape: Shape) -> BoundPair:
    """The sandwich bounds on the maximum size of a maximal brick system.

    lower = (prod m_i + sum over (d-1)-subsets of prod m_j) / 2^(d-1) - 1,
    upper = prod (m_i + 1) / 2^(d-1) - 1.  In two dimensions the exact value
    of :func:`max_rect_system_size` lies between the two.
    """
    dims = shape.dims
    d = len(dims)
    product = 1
    for m in dims:
        product *= m
    cofactor_sum = sum(product // m for m in dims)
    upper_product = 1
    for m in dims:
        upper_product *= m + 1
    scale = 2 ** (d - 1)
    return BoundPair(
        lower=Fraction(product + cofactor_sum, scale) - 1,
        upper=Fraction(upper_product, scale) - 1,
    )


def max_cube_system_bound(d: int, m: int) -> Fraction:
    """Upper bound ((m+1)^d - 1) / (2^d - 1) on maximal cubic-system size.

    Attained exactly when m is one less than a power of two; see
    :func:`subdivision_size` for the matching construction size.
    """
    _require_positive(d=d, m=m)
    return Fraction((m + 1) ** d - 1, 2 ** d - 1)


def subdivision_size(d: int, k: int) -> int:
    """Size (2^(kd) - 1) / (2^d - 1) of the recursive cube subdivision.

    The division is a geometric series and always exact; a remainder would
    be an internal error, not a caller mistake.
    """
    _require_positive(d=d, k=k)
    quotient, remainder = divmod(2 ** (k * d) - 1, 2 ** d - 1)
    assert remainder == 0, f"non-exact subdivision size for d={d}, k={k}"
    return quotient


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if value is None or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value}")
