"""Packing polynomials for rational integer sectors.

The sector with slope r/s (lowest terms, 0 < r < s, r dividing s - 1)
is the lattice region {(x, y) : 0 <= s*y <= r*x}.  Two quadratics pack
it, here called the lower and upper polynomials:

    lower(x, y) = [r(x - dy)^2 + (2 - r)x + (dr - 2d + 2)y] / 2
    upper(x, y) = [r(x - dy)^2 + (r + 2)x - (2d + s + 1)y] / 2

with d = (s - 1)/r.  Membership tests use the cross-multiplied integer
inequality throughout; nothing here touches rationals or floats.

No closed-form inverse is provided: unpacking is a bounded search that
grows the explored region until a growth bound certifies the target
value cannot occur further out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Literal

from .errors import (
    InvalidSectorSpec,
    NotInSector,
    OddNumerator,
    SearchExhausted,
    SectorDivisibilityError,
)

SectorPoint = tuple[int, int]

WhichPolynomial = Literal["F", "G"]


@dataclass(frozen=True)
class SectorSpec:
    """Slope r/s in lowest terms with the divisibility hypothesis r | s-1.

    d = (s - 1) / r is derived at construction.  Only this family is
    supported; slopes violating the divisibility hypothesis are a
    distinct error so callers can tell "malformed" from "out of scope".
    """

    r: int
    s: int
    d: int = field(init=False)

    def __post_init__(self) -> None:
        if not 1 <= self.r < self.s:
            raise InvalidSectorSpec(
                f"need 1 <= r < s, got r={self.r}, s={self.s}"
            )
        if gcd(self.r, self.s) != 1:
            raise InvalidSectorSpec(
                f"slope {self.r}/{self.s} is not in lowest terms"
            )
        if (self.s - 1) % self.r != 0:
            raise SectorDivisibilityError(
                f"r={self.r} does not divide s-1={self.s - 1}; "
                "this sector family is out of scope"
            )
        object.__setattr__(self, "d", (self.s - 1) // self.r)


def sector_contains(spec: SectorSpec, x: int, y: int) -> bool:
    """Membership in the sector: 0 <= y and s*y <= r*x, exactly."""
    return 0 <= y and 0 <= x and spec.s * y <= spec.r * x


def _halve_even(numerator: int, label: str) -> int:
    if numerator % 2 != 0:
        raise OddNumerator(
            f"{label} numerator {numerator} is odd; "
            "the evenness guarantee only holds on sector points"
        )
    return numerator // 2


def sector_F(spec: SectorSpec, x: int, y: int) -> int:
    """The lower packing polynomial, exact on sector points."""
    if not sector_contains(spec, x, y):
        raise NotInSector(f"({x}, {y}) is outside the {spec.r}/{spec.s} sector")
    q = x - spec.d * y
    numerator = spec.r * q * q + (2 - spec.r) * x + (spec.d * spec.r - 2 * spec.d + 2) * y
    return _halve_even(numerator, "lower polynomial")


def sector_G(spec: SectorSpec, x: int, y: int) -> int:
    """The upper packing polynomial, exact on sector points."""
    if not sector_contains(spec, x, y):
        raise NotInSector(f"({x}, {y}) is outside the {spec.r}/{spec.s} sector")
    q = x - spec.d * y
    numerator = spec.r * q * q + (spec.r + 2) * x - (2 * spec.d + spec.s + 1) * y
    return _halve_even(numerator, "upper polynomial")


def sector_evaluate(spec: SectorSpec, which: WhichPolynomial, x: int, y: int) -> int:
    if which == "F":
        return sector_F(spec, x, y)
    if which == "G":
        return sector_G(spec, x, y)
    raise ValueError(f"which must be 'F' or 'G', got {which!r}")


def sector_column_points(spec: SectorSpec, x: int) -> list[SectorPoint]:
    """Sector points with first coordinate x, ascending y."""
    if x < 0:
        return []
    return [(x, y) for y in range(spec.r * x // spec.s + 1)]


def _columns(spec: SectorSpec) -> Iterator[SectorPoint]:
    x = 0
    while True:
        yield from sector_column_points(spec, x)
        x += 1


def sector_enumerate(spec: SectorSpec, count: int) -> list[SectorPoint]:
    """The first `count` sector points, ascending x then ascending y."""
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    points: list[SectorPoint] = []
    for pt in _columns(spec):
        if len(points) == count:
            break
        points.append(pt)
    return points


def _segment_base(spec: SectorSpec, q: int) -> int:
    # q(rq + 2 - r)/2 = rq(q-1)/2 + q: a provable lower bound for both
    # polynomials over the sector points with x - dy = q.
    return spec.r * q * (q - 1) // 2 + q


def sector_tail_min(spec: SectorSpec, which: WhichPolynomial, x_from: int) -> int:
    """Proven lower bound over all sector points with x >= x_from.

    Writing q = x - dy, every sector point satisfies x <= s*q (from
    s*y <= r*x and dr = s - 1) and 0 <= y <= r*q.  Substituting
    x = q + dy turns the polynomials into

        lower = q(rq + 2 - r)/2 + y,    upper = q(rq + r + 2)/2 - y,

    so on fixed q both are at least q(rq + 2 - r)/2, a nondecreasing
    function of q >= 0; and x >= x_from forces q >= ceil(x_from / s).
    """
    if which not in ("F", "G"):
        raise ValueError(f"which must be 'F' or 'G', got {which!r}")
    q_min = max(0, -(-x_from // spec.s))
    return _segment_base(spec, q_min)


class SectorUnpacker:
    """Incremental inverse-by-search for one sector polynomial.

    Explores columns in enumeration order, recording each value, until a
    growth bound certifies the requested value cannot appear in any
    unexplored column.  The explored table is kept between calls, so a
    batch of unpack requests costs one sweep of the region covering the
    largest of them.
    """

    def __init__(
        self,
        spec: SectorSpec,
        which: WhichPolynomial,
        max_columns: int = 10**6,
    ) -> None:
        if which not in ("F", "G"):
            raise ValueError(f"which must be 'F' or 'G', got {which!r}")
        self.spec = spec
        self.which = which
        self.max_columns = max_columns
        self._table: dict[int, SectorPoint] = {}
        self._next_x = 0

    def _extend_to_cover(self, n: int) -> None:
        while sector_tail_min(self.spec, self.which, self._next_x) <= n:
            if self._next_x >= self.max_columns:
                raise SearchExhausted(
                    f"value {n} not located within {self.max_columns} columns"
                )
            for x, y in sector_column_points(self.spec, self._next_x):
                self._table.setdefault(
                    sector_evaluate(self.spec, self.which, x, y), (x, y)
                )
            self._next_x += 1

    def unpack(self, n: int) -> SectorPoint:
        if n < 0:
            raise ValueError(f"target value must be nonnegative, got {n}")
        self._extend_to_cover(n)
        try:
            return self._table[n]
        except KeyError:
            # The frontier is closed, so the value occurs nowhere: a gap.
            # Valid specs never have gaps, making this an internal
            # consistency alarm rather than a user error.
            raise SearchExhausted(
                f"no sector point maps to {n} although the frontier bound "
                f"{sector_tail_min(self.spec, self.which, self._next_x)} "
                "exceeds it; packing property violated"
            ) from None


def sector_unpack(spec: SectorSpec, which: WhichPolynomial, n: int) -> SectorPoint:
    """The unique sector point mapping to n under the chosen polynomial."""
    return SectorUnpacker(spec, which).unpack(n)
