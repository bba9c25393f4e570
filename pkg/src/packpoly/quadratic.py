"""Standard-form integer quadratics F(x, y) = (a x^2 + 2b x y + c y^2 + d x + e y)/2 + f.

Any quadratic taking integer values on all of N0^2 can be written this
way with integer a..f satisfying a = d and c = e (mod 2).  This module
holds the representation, the structural checks a packing candidate must
pass, the complete-the-square identity used by the modular refutation,
the region counts behind the cross-coefficient bound, and exact growth
bounds that let finite scans speak about all of N0^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidM, OddNumerator

Point2 = tuple[int, int]


@dataclass(frozen=True)
class QuadPoly2:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def numerator(self, x: int, y: int) -> int:
        """a x^2 + 2b x y + c y^2 + d x + e y, the doubled value minus 2f."""
        return (
            self.a * x * x
            + 2 * self.b * x * y
            + self.c * y * y
            + self.d * x
            + self.e * y
        )

    def doubled_value(self, x: int, y: int) -> int:
        """2 F(x, y); always an integer, whatever the parity of a..e."""
        return self.numerator(x, y) + 2 * self.f

    def evaluate(self, x: int, y: int) -> int:
        num = self.numerator(x, y)
        if num % 2:
            raise OddNumerator(
                f"numerator {num} at ({x}, {y}) is odd; F is not integer-valued there"
            )
        return num // 2 + self.f

    def quadratic_part_doubled(self, x: int, y: int) -> int:
        """a x^2 + 2b x y + c y^2, twice the quadratic part."""
        return self.a * x * x + 2 * self.b * x * y + self.c * y * y


# The only two packing polynomials on the full quadrant, as coefficient tuples.
CANTOR1 = QuadPoly2(1, 1, 1, 1, 3, 0)
CANTOR2 = QuadPoly2(1, 1, 1, 3, 1, 0)


# ---------------------------------------------------------------------------
# structural validation


@dataclass(frozen=True)
class ValidationCheck:
    """One structural condition, with the identity that forces it.

    identity is human-readable documentation; witness (when present) is a
    lattice point realizing the failure and doubled_value is 2 F (or twice
    the quadratic part) there, so re-checking never divides by two.
    """

    name: str
    passed: bool
    identity: str
    witness: Point2 | None = None
    doubled_value: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    poly: QuadPoly2
    checks: tuple[ValidationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[ValidationCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _doubling_scan_negative(F: QuadPoly2, direction: Point2) -> Point2:
    """First point t * direction (t = 1, 2, 4, ...) where 2F < 0.

    Only called when the restriction of F to that ray has negative leading
    coefficient, so termination is guaranteed.
    """
    t = 1
    while True:
        pt = (direction[0] * t, direction[1] * t)
        if F.doubled_value(*pt) < 0:
            return pt
        t *= 2


def validate(F: QuadPoly2) -> ValidationReport:
    """Check every condition a packing candidate must satisfy a priori.

    Each condition comes with the identity that derives it from values of
    F alone, so a failure is a self-contained refutation.
    """
    checks: list[ValidationCheck] = []

    def add(name: str, passed: bool, identity: str, witness: Point2 | None = None) -> None:
        doubled = F.doubled_value(*witness) if witness is not None else None
        checks.append(ValidationCheck(name, passed, identity, witness, doubled))

    a, b, c, d, e, f = F.as_tuple()

    witness = None if a >= 0 else _doubling_scan_negative(F, (1, 0))
    add(
        "a_nonnegative",
        a >= 0,
        f"a = F(2,0) - 2F(1,0) + F(0,0) = {a}; a < 0 makes F(x,0) negative for large x",
        witness,
    )
    witness = None if c >= 0 else _doubling_scan_negative(F, (0, 1))
    add(
        "c_nonnegative",
        c >= 0,
        f"c = F(0,2) - 2F(0,1) + F(0,0) = {c}; c < 0 makes F(0,y) negative for large y",
        witness,
    )
    add(
        "f_nonnegative",
        f >= 0,
        f"f = F(0,0) = {f} must lie in the range N0",
        None if f >= 0 else (0, 0),
    )
    add(
        "a_d_parity",
        (a - d) % 2 == 0,
        f"F(1,0) - F(0,0) = (a + d)/2 with a = {a}, d = {d} must be an integer",
        None if (a - d) % 2 == 0 else (1, 0),
    )
    add(
        "c_e_parity",
        (c - e) % 2 == 0,
        f"F(0,1) - F(0,0) = (c + e)/2 with c = {c}, e = {e} must be an integer",
        None if (c - e) % 2 == 0 else (0, 1),
    )
    add(
        "quadratic_part_nonzero",
        (a, b, c) != (0, 0, 0),
        "a = b = c = 0 leaves an affine map, which packs no quadrant",
    )
    cross_ok = not (a == 0 and c == 0 and b < 1)
    witness = None
    if not cross_ok and b < 0:
        witness = _doubling_scan_negative(F, (1, 1))
    add(
        "cross_term_positive",
        cross_ok,
        f"with a = c = 0, F(x,x) = b x^2 + ((d+e)/2) x + f >= 0 forces b >= 1 (b = {b})",
        witness,
    )
    return ValidationReport(poly=F, checks=tuple(checks))


# ---------------------------------------------------------------------------
# positivity of the quadratic part on the closed quadrant


def is_positive_definite_on_quadrant(F: QuadPoly2) -> bool:
    """True iff the quadratic part is positive on N0^2 minus the origin.

    Requires a >= 1 and c >= 1 (the axes witness anything less); then
    b >= 0 makes every term nonnegative, and b < 0 is positive exactly
    when b^2 < ac -- otherwise 2Q(c, -b) = c(ac - b^2) <= 0 at a lattice
    point of the quadrant.
    """
    if F.a < 1 or F.c < 1:
        return False
    return F.b >= 0 or F.b * F.b < F.a * F.c


def definiteness_witness(F: QuadPoly2) -> tuple[Point2, int] | None:
    """A quadrant lattice point (not the origin) with 2Q <= 0, or None."""
    if is_positive_definite_on_quadrant(F):
        return None
    if F.a < 1:
        return (1, 0), F.quadratic_part_doubled(1, 0)
    if F.c < 1:
        return (0, 1), F.quadratic_part_doubled(0, 1)
    # here b < 0 and b^2 >= ac
    pt = (F.c, -F.b)
    return pt, F.quadratic_part_doubled(*pt)


# ---------------------------------------------------------------------------
# complete-the-square identity


@dataclass(frozen=True)
class SquareCompletion:
    """Data for the identity 8aD * F(x,y) = D u(x,y)^2 - v(y)^2 + r.

    u(x, y) = 2a x + 2b y + d and v(y) = 2D y + (bd - ae), with
    D = b^2 - ac and r = (bd - ae)^2 - D d^2 + 8aDf.  The identity holds
    as polynomials in x and y for every integer a..f, including the
    degenerate cases a = 0 and D = 0.
    """

    D: int
    r: int
    u_x: int
    u_y: int
    u_0: int
    v_y: int
    v_0: int

    def u(self, x: int, y: int) -> int:
        return self.u_x * x + self.u_y * y + self.u_0

    def v(self, y: int) -> int:
        return self.v_y * y + self.v_0

    def identity_rhs(self, x: int, y: int) -> int:
        uu = self.u(x, y)
        vv = self.v(y)
        return self.D * uu * uu - vv * vv + self.r


def square_completion(F: QuadPoly2) -> SquareCompletion:
    a, b, c, d, e, f = F.as_tuple()
    D = b * b - a * c
    lincross = b * d - a * e
    r = lincross * lincross - D * d * d + 8 * a * D * f
    return SquareCompletion(
        D=D, r=r, u_x=2 * a, u_y=2 * b, u_0=d, v_y=2 * D, v_0=lincross
    )


# ---------------------------------------------------------------------------
# region counts for the cross-coefficient bound


@dataclass(frozen=True)
class RegionCounts:
    """Lattice point counts of the five regions tiling the counting argument."""

    m: int
    n1: int
    n2: int
    n3: int
    n4: int
    n5: int

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4 + self.n5

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4, self.n5)


def region_counts(m: int) -> RegionCounts:
    """Closed-form counts; all five are integers for every m >= 2.

    The two halved forms are even: m^2 = m (mod 2), so 333 m^2 + 9m and
    99 m^2 + 9m are both even.
    """
    if m < 2:
        raise InvalidM(f"scale must be at least 2, got {m}")
    return RegionCounts(
        m=m,
        n1=25 * m * m,
        n2=(333 * m * m + 9 * m) // 2,
        n3=40 * m * m,
        n4=(99 * m * m + 9 * m) // 2,
        n5=2 * m * m,
    )


def region_counts_bruteforce(m: int) -> RegionCounts:
    """The same five counts by direct iteration over the column bounds."""
    if m < 2:
        raise InvalidM(f"scale must be at least 2, got {m}")
    n1 = sum(len(range(0, 25 * m)) for _x in range(0, m))
    n2 = sum(len(range(0, 24 * m - x)) for x in range(m, 10 * m))
    n3 = sum(len(range(0, 10 * m)) for _x in range(10 * m, 14 * m))
    n4 = sum(len(range(0, 24 * m - x)) for x in range(14 * m, 23 * m))
    n5 = sum(len(range(0, m)) for _x in range(23 * m, 25 * m))
    return RegionCounts(m=m, n1=n1, n2=n2, n3=n3, n4=n4, n5=n5)


# ---------------------------------------------------------------------------
# exact growth bounds (finite scans -> statements about all of N0^2)


def convex_tail_min(alpha: int, beta: int, gamma: int, start: int) -> int:
    """min over integers k >= start of alpha k^2 - beta k + gamma, alpha > 0."""
    if alpha <= 0:
        raise ValueError("leading coefficient must be positive")

    def q(k: int) -> int:
        return alpha * k * k - beta * k + gamma

    vertex = beta // (2 * alpha)  # floor of the real vertex
    lo = max(start, vertex)
    return min(q(lo), q(max(start, vertex + 1)))


def _growth_coefficients(F: QuadPoly2) -> tuple[int, int, int, int]:
    """(alpha, beta, gamma, scale) with alpha k^2 - beta k + gamma <= scale * F
    on the whole diagonal x + y = k of the quadrant.

    Sound whenever the quadratic part is positive on the quadrant:
    b >= 0 gives 4Q >= 2(a x^2 + c y^2) >= (x+y)^2, and b < 0 (so
    b^2 < ac) gives 2(a+c) * 2Q = 2(ac - b^2)(x^2 + y^2) + 2(cy + bx)^2
    + 2(ax + by)^2 >= (ac - b^2)(x+y)^2.  The linear part loses at most
    max(|d|, |e|) * k, and f only helps.
    """
    M = max(abs(F.d), abs(F.e))
    if F.b >= 0:
        return 1, 2 * M, 4 * F.f, 4
    spread = F.a + F.c
    return F.a * F.c - F.b * F.b, 2 * spread * M, 4 * spread * F.f, 4 * spread


def diagonal_tail_min(F: QuadPoly2, start: int) -> int:
    """Proven lower bound for F on every lattice point with x + y >= start.

    Requires the quadratic part positive on the quadrant.
    """
    alpha, beta, gamma, scale = _growth_coefficients(F)
    num = convex_tail_min(alpha, beta, gamma, start)
    return -(-num // scale)  # ceil: F is an integer >= num / scale


def gap_box_bound(F: QuadPoly2, g: int) -> int:
    """Smallest B such that every lattice point outside [0, B]^2 provably
    has F > g.

    Outside the box means x > B or y > B, hence x + y >= B + 1, so it
    suffices that diagonal_tail_min(F, B + 1) > g; that quantity is
    nondecreasing in B, which makes the minimal B well-defined.
    """
    if diagonal_tail_min(F, 0) > g:
        return 0
    lo, hi = 0, 1
    while diagonal_tail_min(F, hi + 1) <= g:
        hi *= 2
    # smallest B in (lo, hi] with tail min beyond the box exceeding g
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if diagonal_tail_min(F, mid + 1) > g:
            hi = mid
        else:
            lo = mid
    return hi


def quadrant_outside_min(F: QuadPoly2, box_bound: int) -> int:
    """Proven lower bound for F on every lattice point outside [0, box_bound]^2.

    Requires the quadratic part positive on the quadrant.  Two sound
    bounds are combined: the diagonal growth bound, and -- when F is
    coordinatewise nondecreasing (b >= 0, a + d >= 0, c + e >= 0, with
    a, c >= 0) -- the exact minimum over the two boundary lines
    x = box_bound + 1 and y = box_bound + 1, to which every outside point
    walks down monotonically.
    """
    bounds = [diagonal_tail_min(F, box_bound + 1)]
    if F.b >= 0 and F.a >= 0 and F.c >= 0 and F.a + F.d >= 0 and F.c + F.e >= 0:
        edge = box_bound + 1
        ring_doubled = min(
            min(F.doubled_value(edge, y) for y in range(edge + 1)),
            min(F.doubled_value(x, edge) for x in range(edge + 1)),
        )
        bounds.append(-(-ring_doubled // 2))
    return max(bounds)
