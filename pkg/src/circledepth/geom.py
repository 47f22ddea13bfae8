"""Exact rational planar geometry: points, predicates, general-position checks.

Every coordinate is a `fractions.Fraction`, so all predicates decide signs
exactly and every identity downstream is an integer equality, never a
tolerance comparison.  Predicates clear denominators internally and work on
plain Python integers, which keeps the common all-integer case fast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction


class DegenerateInputError(ValueError):
    """A predicate received input it is undefined for (e.g. collinear points).

    ``indices`` names the offending points when the caller works with a point
    set; it is empty for free-standing point arguments.
    """

    def __init__(self, message: str, indices: Sequence[int] = ()):
        super().__init__(message)
        self.indices = tuple(indices)


class NotCertifiedError(ValueError):
    """An operation required a general-position certified point set."""


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    @staticmethod
    def of(x, y) -> "Point":
        return Point(Fraction(x), Fraction(y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


class Color(Enum):
    RED = "R"
    BLUE = "B"
    UNCOLORED = ""


@dataclass(frozen=True)
class ColoredPoint:
    point: Point
    color: Color = Color.UNCOLORED


@dataclass
class PointSet:
    """An indexed list of colored points, optionally certified in general position.

    ``gp_certified`` is only set by :func:`validate_general_position`; all the
    depth machinery refuses uncertified input because a single collinear
    triple or cocircular quadruple breaks the strict-sign reasoning it relies
    on.  Indices are stable: operations name points by position in ``points``.
    """

    points: list[ColoredPoint] = field(default_factory=list)
    gp_certified: bool = False

    @staticmethod
    def from_coords(coords: Iterable[tuple], colors: Iterable[Color] | None = None) -> "PointSet":
        pts = [Point.of(x, y) for x, y in coords]
        if colors is None:
            cols = [Color.UNCOLORED] * len(pts)
        else:
            cols = list(colors)
            if len(cols) != len(pts):
                raise ValueError("colors must match coords in length")
        return PointSet([ColoredPoint(p, c) for p, c in zip(pts, cols)])

    def __len__(self) -> int:
        return len(self.points)

    def point(self, i: int) -> Point:
        return self.points[i].point

    def color(self, i: int) -> Color:
        return self.points[i].color

    def coords(self) -> list[Point]:
        return [cp.point for cp in self.points]

    def indices_of(self, color: Color) -> list[int]:
        return [i for i, cp in enumerate(self.points) if cp.color is color]

    def require_certified(self) -> None:
        if not self.gp_certified:
            raise NotCertifiedError(
                "point set is not certified in general position; "
                "run validate_general_position first"
            )


def _int_coords(points: Sequence[Point]) -> list[tuple[int, int]]:
    # Scale all coordinates onto a common integer grid.  Sign predicates are
    # invariant under a common positive scaling, so this is exact.
    lcm = 1
    for p in points:
        lcm = math.lcm(lcm, p.x.denominator, p.y.denominator)
    if lcm == 1:
        return [(p.x.numerator, p.y.numerator) for p in points]
    return [
        (p.x.numerator * (lcm // p.x.denominator), p.y.numerator * (lcm // p.y.denominator))
        for p in points
    ]


def _sign(value: int) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def _orient_int(a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> int:
    return _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _incircle_det_int(
    a: tuple[int, int], b: tuple[int, int], c: tuple[int, int], d: tuple[int, int]
) -> int:
    # Determinant of the lifted 3x3 matrix; positive iff d is inside the
    # circumcircle of (a, b, c) when (a, b, c) is counterclockwise.
    adx = a[0] - d[0]
    ady = a[1] - d[1]
    bdx = b[0] - d[0]
    bdy = b[1] - d[1]
    cdx = c[0] - d[0]
    cdy = c[1] - d[1]
    return (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )


def orientation(a: Point, b: Point, c: Point) -> int:
    """Return +1 if (a, b, c) turns counterclockwise, -1 clockwise, 0 collinear."""
    ia, ib, ic = _int_coords([a, b, c])
    return _orient_int(ia, ib, ic)


def in_circle(a: Point, b: Point, c: Point, d: Point) -> int:
    """Return +1 if d is strictly inside the circle through a, b, c; 0 on it; -1 outside.

    The result does not depend on the orientation of (a, b, c); the sign is
    normalized internally.  Raises :class:`DegenerateInputError` when a, b, c
    are collinear (no circle exists).
    """
    ia, ib, ic, id_ = _int_coords([a, b, c, d])
    orient = _orient_int(ia, ib, ic)
    if orient == 0:
        raise DegenerateInputError("in_circle: defining points are collinear")
    return _sign(_incircle_det_int(ia, ib, ic, id_)) * orient


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    """Exact circumcenter of three non-collinear points.

    Rational inputs give a rational center, so equidistance is an exact
    Fraction equality: ``sqdist(center, a) == sqdist(center, b) == sqdist(center, c)``.
    """
    d = 2 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))
    if d == 0:
        raise DegenerateInputError("circumcenter: points are collinear")
    a2 = a.x * a.x + a.y * a.y
    b2 = b.x * b.x + b.y * b.y
    c2 = c.x * c.x + c.y * c.y
    ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d
    uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d
    return Point(ux, uy)


def sqdist(a: Point, b: Point) -> Scalar:
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


@dataclass(frozen=True)
class Violation:
    kind: str  # "duplicate", "collinear" or "cocircular"
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.indices}"


def validate_general_position(ps: PointSet) -> list[Violation]:
    """Exhaustively list duplicates, collinear triples, cocircular quadruples.

    Returns an empty list exactly when the set is in general position, in
    which case ``ps.gp_certified`` is set.  Violations are data, not errors:
    callers (e.g. the construction generators) repair the named tuples.
    Quadruples containing a collinear triple are skipped; the triple itself
    is already reported.
    """
    pts = _int_coords([cp.point for cp in ps.points])
    n = len(pts)
    violations: list[Violation] = []
    collinear_triples: set[tuple[int, int, int]] = set()
    for i in range(n):
        for j in range(i + 1, n):
            if pts[i] == pts[j]:
                violations.append(Violation("duplicate", (i, j)))
    if violations:
        # Coincident points make every predicate on them meaningless; report
        # only the duplicates and let the caller fix those first.
        ps.gp_certified = False
        return violations
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if _orient_int(pts[i], pts[j], pts[k]) == 0:
                    violations.append(Violation("collinear", (i, j, k)))
                    collinear_triples.add((i, j, k))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (i, j, k) in collinear_triples:
                    continue
                for m in range(k + 1, n):
                    if (
                        (i, j, m) in collinear_triples
                        or (i, k, m) in collinear_triples
                        or (j, k, m) in collinear_triples
                    ):
                        continue
                    if _incircle_det_int(pts[i], pts[j], pts[k], pts[m]) == 0:
                        violations.append(Violation("cocircular", (i, j, k, m)))
    ps.gp_certified = not violations
    return violations


def snap_to_rational(points: Sequence[tuple[float, float]], denominator: int) -> PointSet:
    """Snap float pairs to the nearest fractions with the given denominator.

    The result is not certified; callers validate (and perturb) afterwards.
    Exact ties round half to even, matching Python's ``round``.
    """
    if denominator < 1:
        raise ValueError("denominator must be a positive integer")
    cps = []
    for x, y in points:
        nx = round(Fraction(x) * denominator)
        ny = round(Fraction(y) * denominator)
        cps.append(ColoredPoint(Point(Fraction(nx, denominator), Fraction(ny, denominator))))
    return PointSet(cps)


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of the convex hull in counterclockwise order (monotone chain).

    Collinear points on the hull boundary are excluded; for general-position
    input the hull is exactly the set of extreme points.
    """
    n = len(points)
    if n <= 2:
        return list(range(n))
    ints = _int_coords(points)
    order = sorted(range(n), key=lambda i: ints[i])

    def half(indices):
        chain: list[int] = []
        for i in indices:
            while len(chain) >= 2 and _orient_int(ints[chain[-2]], ints[chain[-1]], ints[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]
