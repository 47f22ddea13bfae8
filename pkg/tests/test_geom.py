from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from circledepth import (
    Color,
    DegenerateInputError,
    Point,
    PointSet,
    circumcenter,
    convex_hull,
    in_circle,
    orientation,
    snap_to_rational,
    sqdist,
    validate_general_position,
)
from circledepth.pointfile import PointFileError, parse_point_file, serialize_point_file

from conftest import make_set

P = Point.of

coord = st.integers(min_value=-1000, max_value=1000)
points = st.builds(lambda x, y: P(x, y), coord, coord)


def test_orientation_examples():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orientation(P(0, 0), P(1, 1), P(2, 2)) == 0
    assert orientation(P(0, 0), P(0, 1), P(1, 0)) == -1


def test_in_circle_examples():
    a, b, c = P(0, 0), P(4, 0), P(0, 4)
    assert in_circle(a, b, c, P(1, 1)) == 1
    assert in_circle(a, b, c, P(4, 0)) == 0
    assert in_circle(a, b, c, P(10, 10)) == -1


def test_in_circle_orientation_independent():
    # Same circle, opposite orientation of the defining triple.
    assert in_circle(P(0, 0), P(0, 4), P(4, 0), P(1, 1)) == 1


def test_in_circle_collinear_raises():
    with pytest.raises(DegenerateInputError):
        in_circle(P(0, 0), P(1, 1), P(2, 2), P(5, 0))


def test_circumcenter_examples():
    assert circumcenter(P(0, 0), P(4, 0), P(0, 4)) == P(2, 2)
    # Equidistance pins these: x = 1 by symmetry, then |c-a|^2 = |c-b|^2.
    assert circumcenter(P(0, 0), P(2, 0), P(1, 5)) == Point(Fraction(1), Fraction(12, 5))
    center = circumcenter(P(0, 0), P(9, 9), P(10, 0))
    assert center == P(5, 4)
    assert sqdist(center, P(0, 0)) == sqdist(center, P(9, 9)) == sqdist(center, P(10, 0)) == 41


def test_circumcenter_collinear_raises():
    with pytest.raises(DegenerateInputError):
        circumcenter(P(0, 0), P(1, 0), P(2, 0))


@given(a=points, b=points, c=points)
def test_orientation_antisymmetric(a, b, c):
    assert orientation(a, b, c) == -orientation(b, a, c) == -orientation(a, c, b)
    assert orientation(a, b, c) == orientation(b, c, a)


@given(a=points, b=points, c=points, d=points)
@settings(max_examples=60)
def test_in_circle_matches_exact_distance(a, b, c, d):
    # Independent route: exact circumcenter and squared-distance comparison.
    if orientation(a, b, c) == 0:
        return
    center = circumcenter(a, b, c)
    r2 = sqdist(center, a)
    d2 = sqdist(center, d)
    expected = (d2 < r2) - (d2 > r2)
    assert in_circle(a, b, c, d) == expected


@given(a=points, b=points, c=points)
def test_circumcenter_equidistant(a, b, c):
    if orientation(a, b, c) == 0:
        return
    center = circumcenter(a, b, c)
    assert sqdist(center, a) == sqdist(center, b) == sqdist(center, c)


def test_validate_collinear():
    ps = PointSet.from_coords([(0, 0), (1, 0), (2, 0)])
    violations = validate_general_position(ps)
    assert [(v.kind, v.indices) for v in violations] == [("collinear", (0, 1, 2))]
    assert not ps.gp_certified


def test_validate_cocircular():
    ps = PointSet.from_coords([(1, 0), (0, 1), (-1, 0), (0, -1)])
    violations = validate_general_position(ps)
    assert [(v.kind, v.indices) for v in violations] == [("cocircular", (0, 1, 2, 3))]


def test_validate_good_set():
    ps = PointSet.from_coords([(0, 0), (10, 0), (9, 9), (0, 10)])
    assert validate_general_position(ps) == []
    assert ps.gp_certified


def test_validate_duplicate_points():
    ps = PointSet.from_coords([(0, 0), (0, 0), (1, 5)])
    violations = validate_general_position(ps)
    assert [(v.kind, v.indices) for v in violations] == [("duplicate", (0, 1))]


def _scan_general_position(ps: PointSet) -> bool:
    # Independent O(n^4) route via rational circumcenters and distances,
    # sharing nothing with the determinant predicates.
    pts = [cp.point for cp in ps.points]
    n = len(pts)
    if len({(p.x, p.y) for p in pts}) != n:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = pts[i], pts[j], pts[k]
                if (b.x - a.x) * (c.y - a.y) == (b.y - a.y) * (c.x - a.x):
                    return False
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                try:
                    center = circumcenter(pts[i], pts[j], pts[k])
                except DegenerateInputError:
                    return False
                r2 = sqdist(center, pts[i])
                for m in range(k + 1, n):
                    if sqdist(center, pts[m]) == r2:
                        return False
    return True


@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=1, max_size=7))
@settings(max_examples=60, deadline=None)
def test_validate_matches_independent_scan(coords):
    ps = PointSet.from_coords(coords)
    assert (validate_general_position(ps) == []) == _scan_general_position(ps)


def test_snap_examples():
    ps = snap_to_rational([(0.5, 0.25)], 4)
    assert ps.point(0) == Point(Fraction(1, 2), Fraction(1, 4))
    ps = snap_to_rational([(0.333, 0.667)], 1000)
    assert ps.point(0) == Point(Fraction(333, 1000), Fraction(667, 1000))
    import math

    ps = snap_to_rational([(math.pi / 4, 0.0)], 10**6)
    assert ps.point(0) == Point(Fraction(785398, 10**6), Fraction(0))
    assert not ps.gp_certified


@given(st.integers(-4000, 4000), st.integers(1, 64))
def test_snap_idempotent_on_representable(num, den):
    value = num / den
    if Fraction(value) != Fraction(num, den):
        return  # not exactly representable as a float; skip
    ps = snap_to_rational([(value, value)], den)
    assert ps.point(0) == Point(Fraction(num, den), Fraction(num, den))


def test_convex_hull_square_with_interior():
    pts = [P(0, 0), P(10, 0), P(10, 10), P(0, 10), P(5, 4)]
    assert sorted(convex_hull(pts)) == [0, 1, 2, 3]


def test_point_file_round_trip():
    text = "1/2 3 R\n-2 0.25 B\n7 9\n# @pair 0 2\n"
    pf = parse_point_file(text)
    assert len(pf.points) == 3
    assert pf.points.color(0) is Color.RED
    assert pf.points.point(1) == Point(Fraction(-2), Fraction(1, 4))
    assert pf.pairs == [(0, 2)]
    assert serialize_point_file(pf.points, pf.pairs) == "1/2 3 R\n-2 1/4 B\n7 9\n# @pair 0 2\n"
    again = parse_point_file(serialize_point_file(pf.points, pf.pairs))
    assert serialize_point_file(again.points, again.pairs) == serialize_point_file(
        pf.points, pf.pairs
    )


def test_point_file_comments_and_errors():
    pf = parse_point_file("# heading\n\n1 2\n")
    assert len(pf.points) == 1
    with pytest.raises(PointFileError):
        parse_point_file("1 2 3 4\n")
    with pytest.raises(PointFileError):
        parse_point_file("1 x\n")
    with pytest.raises(PointFileError):
        parse_point_file("1 2 G\n")
    with pytest.raises(PointFileError):
        parse_point_file("1 2\n# @pair 0 5\n")


def test_colored_indices():
    ps = make_set(
        [(0, 0), (10, 0), (9, 9), (0, 10)],
        [Color.RED, Color.BLUE, Color.RED, Color.BLUE],
    )
    assert ps.indices_of(Color.RED) == [0, 2]
    assert ps.indices_of(Color.BLUE) == [1, 3]
