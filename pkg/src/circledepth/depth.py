"""Bisector weight sequences and the counting statistics built on them.

For a pair p, q the perpendicular bisector carries the centers of all circles
through both points.  The n-2 circumcenters with the remaining points cut it
into n-1 open segments; every circle centered on one segment strictly
encloses the same number of points, the segment's *weight*.  Everything else
here (pair depths, enclosure-count tables, censuses, j-edges, k-sets,
repeated-weight statistics) reduces to those sequences plus orientation and
in-circle tests.

The sweep works in a frame anchored at the midpoint m of pq with direction
d = rot90(q - p).  For a third point x the circumcenter of (p, q, x) sits at
parameter

    s_x = dot(x - p, x - q) / (2 * cross(q - p, x - p)),

and x is enclosed exactly for parameters on its own side of s_x: the side is
{s > s_x} when x lies strictly left of the directed line p->q, {s < s_x}
otherwise.  Both facts follow from expanding |c(s) - p|^2 - |c(s) - x|^2,
which is affine in s with slope 2 * cross(q - p, x - p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import (
    DegenerateInputError,
    Point,
    PointSet,
    Scalar,
    _incircle_det_int,
    _int_coords,
    _orient_int,
    _sign,
    circumcenter,
    sqdist,
)


@dataclass(frozen=True)
class BisectorEvent:
    index: int  # third point whose circumcenter with the pair sits here
    s: Scalar
    covers_positive: bool  # True: enclosed for s > s_x; False: for s < s_x


@dataclass(frozen=True)
class BisectorProfile:
    pair: tuple[int, int]
    midpoint: Point
    direction: tuple[Scalar, Scalar]  # rot90(q - p); center(s) = midpoint + s * direction
    events: tuple[BisectorEvent, ...]
    weights: tuple[int, ...]

    def multiplicity(self, weight: int) -> int:
        return sum(1 for w in self.weights if w == weight)


@dataclass(frozen=True)
class DepthSummary:
    pair: tuple[int, int]
    min_weight: int
    max_weight: int


@dataclass(frozen=True)
class TripleStats:
    """c[k] = number of point triples whose circumcircle strictly encloses k points."""

    c: tuple[int, ...]  # indexed k = 0 .. n-3

    def at(self, k: int) -> int:
        # Out-of-range counts are zero by convention (used by identity checks).
        if 0 <= k < len(self.c):
            return self.c[k]
        return 0


@dataclass(frozen=True)
class EdgeStats:
    directed_j: tuple[int, ...]  # j = 0 .. n-2: ordered pairs with j points strictly left
    undirected_j: tuple[int, ...]  # j = 0 .. floor((n-2)/2): unordered pairs, j = min side


@dataclass(frozen=True)
class KSetStats:
    ksets: tuple[int, ...]  # index k = 1 .. n-1 (index 0 is unused and zero)

    def f_inf(self, k: int) -> int:
        # Unbounded regions of the order-k diagram; order 0 has none.
        if k == 0:
            return 0
        return self.ksets[k]


@dataclass(frozen=True)
class WeightCensus:
    hist: tuple[int, ...]  # weight w = 0 .. n-2 over all bisectors counted

    def at(self, w: int) -> int:
        if 0 <= w < len(self.hist):
            return self.hist[w]
        return 0


@dataclass(frozen=True)
class RepeatStats:
    """Repeated weights per bisector, indexed by Voronoi order k = weight + 1.

    ``b[k]`` counts bisectors whose sequence contains the value k-1 at least
    four times (four collinear order-k Voronoi edges); ``max_collinear[k]`` is
    the largest multiplicity of k-1 on any single bisector.  Index 0 unused.
    """

    b: tuple[int, ...]  # k = 1 .. n-1
    max_collinear: tuple[int, ...]

    def nonzero_orders(self) -> list[int]:
        return [k for k in range(1, len(self.b)) if self.b[k] > 0]


def _event_data(ints, p: int, q: int) -> list[tuple[int, int, int]]:
    """Per third point x: (x, dot(x-p, x-q), cross(q-p, x-p)), so that
    s_x = dot / (2 * cross).

    Computed on the common integer grid; s is invariant under the uniform
    scaling because both the frame and the circumcenters scale with it.
    """
    px, py = ints[p]
    qx, qy = ints[q]
    ux, uy = qx - px, qy - py
    out = []
    for x in range(len(ints)):
        if x == p or x == q:
            continue
        xx, xy = ints[x]
        ax, ay = xx - px, xy - py
        cross = ux * ay - uy * ax
        if cross == 0:
            raise DegenerateInputError(
                "collinear triple encountered on a certified set", (p, q, x)
            )
        num = ax * (xx - qx) + ay * (xy - qy)
        out.append((x, num, cross))
    return out


def weight_sequence(ps: PointSet, p: int, q: int) -> BisectorProfile:
    """Weight sequence of the bisector of pair (p, q), in increasing-s order."""
    ps.require_certified()
    if p == q:
        raise ValueError("pair indices must differ")
    ints = _int_coords([cp.point for cp in ps.points])
    events = []
    for x, num, cross in _event_data(ints, p, q):
        events.append(BisectorEvent(x, Fraction(num, 2 * cross), cross > 0))
    events.sort(key=lambda e: e.s)
    for a, b in zip(events, events[1:]):
        if a.s == b.s:
            raise DegenerateInputError(
                "cocircular quadruple encountered on a certified set",
                (p, q, a.index, b.index),
            )
    weight = sum(1 for e in events if not e.covers_positive)
    weights = [weight]
    for e in events:
        weight += 1 if e.covers_positive else -1
        weights.append(weight)
    pp = ps.point(p)
    qp = ps.point(q)
    mid = Point((pp.x + qp.x) / 2, (pp.y + qp.y) / 2)
    direction = (-(qp.y - pp.y), qp.x - pp.x)
    return BisectorProfile((p, q), mid, direction, tuple(events), tuple(weights))


def oracle_weights(ps: PointSet, p: int, q: int) -> list[int]:
    """Independent re-derivation of the weight sequence by sampling circles.

    Uses circumcenters projected on the bisector for the event parameters and
    counts enclosed points by exact squared-distance comparison at one sample
    center per segment (midpoints between events; the two unbounded segments
    are sampled at min - 1 and max + 1).  Shares no code with the sweep in
    :func:`weight_sequence`.
    """
    ps.require_certified()
    if p == q:
        raise ValueError("pair indices must differ")
    pp = ps.point(p)
    qp = ps.point(q)
    mid = Point((pp.x + qp.x) / 2, (pp.y + qp.y) / 2)
    dx = -(qp.y - pp.y)
    dy = qp.x - pp.x
    dd = dx * dx + dy * dy
    params = []
    for x in range(len(ps)):
        if x in (p, q):
            continue
        center = circumcenter(pp, qp, ps.point(x))
        params.append(((center.x - mid.x) * dx + (center.y - mid.y) * dy) / dd)
    params.sort()
    if params:
        samples = [params[0] - 1]
        samples += [(a + b) / 2 for a, b in zip(params, params[1:])]
        samples.append(params[-1] + 1)
    else:
        samples = [Fraction(0)]
    counts = []
    for s in samples:
        center = Point(mid.x + s * dx, mid.y + s * dy)
        r2 = sqdist(center, pp)
        inside = 0
        for x in range(len(ps)):
            if x in (p, q):
                continue
            if sqdist(center, ps.point(x)) < r2:
                inside += 1
        counts.append(inside)
    return counts


def all_pairs(n: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(n) for q in range(p + 1, n)]


def all_profiles(ps: PointSet, jobs: int = 1) -> list[BisectorProfile]:
    """Profiles for every unordered pair, in lexicographic pair order.

    ``jobs > 1`` fans the per-pair work out to a process pool; the result
    order (and therefore every downstream aggregate) is identical for any
    jobs value.
    """
    pairs = all_pairs(len(ps))
    if jobs <= 1 or len(pairs) < 4:
        return [weight_sequence(ps, p, q) for p, q in pairs]
    from concurrent.futures import ProcessPoolExecutor
    from functools import partial

    chunk = max(1, len(pairs) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(partial(_profile_task, ps), pairs, chunksize=chunk))


def _profile_task(ps: PointSet, pair: tuple[int, int]) -> BisectorProfile:
    return weight_sequence(ps, pair[0], pair[1])


def pair_depth(ps: PointSet, p: int, q: int) -> DepthSummary:
    profile = weight_sequence(ps, p, q)
    return DepthSummary((p, q), min(profile.weights), max(profile.weights))


def maximin_pair(ps: PointSet, profiles: list[BisectorProfile] | None = None) -> tuple[tuple[int, int], int]:
    """Pair maximizing the minimum weight on its bisector.

    Ties break to the lexicographically smallest index pair so output is
    reproducible byte for byte.
    """
    ps.require_certified()
    if len(ps) < 2:
        raise ValueError("need at least two points")
    best_pair = None
    best = -1
    for profile in profiles or all_profiles(ps):
        value = min(profile.weights)
        if value > best:
            best = value
            best_pair = profile.pair
    return best_pair, best


def minimax_pair(ps: PointSet, profiles: list[BisectorProfile] | None = None) -> tuple[tuple[int, int], int]:
    """Pair minimizing the maximum weight on its bisector.

    The result never exceeds floor((2n-3)/3); that bound is exact at every n,
    so it is asserted here rather than merely reported.
    """
    ps.require_certified()
    n = len(ps)
    if n < 2:
        raise ValueError("need at least two points")
    best_pair = None
    best = None
    for profile in profiles or all_profiles(ps):
        value = max(profile.weights)
        if best is None or value < best:
            best = value
            best_pair = profile.pair
    assert best <= (2 * n - 3) // 3, f"minimax {best} exceeds floor((2n-3)/3) for n={n}"
    return best_pair, best


def bichromatic_pairs(ps: PointSet) -> list[tuple[int, int]]:
    from .geom import Color

    reds = ps.indices_of(Color.RED)
    blues = ps.indices_of(Color.BLUE)
    if not reds or not blues:
        raise ValueError("need at least one red and one blue point")
    return sorted((min(r, b), max(r, b)) for r in reds for b in blues)


def bichromatic_maximin(ps: PointSet) -> tuple[tuple[int, int], int]:
    """Maximin depth restricted to red-blue pairs; same tie-break as maximin_pair."""
    ps.require_certified()
    best_pair = None
    best = -1
    for p, q in bichromatic_pairs(ps):
        value = min(weight_sequence(ps, p, q).weights)
        if value > best:
            best = value
            best_pair = (p, q)
    return best_pair, best


def triple_counts(ps: PointSet) -> TripleStats:
    """Brute-force enclosure counts over all circumcircles of point triples.

    Deliberately O(n^4) and independent of the sweep: this table is the
    reference the census checks compare against.
    """
    ps.require_certified()
    n = len(ps)
    if n < 3:
        raise ValueError("need at least three points")
    ints = _int_coords([cp.point for cp in ps.points])
    counts = [0] * (n - 2)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                orient = _orient_int(ints[i], ints[j], ints[k])
                enclosed = 0
                for m in range(n):
                    if m in (i, j, k):
                        continue
                    if _sign(_incircle_det_int(ints[i], ints[j], ints[k], ints[m])) * orient > 0:
                        enclosed += 1
                counts[enclosed] += 1
    return TripleStats(tuple(counts))


def bichromatic_triple_counts(ps: PointSet) -> TripleStats:
    """Enclosure counts over circumcircles of mixed-color triples only.

    A mixed triple (two points of one color, one of the other) is exactly a
    triple whose circumcenter is an event on some red-blue bisector; these
    are the counts the bichromatic census identity runs on.
    """
    ps.require_certified()
    n = len(ps)
    if n < 3:
        raise ValueError("need at least three points")
    from .geom import Color

    colors = [ps.color(i) for i in range(n)]
    ints = _int_coords([cp.point for cp in ps.points])
    counts = [0] * (n - 2)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                kinds = {colors[i], colors[j], colors[k]}
                if len(kinds) != 2 or Color.UNCOLORED in kinds:
                    continue
                orient = _orient_int(ints[i], ints[j], ints[k])
                enclosed = 0
                for m in range(n):
                    if m in (i, j, k):
                        continue
                    if _sign(_incircle_det_int(ints[i], ints[j], ints[k], ints[m])) * orient > 0:
                        enclosed += 1
                counts[enclosed] += 1
    return TripleStats(tuple(counts))


def bichromatic_directed_j(ps: PointSet) -> tuple[int, ...]:
    """directed_j restricted to red-blue pairs (both orders of each pair)."""
    ps.require_certified()
    n = len(ps)
    ints = _int_coords([cp.point for cp in ps.points])
    directed = [0] * max(n - 1, 0)
    for p, q in bichromatic_pairs(ps):
        left = 0
        for x in range(n):
            if x in (p, q):
                continue
            if _orient_int(ints[p], ints[q], ints[x]) > 0:
                left += 1
        directed[left] += 1
        directed[n - 2 - left] += 1
    return tuple(directed)


def j_edge_counts(ps: PointSet) -> EdgeStats:
    ps.require_certified()
    n = len(ps)
    ints = _int_coords([cp.point for cp in ps.points])
    directed = [0] * max(n - 1, 0)
    undirected = [0] * ((n - 2) // 2 + 1 if n >= 2 else 0)
    for i in range(n):
        for j in range(i + 1, n):
            left = 0
            for x in range(n):
                if x in (i, j):
                    continue
                if _orient_int(ints[i], ints[j], ints[x]) > 0:
                    left += 1
            directed[left] += 1
            directed[n - 2 - left] += 1
            undirected[min(left, n - 2 - left)] += 1
    return EdgeStats(tuple(directed), tuple(undirected))


def kset_counts(ps: PointSet, edges: EdgeStats | None = None) -> KSetStats:
    """k-set counts via the directed j-edge correspondence.

    The number of subsets of size k separable by a line equals the number of
    ordered pairs with exactly k-1 points strictly on their left.  The
    directed convention is what makes this exact at k = n/2 as well; the
    undirected table would halve the halving-edge contribution.
    """
    ps.require_certified()
    n = len(ps)
    if edges is None:
        edges = j_edge_counts(ps)
    ksets = [0] * n
    for k in range(1, n):
        ksets[k] = edges.directed_j[k - 1]
    return KSetStats(tuple(ksets))


def segment_weight_census(
    ps: PointSet, profiles: list[BisectorProfile] | None = None
) -> WeightCensus:
    """Histogram of segment weights over all C(n,2) bisectors."""
    ps.require_certified()
    n = len(ps)
    hist = [0] * (n - 1)
    for profile in profiles or all_profiles(ps):
        for w in profile.weights:
            hist[w] += 1
    return WeightCensus(tuple(hist))


def bichromatic_weight_census(ps: PointSet) -> WeightCensus:
    """Histogram of segment weights over red-blue bisectors only."""
    ps.require_certified()
    n = len(ps)
    hist = [0] * (n - 1)
    for p, q in bichromatic_pairs(ps):
        for w in weight_sequence(ps, p, q).weights:
            hist[w] += 1
    return WeightCensus(tuple(hist))


def repeated_weight_stats(
    ps: PointSet, profiles: list[BisectorProfile] | None = None
) -> RepeatStats:
    """How often single bisectors repeat a weight (collinear order-k edges).

    Counts all C(n,2) bisectors; constructions report their designated pairs
    separately.
    """
    ps.require_certified()
    n = len(ps)
    b = [0] * n
    max_mult = [0] * n
    for profile in profiles or all_profiles(ps):
        seen: dict[int, int] = {}
        for w in profile.weights:
            seen[w] = seen.get(w, 0) + 1
        for w, mult in seen.items():
            k = w + 1
            if mult >= 4:
                b[k] += 1
            if mult > max_mult[k]:
                max_mult[k] = mult
    return RepeatStats(tuple(b), tuple(max_mult))
