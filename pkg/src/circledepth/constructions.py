"""Point-set generators: random instances and three extremal constructions.

Every generator returns a general-position certified set; construction
generators also attach machine-checkable claims and verify them with the
depth engine before returning.  A generator never hands back an unverified
set: layouts are realized approximately (floats where the ideal angles are
irrational), snapped to rationals, then rebuilt or perturbed
deterministically until both the general-position check and every claim
pass, within a bounded attempt budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geom import (
    Color,
    ColoredPoint,
    Point,
    PointSet,
    convex_hull,
    snap_to_rational,
    validate_general_position,
    _int_coords,
    _orient_int,
)
from .depth import weight_sequence


class ConstructionError(RuntimeError):
    """A generator exhausted its attempt budget or a claim failed."""


class Rng:
    """Deterministic xorshift64* stream, identical across runs for a seed.

    Step: x ^= x >> 12; x ^= x << 25 (mod 2^64); x ^= x >> 27; output is
    (x * 2685821657736338717) mod 2^64.  A zero seed is replaced by a fixed
    nonzero constant.  ``below(n)`` reduces the next output modulo n.
    """

    MASK = (1 << 64) - 1
    MULT = 2685821657736338717
    ZERO_SEED = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = (seed & self.MASK) or self.ZERO_SEED

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & self.MASK
        x ^= x >> 27
        self.state = x
        return (x * self.MULT) & self.MASK

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def int_in(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


@dataclass(frozen=True)
class Claim:
    """A verifiable property of a construction.

    kind is one of:
      halving-pair      params: pair.  The pair's line splits the rest evenly.
      weights-within    params: pair, lo, hi.  All bisector weights in [lo, hi].
      endpoint-weights  params: pair, a, b.  Unbounded-segment weights are {a, b}.
      repeated-values   params: pair, lo, hi, times.  Every value in [lo, hi]
                        occurs at least `times` times in the weight sequence.
      pair-min-below    params: pair, bound.  Min weight of the pair <= bound.
      convex-position   params: {}.  The convex hull uses every point.
    """

    kind: str
    params: dict
    description: str


@dataclass
class ConstructionOutput:
    points: PointSet
    designated_pairs: list[tuple[int, int]] = field(default_factory=list)
    claims: list[Claim] = field(default_factory=list)


def claim_failures(out: ConstructionOutput) -> list[str]:
    """Re-verify every claim; returns human-readable failure descriptions."""
    ps = out.points
    ps.require_certified()
    n = len(ps)
    failures: list[str] = []
    cache: dict[tuple[int, int], tuple[int, ...]] = {}

    def weights(pair) -> tuple[int, ...]:
        pair = tuple(pair)
        if pair not in cache:
            cache[pair] = weight_sequence(ps, pair[0], pair[1]).weights
        return cache[pair]

    ints = _int_coords([cp.point for cp in ps.points])
    for claim in out.claims:
        kind, params = claim.kind, claim.params
        if kind == "halving-pair":
            p, q = params["pair"]
            left = sum(
                1
                for x in range(n)
                if x != p and x != q and _orient_int(ints[p], ints[q], ints[x]) > 0
            )
            if 2 * left != n - 2:
                failures.append(f"{claim.description}: sides {left}/{n - 2 - left}")
        elif kind == "weights-within":
            w = weights(params["pair"])
            if not all(params["lo"] <= v <= params["hi"] for v in w):
                failures.append(f"{claim.description}: range [{min(w)}, {max(w)}]")
        elif kind == "endpoint-weights":
            w = weights(params["pair"])
            if {w[0], w[-1]} != {params["a"], params["b"]}:
                failures.append(f"{claim.description}: ends {{{w[0]}, {w[-1]}}}")
        elif kind == "repeated-values":
            w = weights(params["pair"])
            for value in range(params["lo"], params["hi"] + 1):
                mult = sum(1 for v in w if v == value)
                if mult < params["times"]:
                    failures.append(f"{claim.description}: value {value} occurs {mult}x")
                    break
        elif kind == "pair-min-below":
            w = weights(params["pair"])
            if min(w) > params["bound"]:
                failures.append(f"{claim.description}: min weight {min(w)}")
        elif kind == "convex-position":
            if len(convex_hull([cp.point for cp in ps.points])) != n:
                failures.append(f"{claim.description}: hull misses points")
        else:
            failures.append(f"unknown claim kind {kind!r}")
    return failures


def random_general_position(n: int, seed: int, coord_range: int) -> PointSet:
    """n integer points in [0, range]^2, resampled until general position.

    Deterministic for fixed (n, seed, range).  The range floor keeps
    degeneracies rare enough that whole-set resampling terminates fast.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if coord_range < 4 * n * n:
        raise ValueError(f"range must be at least 4*n^2 = {4 * n * n}")
    rng = Rng(seed)
    for _ in range(200):
        seen: set[tuple[int, int]] = set()
        coords: list[tuple[int, int]] = []
        while len(coords) < n:
            pt = (rng.below(coord_range + 1), rng.below(coord_range + 1))
            if pt not in seen:
                seen.add(pt)
                coords.append(pt)
        ps = PointSet.from_coords(coords)
        if not validate_general_position(ps):
            return ps
    raise ConstructionError(
        f"random_general_position: no general-position sample for n={n}, "
        f"range={coord_range}; the range is too small"
    )


def random_convex(n: int, seed: int) -> PointSet:
    """n points in convex position, general position certified.

    Jittered angles on a large circle with small radial jitter: the jitter
    breaks cocircularity but stays far below the sagitta of adjacent chords,
    so convexity survives rounding.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = Rng(seed)
    radius = 10**8
    for _ in range(200):
        coords = []
        for i in range(n):
            theta = 2 * math.pi * (i + 0.1 + 0.8 * rng.below(10**6) / 10**6) / n
            r = radius + rng.below(2000)
            coords.append((round(r * math.cos(theta)), round(r * math.sin(theta))))
        ps = PointSet.from_coords(coords)
        if validate_general_position(ps):
            continue
        if len(convex_hull([cp.point for cp in ps.points])) == n:
            return ps
    raise ConstructionError(f"random_convex: failed to realize n={n}")


def _two_colored_layout(
    n: int, slants: tuple[int, int, int, int], magnitude: int, seed: int
) -> PointSet | None:
    """One candidate layout for two_colored_convex; None if degenerate."""
    radius = 10**12
    arc = 0.001
    jitter = 100
    rng = Rng(77001 + 131 * n + seed)
    sizes = [(n + 1) // 2, (n + 1) // 2, n // 2, n // 2]
    colors = [Color.RED, Color.BLUE, Color.RED, Color.BLUE]
    coords, cols = [], []
    for ci, (size, col) in enumerate(zip(sizes, colors)):
        base = math.pi / 4 + ci * math.pi / 2
        for k in range(size):
            theta = base + (k - (size - 1) / 2) / max(size, 1) * arc
            r = radius + magnitude * slants[ci] * (k - (size - 1) / 2)
            r += rng.below(2 * jitter + 1) - jitter
            coords.append((round(r * math.cos(theta)), round(r * math.sin(theta))))
            cols.append(col)
    ps = PointSet.from_coords(coords, cols)
    if validate_general_position(ps):
        return None
    if len(convex_hull([cp.point for cp in ps.points])) != len(ps):
        return None
    return ps


# Radial slant-sign patterns per cluster, tried in order.  Which pattern puts
# every red-blue pair's cluster transitions on the favourable side of the far
# clusters' events depends on n's parity and the cluster sizes, so the
# generator searches this fixed list and returns the first layout whose
# claims verify exactly.
_TWO_COLOR_PATTERNS = [
    (1, -1, 1, -1),
    (-1, 1, -1, 1),
    (1, 1, -1, -1),
    (1, -1, -1, 1),
    (0, 0, 0, 0),
    (1, 1, 1, 1),
    (-1, -1, -1, -1),
]


def two_colored_convex(n: int) -> ConstructionOutput:
    """2n points (n red, n blue) in convex position, four alternating clusters.

    Clusters of floor(n/2) or ceil(n/2) points sit on tiny arcs of a common
    circle at 45, 135, 225 and 315 degrees, colored R, B, R, B around the
    circle.  The attached claim: every red-blue pair admits a circle through
    it enclosing at most floor(n/2) points.  Cluster radial slants control
    the order of bisector events; the generator scans a fixed pattern list
    and returns the first layout that verifies, so output is deterministic
    in n.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    bound = n // 2
    for pattern in _TWO_COLOR_PATTERNS:
        for magnitude in (10**6, 10**5):
            for seed in range(8):
                ps = _two_colored_layout(n, pattern, magnitude, seed)
                if ps is None:
                    continue
                reds = ps.indices_of(Color.RED)
                blues = ps.indices_of(Color.BLUE)
                out = ConstructionOutput(
                    ps,
                    designated_pairs=[
                        (min(r, b), max(r, b)) for r in reds for b in blues
                    ],
                    claims=[Claim("convex-position", {}, "all 2n points on the hull")]
                    + [
                        Claim(
                            "pair-min-below",
                            {"pair": (min(r, b), max(r, b)), "bound": bound},
                            f"red-blue pair ({min(r, b)}, {max(r, b)}) has a circle "
                            f"enclosing <= {bound} points",
                        )
                        for r in reds
                        for b in blues
                    ],
                )
                if not claim_failures(out):
                    return out
    raise ConstructionError(
        f"two_colored_convex: no layout variant verified for n={n}"
    )


def _seven_region_block(g: int, levels: int, rng: Rng) -> tuple[list[tuple[int, int]], list, list]:
    """Recursive seven-region block, centered on its own triangle.

    Returns (coords, designated_pairs, claims) with pair indices and claim
    params local to the block.  Index layout: p=0, q=1, r=2, then the six
    outer clusters (U_p, U_q, U_r, W_pq, W_qr, W_rp), then the central
    content (innermost: a tight cluster; otherwise the next level's block).

    Cluster sizes are g-1 for each edge cluster, (g+1, g, g) for the vertex
    clusters and g-1 for the innermost central cluster.  This near-equal
    split (rather than exactly g everywhere) makes the weight list along
    each triangle bisector descend to g-1, rise to 2g-2 and dip to g-1
    before the final rise, so every value in [g, 2g-3] is crossed by all
    four monotone legs and repeats at least four times.  With edge clusters
    of exactly g points the interval endpoints are only reached three times.
    """
    scale = 10**6
    if levels > 1:
        inner_coords, inner_pairs, inner_claims = _seven_region_block(g, levels - 1, rng)
        extent = max(max(abs(x), abs(y)) for x, y in inner_coords)
        scale = 1000 * extent
    far = 200 * scale
    crad = max(scale // 500, 4)

    def jit() -> int:
        return rng.int_in(-crad, crad)

    # Vertex jitter kills the exact symmetries a clean layout would carry up
    # the recursion: p, q mirror the inner p', q' (two mirror pairs about one
    # axis are always concyclic) and r, r', r'' would be collinear on it.
    p = (-scale + jit(), jit())
    q = (scale + jit(), jit())
    r = (jit(), round(scale * math.sqrt(3)) + jit())
    cx, cy = 0, round(scale / math.sqrt(3))

    coords = [p, q, r]

    def cluster(center: tuple[float, float], size: int) -> None:
        for _ in range(size):
            coords.append(
                (round(center[0]) + rng.int_in(-crad, crad), round(center[1]) + rng.int_in(-crad, crad))
            )

    # Vertex clusters lie far beyond each vertex, outside the circumcircle by
    # a wide margin, so the triangle's circumcircle encloses only the central
    # region's points.
    for v, size in ((p, g + 1), (q, g), (r, g)):
        dx, dy = v[0] - cx, v[1] - cy
        norm = math.hypot(dx, dy)
        cluster((v[0] + far * dx / norm, v[1] + far * dy / norm), size)
    # Edge clusters sit just beyond their edge, still outside the circumcircle
    # but inside the circle on the edge as diameter: that is what places their
    # bisector events between the central cluster's and the far vertex's, the
    # order the claimed weight list needs.  (Pushing them 100x out like the
    # vertex clusters would put their events first and flatten the dip.)
    base = (0.0, -0.9 * scale)
    for rot in range(3):
        ang = rot * 2 * math.pi / 3
        vx, vy = base[0] - cx, base[1] - cy
        cluster(
            (vx * math.cos(ang) - vy * math.sin(ang) + cx, vx * math.sin(ang) + vy * math.cos(ang) + cy),
            g - 1,
        )

    pairs = [(0, 1), (0, 2), (1, 2)]
    claims: list[Claim] = []
    if levels == 1:
        cluster((cx, cy), g - 1)
        if 2 * g - 3 >= g:
            for a, b in pairs:
                claims.append(
                    Claim(
                        "repeated-values",
                        {"pair": (a, b), "lo": g, "hi": 2 * g - 3, "times": 4},
                        f"innermost triangle pair ({a}, {b}): every weight in "
                        f"[{g}, {2 * g - 3}] repeats >= 4 times",
                    )
                )
    else:
        offset = len(coords)
        for x, y in inner_coords:
            coords.append((x + cx, y + cy))
        for a, b in inner_pairs:
            pairs.append((a + offset, b + offset))
        for claim in inner_claims:
            params = dict(claim.params)
            a, b = params["pair"]
            params["pair"] = (a + offset, b + offset)
            description = claim.description.replace(
                f"({a}, {b})", f"({a + offset}, {b + offset})"
            )
            claims.append(Claim(claim.kind, params, description))
        # Halving pairs: each outer vertex with its inner counterpart.
        for v in range(3):
            pairs.append((v, v + offset))
    return coords, pairs, claims


def recursive_seven_region(group_size: int, levels: int) -> ConstructionOutput:
    """Nested seven-region construction with many repeated segment weights.

    Level structure: a near-equilateral triangle p, q, r whose side lines cut
    the plane into seven regions; six outer clusters occupy the non-central
    regions and the central region holds p, q, r plus either a tight cluster
    (innermost level) or the next level scaled down by 1000x.  Designated
    pairs: every level's triangle pairs, plus vertex-to-inner-vertex pairs
    across consecutive levels.  Claims: level-one (p, q) endpoint weights
    {3g, n-3g-2}, and for the innermost triangle pairs every weight value in
    [g, 2g-3] repeated at least four times.
    """
    g = group_size
    if g < 3:
        raise ValueError("group_size must be at least 3")
    if levels < 1:
        raise ValueError("levels must be at least 1")
    for attempt in range(64):
        rng = Rng(501_000 + 7919 * g + 104729 * levels + attempt)
        coords, pairs, claims = _seven_region_block(g, levels, rng)
        ps = PointSet.from_coords(coords)
        if validate_general_position(ps):
            continue
        n = len(ps)
        claims = list(claims)
        claims.append(
            Claim(
                "endpoint-weights",
                {"pair": (0, 1), "a": 3 * g, "b": n - 3 * g - 2},
                f"level-1 pair (0, 1) unbounded weights are {{{3 * g}, {n - 3 * g - 2}}}",
            )
        )
        out = ConstructionOutput(ps, designated_pairs=pairs, claims=claims)
        if not claim_failures(out):
            return out
    raise ConstructionError(
        f"recursive_seven_region: no verified instance for g={g}, levels={levels}"
    )


def _circle3(a, b, c):
    d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    a2 = a[0] ** 2 + a[1] ** 2
    b2 = b[0] ** 2 + b[1] ** 2
    c2 = c[0] ** 2 + c[1] ** 2
    ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    return (ux, uy), (a[0] - ux) ** 2 + (a[1] - uy) ** 2


def _halving_layout(n: int, eps: float) -> tuple[list[tuple[float, float]], list[tuple[int, int]]]:
    """Float realization of the rotating-lines halving construction.

    Lines l_1..l_n through the midpoint of p1 q1, equally rotated so l_n is
    the perpendicular bisector; each line carries one pair (p_i above l_1,
    q_i below).  Points are placed back-to-front: q_i at the midpoint of the
    admissible interval (inside the circle through p1, q1, p_{i+1}; outside
    the one through the previous two pairs), then p_i as the second
    intersection of the circle through q_{i+1}, p_{i+1}, q_i with l_i.
    """
    p: dict[int, tuple[float, float]] = {1: (-1.0, 0.0)}
    q: dict[int, tuple[float, float]] = {1: (1.0, 0.0)}
    phi = {i: (i - 1) * math.pi / (2 * (n - 1)) for i in range(1, n + 1)}
    p[n] = (0.0, eps)
    center, _ = _circle3(p[1], q[1], p[n])
    q[n] = (0.0, 2 * center[1] - eps)

    def ray_hits(u, center, r2):
        # ray t -> -t*u, t >= 0
        b = u[0] * center[0] + u[1] * center[1]
        disc = b * b - (center[0] ** 2 + center[1] ** 2 - r2)
        if disc < 0:
            return None
        root = math.sqrt(disc)
        return (-b - root, -b + root)

    for i in range(n - 1, 1, -1):
        u = (math.cos(phi[i]), math.sin(phi[i]))
        cen1, r21 = _circle3(p[1], q[1], p[i + 1])
        hits = ray_hits(u, cen1, r21)
        if hits is None or hits[1] <= 0:
            raise ConstructionError(f"halving: ray misses containing circle at i={i}")
        t_lo, t_hi = 0.0, hits[1]
        if i <= n - 2:
            cen2, r22 = _circle3(q[i + 2], p[i + 2], q[i + 1])
            hits2 = ray_hits(u, cen2, r22)
            if hits2 is not None and hits2[1] > t_lo and hits2[0] < t_hi:
                t_lo = max(t_lo, hits2[1])
        if not t_lo < t_hi:
            raise ConstructionError(f"halving: empty admissible interval at i={i}")
        t_mid = (t_lo + t_hi) / 2
        q[i] = (-t_mid * u[0], -t_mid * u[1])
        cen3, r23 = _circle3(q[i + 1], p[i + 1], q[i])
        b3 = u[0] * cen3[0] + u[1] * cen3[1]
        disc = b3 * b3 - (cen3[0] ** 2 + cen3[1] ** 2 - r23)
        if disc < 0:
            raise ConstructionError(f"halving: no second intersection at i={i}")
        root = math.sqrt(disc)
        candidates = (b3 - root, b3 + root)
        t_p = max(candidates)
        if t_p <= 0:
            raise ConstructionError(f"halving: p_{i} not above the base line")
        p[i] = (t_p * u[0], t_p * u[1])

    coords: list[tuple[float, float]] = []
    pairs: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        pairs.append((len(coords), len(coords) + 1))
        coords.append(p[i])
        coords.append(q[i])
    return coords, pairs


def halving_line_construction(n: int) -> ConstructionOutput:
    """2n points where every designated pair is a halving pair of depth ~n.

    Attached claims, verified exactly after snapping: each designated pair
    splits the remaining 2n-2 points evenly, its unbounded weights are both
    n-1, and every weight along its bisector lies in {n-2, n-1, n}.
    Successive attempts perturb the initial spacing parameter; the raw
    layout contains one exactly-cocircular quadruple by construction, which
    snapping almost always (and perturbed retries surely) break.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    last = "no attempt"
    for attempt in range(64):
        eps = (1 + 0.003719 * attempt) / (n * n)
        try:
            coords, pairs = _halving_layout(n, eps)
        except ConstructionError as exc:
            last = str(exc)
            continue
        ps = snap_to_rational(coords, 10**12)
        if validate_general_position(ps):
            last = "general-position violations after snapping"
            continue
        claims = []
        for a, b in pairs:
            claims.append(
                Claim("halving-pair", {"pair": (a, b)}, f"pair ({a}, {b}) is a halving pair")
            )
            claims.append(
                Claim(
                    "endpoint-weights",
                    {"pair": (a, b), "a": n - 1, "b": n - 1},
                    f"pair ({a}, {b}) unbounded weights are both {n - 1}",
                )
            )
            claims.append(
                Claim(
                    "weights-within",
                    {"pair": (a, b), "lo": n - 2, "hi": n},
                    f"pair ({a}, {b}) weights lie in [{n - 2}, {n}]",
                )
            )
        out = ConstructionOutput(ps, designated_pairs=pairs, claims=claims)
        failures = claim_failures(out)
        if not failures:
            return out
        last = "; ".join(failures)
    raise ConstructionError(f"halving_line_construction(n={n}): {last}")
