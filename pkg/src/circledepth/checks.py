"""Identity and bound checks over a point set, as structured reports.

Each check returns a :class:`CheckResult` carrying the claim it tested and
one :class:`CheckInstance` per (k, side) evaluation, so a verifier can emit
the full evidence as JSON rather than a bare boolean.  Instances marked
``relation="info"`` are reported but never gate the check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .geom import Color, PointSet
from .depth import (
    BisectorProfile,
    all_profiles,
    bichromatic_directed_j,
    bichromatic_triple_counts,
    bichromatic_weight_census,
    j_edge_counts,
    kset_counts,
    minimax_pair,
    oracle_weights,
    segment_weight_census,
    triple_counts,
)


@dataclass(frozen=True)
class CheckInstance:
    label: str
    lhs: int
    rhs: int
    relation: str  # "==", "<=", ">=", or "info"
    passed: bool


@dataclass(frozen=True)
class CheckResult:
    name: str
    claim: str
    instances: tuple[CheckInstance, ...]
    passed: bool


def _relate(relation: str, lhs: int, rhs: int) -> bool:
    if relation == "==":
        return lhs == rhs
    if relation == "<=":
        return lhs <= rhs
    if relation == ">=":
        return lhs >= rhs
    return True  # "info"


def _result(name: str, claim: str, raw: list[tuple[str, int, int, str]]) -> CheckResult:
    instances = tuple(
        CheckInstance(label, lhs, rhs, rel, _relate(rel, lhs, rhs)) for label, lhs, rhs, rel in raw
    )
    gating = [inst for inst in instances if inst.relation != "info"]
    return CheckResult(name, claim, instances, all(inst.passed for inst in gating))


def check_triple_pair_sum(ps: PointSet, stats=None) -> CheckResult:
    """c[k] + c[n-k-3] == 2(k+1)(n-k-2) for every k (exact, all sets)."""
    ps.require_certified()
    n = len(ps)
    stats = stats or triple_counts(ps)
    rows = []
    for k in range(0, n - 2):
        rows.append(
            (f"k={k}", stats.at(k) + stats.at(n - k - 3), 2 * (k + 1) * (n - k - 2), "==")
        )
    return _result(
        "triple-pair-sum",
        "c[k] + c[n-k-3] == 2(k+1)(n-k-2) for all k",
        rows,
    )


def check_weight_census(ps: PointSet, profiles: list[BisectorProfile] | None = None) -> CheckResult:
    """The exact segment-census law, plus the classical pair-sum as information.

    Counting (event, adjacent segment) incidences proves, for every weight w,

        2 * hist[w] == 3 * (c[w] + c[w-1]) + directed_j[w],

    since each circle's center is an event on three bisectors with adjacent
    segment weights {m, m+1} (m its enclosed count), each bounded segment has
    two endpoint events and each unbounded segment one, and the unbounded
    segments of weight w biject with directed w-edges.  The textbook pair-sum
    hist[k] + hist[n-k-3] == 6(k+1)(n-k-2) counts segments with multiplicity,
    not distinct segments; as a census statement it fails in both directions
    (first counterexample at n = 4), so it is reported here as data only.
    """
    ps.require_certified()
    n = len(ps)
    profiles = profiles or all_profiles(ps)
    census = segment_weight_census(ps, profiles)
    stats = triple_counts(ps)
    edges = j_edge_counts(ps)
    rows: list[tuple[str, int, int, str]] = [
        ("total", sum(census.hist), comb(n, 2) * (n - 1), "==")
    ]
    for w in range(0, n - 1):
        rows.append(
            (
                f"w={w}",
                2 * census.at(w),
                3 * (stats.at(w) + stats.at(w - 1)) + edges.directed_j[w],
                "==",
            )
        )
    for k in range(0, n - 2):
        rows.append(
            (
                f"pair-sum k={k}",
                census.at(k) + census.at(n - k - 3),
                6 * (k + 1) * (n - k - 2),
                "info",
            )
        )
    return _result(
        "weight-census",
        "2*hist[w] == 3*(c[w] + c[w-1]) + directed_j[w] for all w; "
        "pair sums vs 6(k+1)(n-k-2) reported as info",
        rows,
    )


def check_minimax_bound(ps: PointSet, profiles: list[BisectorProfile] | None = None) -> CheckResult:
    """Some pair's circles all enclose at most floor((2n-3)/3) points."""
    ps.require_certified()
    n = len(ps)
    _, value = minimax_pair(ps, profiles)
    return _result(
        "minimax-bound",
        "min over pairs of max enclosed count <= floor((2n-3)/3)",
        [(f"n={n}", value, (2 * n - 3) // 3, "<=")],
    )


def check_enclosure_count_bounds(ps: PointSet, stats=None) -> CheckResult:
    """c[k] >= (k+1)(n-k-2) and c[n-k-3] <= (k+1)(n-k-2) for k < (n-3)/2."""
    ps.require_certified()
    n = len(ps)
    if n < 4:
        raise ValueError("need at least four points")
    stats = stats or triple_counts(ps)
    rows = []
    k = 0
    while k < (n - 3) / 2:
        bound = (k + 1) * (n - k - 2)
        rows.append((f"k={k} lower", stats.at(k), bound, ">="))
        rows.append((f"k={k} upper", stats.at(n - k - 3), bound, "<="))
        k += 1
    return _result(
        "enclosure-count-bounds",
        "c[k] >= (k+1)(n-k-2) and c[n-k-3] <= (k+1)(n-k-2) for k < (n-3)/2",
        rows,
    )


def check_region_count_sum(ps: PointSet, k: int | None = None) -> CheckResult:
    """sum_{i=1..k} f_inf(i-1) == (k-1)(2n-k) - c[k-2] for 1 <= k <= n-1.

    f_inf(i) is the number of unbounded order-i Voronoi regions, which equals
    the number of i-sets; f_inf(0) = 0 and c[-1] = 0 by convention.
    """
    ps.require_certified()
    n = len(ps)
    stats = triple_counts(ps)
    ks = kset_counts(ps)
    if k is not None:
        if not 1 <= k <= n - 1:
            raise ValueError(f"k must be in [1, {n - 1}]")
        k_values = [k]
    else:
        k_values = list(range(1, n))
    rows = []
    for kk in k_values:
        lhs = sum(ks.f_inf(i - 1) for i in range(1, kk + 1))
        rhs = (kk - 1) * (2 * n - kk) - stats.at(kk - 2)
        rows.append((f"k={kk}", lhs, rhs, "=="))
    return _result(
        "region-count-sum",
        "sum_{i=1..k} f_inf(i-1) == (k-1)(2n-k) - c[k-2]",
        rows,
    )


def check_cumulative_kset_bound(ps: PointSet, k: int | None = None) -> CheckResult:
    """sum_{i=1..k} ksets[i] <= k*n for 1 <= k < n/2."""
    ps.require_certified()
    n = len(ps)
    ks = kset_counts(ps)
    if k is not None:
        if not 1 <= k < n / 2:
            raise ValueError(f"k must be in [1, n/2) = [1, {n / 2})")
        k_values = [k]
    else:
        k_values = [kk for kk in range(1, n) if kk < n / 2]
    rows = []
    for kk in k_values:
        rows.append((f"k={kk}", sum(ks.ksets[1 : kk + 1]), kk * n, "<="))
    return _result(
        "cumulative-kset-bound",
        "sum_{i=1..k} ksets[i] <= k*n for k < n/2",
        rows,
    )


def check_bichromatic_census(ps: PointSet) -> CheckResult:
    """The exact red-blue census law, with the classical bound as information.

    The incidence argument of :func:`check_weight_census` specializes: a
    mixed-color circle's center is an event on exactly two red-blue
    bisectors (a single-color circle on none), so with c' the mixed-triple
    enclosure counts and directed_j' the red-blue directed edge counts,

        2 * hist[w] == 2 * (c'[w] + c'[w-1]) + directed_j'[w]

    exactly, for every weight w.  The classical pairing
    hist[k] + hist[N-k-3] <= 4(k+1)(N-k-2) again counts correspondences
    rather than distinct segments and fails on small random inputs (a
    segment may owe both its endpoint events to circles of matching count),
    so it is reported as data only.
    """
    ps.require_certified()
    if not ps.indices_of(Color.RED) or not ps.indices_of(Color.BLUE):
        raise ValueError("need at least one red and one blue point")
    n = len(ps)
    census = bichromatic_weight_census(ps)
    rows: list[tuple[str, int, int, str]] = []
    if n >= 3:
        mixed = bichromatic_triple_counts(ps)
        directed = bichromatic_directed_j(ps)
        for w in range(0, n - 1):
            rows.append(
                (
                    f"w={w}",
                    2 * census.at(w),
                    2 * (mixed.at(w) + mixed.at(w - 1)) + directed[w],
                    "==",
                )
            )
    for k in range(0, n - 2):
        rows.append(
            (
                f"pair-sum k={k}",
                census.at(k) + census.at(n - k - 3),
                4 * (k + 1) * (n - k - 2),
                "info",
            )
        )
    if not rows:
        rows.append(("vacuous", 0, 0, "=="))
    return _result(
        "bichromatic-census",
        "2*hist[w] == 2*(c'[w] + c'[w-1]) + directed_j'[w] over red-blue bisectors; "
        "pair sums vs 4(k+1)(N-k-2) reported as info",
        rows,
    )


def check_profile_invariants(ps: PointSet, profiles: list[BisectorProfile] | None = None) -> CheckResult:
    """Structural facts of every weight sequence.

    Consecutive weights differ by exactly 1; the first and last weights are
    the two side counts {j, n-j-2} of the pair's line; every integer between
    them occurs.  ``lhs`` counts violating pairs, so the expected value is 0.
    """
    ps.require_certified()
    n = len(ps)
    profiles = profiles or all_profiles(ps)
    step_bad = ends_bad = cover_bad = 0
    for profile in profiles:
        w = profile.weights
        if any(abs(a - b) != 1 for a, b in zip(w, w[1:])):
            step_bad += 1
        j = min(w[0], w[-1])
        if {w[0], w[-1]} != {j, n - j - 2}:
            ends_bad += 1
        if set(range(min(w), max(w) + 1)) - set(w):
            cover_bad += 1
    rows = [
        ("unit steps", step_bad, 0, "=="),
        ("end weights {j, n-j-2}", ends_bad, 0, "=="),
        ("full intermediate coverage", cover_bad, 0, "=="),
    ]
    return _result(
        "profile-invariants",
        "every bisector weight sequence steps by +-1, ends at {j, n-j-2}, covers the range",
        rows,
    )


def check_oracle_match(ps: PointSet, profiles: list[BisectorProfile] | None = None) -> CheckResult:
    """Sweep weights equal sampled-circle oracle weights, elementwise, every pair."""
    ps.require_certified()
    profiles = profiles or all_profiles(ps)
    mismatches = 0
    for profile in profiles:
        p, q = profile.pair
        if list(profile.weights) != oracle_weights(ps, p, q):
            mismatches += 1
    return _result(
        "oracle-match",
        "weight_sequence equals oracle_weights elementwise for every pair",
        [("mismatching pairs", mismatches, 0, "==")],
    )


# Registry order is the execution and report order, regardless of how the
# caller spells the selection.
CHECKS = {
    "triple-pair-sum": check_triple_pair_sum,
    "weight-census": check_weight_census,
    "minimax-bound": check_minimax_bound,
    "enclosure-count-bounds": check_enclosure_count_bounds,
    "region-count-sum": check_region_count_sum,
    "cumulative-kset-bound": check_cumulative_kset_bound,
    "bichromatic-census": check_bichromatic_census,
    "profile-invariants": check_profile_invariants,
    "oracle-match": check_oracle_match,
}


def applicable_checks(ps: PointSet) -> list[str]:
    """Check names that make sense for this set's size and coloring."""
    n = len(ps)
    names = []
    for name in CHECKS:
        if name in ("triple-pair-sum", "weight-census", "region-count-sum") and n < 3:
            continue
        if name == "enclosure-count-bounds" and n < 4:
            continue
        if name == "cumulative-kset-bound" and n < 3:
            continue
        if name == "minimax-bound" and n < 2:
            continue
        if name == "bichromatic-census" and (
            not ps.indices_of(Color.RED) or not ps.indices_of(Color.BLUE)
        ):
            continue
        names.append(name)
    return names


def run_checks(ps: PointSet, names: list[str] | None = None) -> list[CheckResult]:
    ps.require_certified()
    selected = applicable_checks(ps) if names is None else list(names)
    unknown = [name for name in selected if name not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)} (known: {', '.join(CHECKS)})")
    ordered = [name for name in CHECKS if name in selected]
    return [CHECKS[name](ps) for name in ordered]
