"""Brute-force reference implementations used to cross-check the fast paths.

Everything here enumerates rather than counts cleverly, so these functions
are only meant for small n.  They deliberately avoid the machinery they
verify: k-sets come from explicit separating-line tests instead of j-edge
tables, and the bichromatic depth comes from the sampling oracle instead of
the sweep.
"""

from __future__ import annotations

from itertools import combinations

from .geom import PointSet, _int_coords, _orient_int
from .depth import bichromatic_pairs, oracle_weights


def separable(ps: PointSet, subset: frozenset[int]) -> bool:
    """Can ``subset`` be cut off from the rest by a straight line?

    For sets in general position two disjoint hulls admit a separating line
    through two of the points (rotate a separator until it touches one point
    on each side, or two on one side).  So it suffices to scan all ordered
    point pairs (u, v) and test whether everything in the subset other than
    u, v lies strictly left of u->v while the complement lies strictly right.
    """
    n = len(ps)
    if not subset or len(subset) == n:
        return False
    if n == 1:
        return False
    ints = _int_coords([cp.point for cp in ps.points])
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            ok = True
            for x in range(n):
                if x == u or x == v:
                    continue
                side = _orient_int(ints[u], ints[v], ints[x])
                if (x in subset and side <= 0) or (x not in subset and side >= 0):
                    ok = False
                    break
            if ok:
                return True
    return False


def kset_counts_bruteforce(ps: PointSet) -> list[int]:
    """ksets[k] for k = 1..n-1 by enumerating all subsets (index 0 unused)."""
    ps.require_certified()
    n = len(ps)
    counts = [0] * n
    indices = range(n)
    for k in range(1, n):
        for combo in combinations(indices, k):
            if separable(ps, frozenset(combo)):
                counts[k] += 1
    return counts


def bichromatic_maximin_bruteforce(ps: PointSet) -> tuple[tuple[int, int], int]:
    """Maximin over red-blue pairs computed from sampled circles only."""
    ps.require_certified()
    best_pair = None
    best = -1
    for p, q in bichromatic_pairs(ps):
        value = min(oracle_weights(ps, p, q))
        if value > best:
            best = value
            best_pair = (p, q)
    return best_pair, best
