"""Structured verification reports with deterministic JSON serialization.

Field order is fixed by construction order (dicts preserve insertion order),
rationals serialize as "num/den" strings, and nothing time- or
machine-dependent enters the report, so byte-identical inputs and options
give byte-identical reports.
"""

from __future__ import annotations

import hashlib
import json

from . import __version__
from .geom import Color, PointSet
from .checks import CheckResult
from .depth import (
    all_profiles,
    bichromatic_maximin,
    j_edge_counts,
    kset_counts,
    maximin_pair,
    minimax_pair,
    repeated_weight_stats,
    segment_weight_census,
    triple_counts,
)

SCHEMA_VERSION = 1


def input_digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def check_to_dict(check: CheckResult) -> dict:
    return {
        "name": check.name,
        "claim": check.claim,
        "pass": check.passed,
        "instances": [
            {
                "label": inst.label,
                "lhs": inst.lhs,
                "relation": inst.relation,
                "rhs": inst.rhs,
                "pass": inst.passed,
            }
            for inst in check.instances
        ],
    }


def analysis_report(ps: PointSet, digest: str, jobs: int = 1) -> dict:
    """Full depth analysis: extremal pairs and every count table."""
    ps.require_certified()
    n = len(ps)
    profiles = all_profiles(ps, jobs=jobs)
    reds = ps.indices_of(Color.RED)
    blues = ps.indices_of(Color.BLUE)
    report = {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "circledepth", "version": __version__},
        "input": {
            "digest": digest,
            "points": n,
            "red": len(reds),
            "blue": len(blues),
        },
    }
    extremal: dict = {}
    if n >= 2:
        pair, value = maximin_pair(ps, profiles)
        extremal["maximin"] = {"pair": list(pair), "value": value}
        pair, value = minimax_pair(ps, profiles)
        extremal["minimax"] = {"pair": list(pair), "value": value}
    if reds and blues:
        pair, value = bichromatic_maximin(ps)
        extremal["bichromatic_maximin"] = {"pair": list(pair), "value": value}
    report["extremal"] = extremal
    tables: dict = {}
    if n >= 3:
        tables["triple_counts"] = list(triple_counts(ps).c)
    tables["weight_census"] = list(segment_weight_census(ps, profiles).hist)
    edges = j_edge_counts(ps)
    tables["directed_j"] = list(edges.directed_j)
    tables["undirected_j"] = list(edges.undirected_j)
    tables["ksets"] = list(kset_counts(ps, edges).ksets)
    repeats = repeated_weight_stats(ps, profiles)
    tables["repeat_b"] = list(repeats.b)
    tables["max_collinear"] = list(repeats.max_collinear)
    report["tables"] = tables
    return report


def verification_report(ps: PointSet, digest: str, checks: list[CheckResult]) -> dict:
    reds = ps.indices_of(Color.RED)
    blues = ps.indices_of(Color.BLUE)
    return {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "circledepth", "version": __version__},
        "input": {
            "digest": digest,
            "points": len(ps),
            "red": len(reds),
            "blue": len(blues),
        },
        "pass": all(check.passed for check in checks),
        "checks": [check_to_dict(check) for check in checks],
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"
