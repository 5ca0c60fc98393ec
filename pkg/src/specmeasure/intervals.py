"""Sort-and-merge utilities for finite unions of closed real intervals."""
from __future__ import annotations

import math

MERGE_TOL = 1e-12


def merge_intervals(intervals, tol: float = MERGE_TOL) -> list[tuple[float, float]]:
    """Merge overlapping intervals; pieces separated by less than ``tol`` touch."""
    cleaned = []
    for item in intervals:
        lo, hi = (float(x) for x in item)
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
            raise ValueError(f"malformed interval [{lo}, {hi}]")
        cleaned.append((lo, hi))
    cleaned.sort()

    merged: list[tuple[float, float]] = []
    for lo, hi in cleaned:
        if merged and lo - merged[-1][1] < tol:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return merged


def union_measure(intervals, tol: float = MERGE_TOL) -> float:
    """Lebesgue measure of a finite union of closed intervals."""
    return math.fsum(hi - lo for lo, hi in merge_intervals(intervals, tol))


def gaps_between(intervals, tol: float = MERGE_TOL) -> list[tuple[float, float]]:
    """Open intervals strictly between consecutive merged components."""
    merged = merge_intervals(intervals, tol)
    return [(a[1], b[0]) for a, b in zip(merged, merged[1:])]
