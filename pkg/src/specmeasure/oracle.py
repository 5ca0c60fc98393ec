"""Brute-force band sampling used to check certified bounds.

Eigenvalues here come from batched LAPACK ``eigvalsh`` on A(k) over a grid,
deliberately independent of the Jacobi solver behind the bounds.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .intervals import gaps_between, union_measure
from .symbol import FourierSymbol

__all__ = [
    "SampledBands",
    "ValidationVerdict",
    "grid_eigenvalues",
    "sample_bands",
    "union_measure",
    "validate_report",
    "validation_grid",
    "band_csv",
]

ENCLOSURE_TOL = 1e-8
MEASURE_TOL = 1e-8
VALIDATION_GRID = {1: 512, 2: 128}
_CHUNK = 4096


def grid_eigenvalues(sym: FourierSymbol, L: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Grid points ``(n, d)`` and ascending eigenvalues ``(n, N)`` of A(k)."""
    ks = sym.grid(L)
    evals = np.empty((ks.shape[0], sym.N))
    for start in range(0, ks.shape[0], _CHUNK):
        stop = start + _CHUNK
        evals[start:stop] = np.linalg.eigvalsh(sym.evaluate_many(ks[start:stop]))
    return ks, evals


@dataclass
class SampledBands:
    grid: int
    dim: int
    eigenvalues: np.ndarray
    edges: np.ndarray
    measure: float
    gaps: list[tuple[float, float]] = field(default_factory=list)

    @property
    def n_bands(self) -> int:
        return self.edges.shape[0]


def sample_bands(sym: FourierSymbol, L: int | None = None) -> SampledBands:
    """Sample every band on the k-grid and measure the union of band ranges.

    Each band is the interval [min_k lambda_n(k), max_k lambda_n(k)]; the
    eigenvalue curves are continuous and the domain is connected, so no
    interior gaps are possible.
    """
    L = L or sym.domain.grid
    if L < 2:
        raise ValueError("grid resolution must be at least 2")
    _, evals = grid_eigenvalues(sym, L)
    edges = np.column_stack([evals.min(axis=0), evals.max(axis=0)])
    return SampledBands(
        grid=L,
        dim=sym.domain.dim,
        eigenvalues=evals,
        edges=edges,
        measure=union_measure(edges),
        gaps=gaps_between(edges),
    )


@dataclass
class ValidationVerdict:
    enclosures_ok: bool
    measure_ok: bool
    gaps_ok: bool
    oracle_measure: float
    ratio: float
    max_enclosure_excess: float
    eigenvalues_in_gaps: int

    @property
    def passed(self) -> bool:
        return self.enclosures_ok and self.measure_ok and self.gaps_ok


def validation_grid(sym: FourierSymbol) -> int:
    """Default oracle grid for validation; sampled phi pins the grid."""
    if any(phi.kind == "samples" for phi, _ in sym.terms):
        return sym.domain.grid
    return VALIDATION_GRID.get(sym.domain.dim, sym.domain.grid)


def validate_report(sym: FourierSymbol, report, L: int | None = None,
                    bands: SampledBands | None = None, tol: float = ENCLOSURE_TOL) -> ValidationVerdict:
    """Check a bound report against sampled eigenvalues of its symbol.

    Sampled band edges can only under-shoot the true ones, so every
    comparison is one-sided in the safe direction.
    """
    if report.B0.shape != (sym.N, sym.N) or len(report.enclosures) != sym.N:
        raise ValueError("report does not belong to this symbol")
    bands = bands or sample_bands(sym, L or validation_grid(sym))
    ev = bands.eigenvalues
    lower = np.array([e.lower for e in report.enclosures])
    upper = np.array([e.upper for e in report.enclosures])
    excess = max(float(np.max(lower - ev)), float(np.max(ev - upper)), 0.0)

    inside = 0
    flat = ev.ravel()
    for g in report.gaps:
        inside += int(np.count_nonzero((flat > g.lower + tol) & (flat < g.upper - tol)))

    ratio = bands.measure / report.sound_total if report.sound_total > 0 else 0.0
    return ValidationVerdict(
        enclosures_ok=excess <= tol,
        measure_ok=bands.measure <= report.refined_total + MEASURE_TOL,
        gaps_ok=inside == 0,
        oracle_measure=bands.measure,
        ratio=ratio,
        max_enclosure_excess=excess,
        eigenvalues_in_gaps=inside,
    )


def band_csv(bands: SampledBands) -> str:
    """Per-grid-point eigenvalues as CSV text, one row per (band, k)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    L, d = bands.grid, bands.dim
    kcols = ["k_index"] if d == 1 else [f"k{i + 1}_index" for i in range(d)]
    w.writerow(["band", *kcols, "eigenvalue"])
    for n in range(bands.n_bands):
        for flat_index, value in enumerate(bands.eigenvalues[:, n]):
            kidx = np.unravel_index(flat_index, (L,) * d)
            w.writerow([n + 1, *(int(i) for i in kidx), repr(float(value))])
    return buf.getvalue()
