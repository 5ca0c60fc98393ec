"""Planar sets in the complex plane: diameters and minimum enclosing circles.

Sets are finite samples, full circles or circular arcs. Circles and arcs use
closed forms; sample sets use a convex hull with rotating calipers for the
diameter and Welzl's randomized incremental algorithm for the enclosing circle.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

TWO_PI = 2.0 * math.pi
_EPS = 1e-14
_SEED = 20240601


class EnclosingCircle(NamedTuple):
    center: complex
    radius: float


@dataclass(frozen=True)
class PlanarSet:
    kind: str
    samples: np.ndarray | None = None
    center: complex = 0j
    radius: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if self.kind == "samples":
            pts = np.asarray(self.samples, dtype=complex).ravel()
            if pts.size == 0:
                raise ValueError("empty planar set")
            if not np.all(np.isfinite(pts)):
                raise ValueError("planar set has non-finite points")
            object.__setattr__(self, "samples", pts)
        elif self.kind == "circle":
            if self.radius < 0:
                raise ValueError("negative radius")
        elif self.kind == "arc":
            span = self.beta - self.alpha
            if self.radius < 0 or not (0.0 < span <= TWO_PI + 1e-12):
                raise ValueError(f"invalid arc: radius={self.radius}, span={span}")
        else:
            raise ValueError(f"unknown planar set kind {self.kind!r}")

    @classmethod
    def from_points(cls, points) -> "PlanarSet":
        return cls("samples", samples=points)

    @classmethod
    def circle(cls, center: complex, radius: float) -> "PlanarSet":
        return cls("circle", center=complex(center), radius=float(radius))

    @classmethod
    def arc(cls, center: complex, radius: float, alpha: float, beta: float) -> "PlanarSet":
        """Arc ``center + radius * exp(i t)`` for ``t`` in ``[alpha, beta]``."""
        return cls("arc", center=complex(center), radius=float(radius),
                   alpha=float(alpha), beta=float(beta))

    @property
    def span(self) -> float:
        return self.beta - self.alpha

    def points(self, n: int = 10_000) -> np.ndarray:
        """Finite sample of the set; arcs include both endpoints."""
        if self.kind == "samples":
            return self.samples
        if self.kind == "circle":
            t = np.linspace(0.0, TWO_PI, n, endpoint=False)
        else:
            t = np.linspace(self.alpha, self.beta, n)
        return self.center + self.radius * np.exp(1j * t)


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull(points) -> list[complex]:
    """Andrew's monotone chain; counter-clockwise, collinear points dropped."""
    pts = sorted(set((float(z.real), float(z.imag)) for z in np.asarray(points, dtype=complex).ravel()))
    pts = [complex(x, y) for x, y in pts]
    if len(pts) <= 2:
        return pts

    lower: list[complex] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[complex] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _hull_diameter(hull: list[complex]) -> float:
    n = len(hull)
    if n == 1:
        return 0.0
    if n == 2:
        return abs(hull[0] - hull[1])
    best = 0.0
    j = 1
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        while abs(_cross(a, b, hull[(j + 1) % n])) > abs(_cross(a, b, hull[j])):
            j = (j + 1) % n
        best = max(best, abs(a - hull[j]), abs(b - hull[j]))
    return best


def diameter(S: PlanarSet) -> float:
    """Supremum of pairwise distances in ``S``."""
    if S.kind == "circle":
        return 2.0 * S.radius
    if S.kind == "arc":
        if S.span >= math.pi:
            return 2.0 * S.radius
        return 2.0 * S.radius * math.sin(0.5 * S.span)
    return _hull_diameter(convex_hull(S.samples))


def _diametral(a: complex, b: complex) -> EnclosingCircle:
    c = 0.5 * (a + b)
    return EnclosingCircle(c, max(abs(a - c), abs(b - c)))


def _circumcircle(a: complex, b: complex, c: complex) -> EnclosingCircle | None:
    # shift to the bounding-box center to limit cancellation
    ox = (min(a.real, b.real, c.real) + max(a.real, b.real, c.real)) / 2
    oy = (min(a.imag, b.imag, c.imag) + max(a.imag, b.imag, c.imag)) / 2
    o = complex(ox, oy)
    a, b, c = a - o, b - o, c - o
    d = 2.0 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
    if d == 0.0:
        return None
    a2, b2, c2 = abs(a) ** 2, abs(b) ** 2, abs(c) ** 2
    x = (a2 * (b.imag - c.imag) + b2 * (c.imag - a.imag) + c2 * (a.imag - b.imag)) / d
    y = (a2 * (c.real - b.real) + b2 * (a.real - c.real) + c2 * (b.real - a.real)) / d
    center = complex(x, y)
    r = max(abs(center - a), abs(center - b), abs(center - c))
    return EnclosingCircle(center + o, r)


def _contains(circ: EnclosingCircle | None, p: complex) -> bool:
    return circ is not None and abs(p - circ.center) <= circ.radius * (1.0 + _EPS)


def _circle_two(pts: list[complex], p: complex, q: complex) -> EnclosingCircle:
    circ = _diametral(p, q)
    left = right = None
    for r in pts:
        if _contains(circ, r):
            continue
        cross = _cross(p, q, r)
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        if cross > 0 and (left is None or _cross(p, q, c.center) > _cross(p, q, left.center)):
            left = c
        elif cross < 0 and (right is None or _cross(p, q, c.center) < _cross(p, q, right.center)):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left.radius <= right.radius else right


def _circle_one(pts: list[complex], p: complex) -> EnclosingCircle:
    circ = EnclosingCircle(p, 0.0)
    for i, q in enumerate(pts):
        if not _contains(circ, q):
            if circ.radius == 0.0:
                circ = _diametral(p, q)
            else:
                circ = _circle_two(pts[: i + 1], p, q)
    return circ


def _welzl(points: np.ndarray) -> EnclosingCircle:
    pts = [complex(z) for z in points]
    random.Random(_SEED).shuffle(pts)
    circ = None
    for i, p in enumerate(pts):
        if not _contains(circ, p):
            circ = _circle_one(pts[:i], p)
    # guarantee coverage against the last round of rounding
    radius = max(circ.radius, float(np.max(np.abs(points - circ.center))))
    return EnclosingCircle(circ.center, radius)


def min_enclosing_circle(S: PlanarSet) -> EnclosingCircle:
    """Smallest closed disk containing ``S``."""
    if S.kind == "circle":
        return EnclosingCircle(S.center, S.radius)
    if S.kind == "arc":
        if S.span >= math.pi:
            return EnclosingCircle(S.center, S.radius)
        ends = S.center + S.radius * np.exp(1j * np.array([S.alpha, S.beta]))
        return EnclosingCircle(complex(ends.mean()), S.radius * math.sin(0.5 * S.span))
    if S.samples.size == 1:
        return EnclosingCircle(complex(S.samples[0]), 0.0)
    return _welzl(S.samples)
