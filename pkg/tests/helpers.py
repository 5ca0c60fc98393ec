"""Independent reference computations shared by the test modules."""
import itertools
import math

import numpy as np

from specmeasure.symbol import TWO_PI, FourierSymbol, KDomain, PhiFunction


def random_complex(rng, n, scale=1.0):
    return scale * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))


def random_hermitian(rng, n, scale=1.0):
    X = random_complex(rng, n, scale)
    return 0.5 * (X + X.conj().T)


def hermitian_2x2_eigs(H):
    a, d, b = H[0, 0].real, H[1, 1].real, H[0, 1]
    m, r = 0.5 * (a + d), math.hypot(0.5 * (a - d), abs(b))
    return np.array([m - r, m + r])


def hermitian_3x3_eigs(H):
    """Trigonometric solution of the characteristic cubic."""
    q = np.trace(H).real / 3.0
    p1 = abs(H[0, 1]) ** 2 + abs(H[0, 2]) ** 2 + abs(H[1, 2]) ** 2
    p2 = sum((H[i, i].real - q) ** 2 for i in range(3)) + 2 * p1
    p = math.sqrt(p2 / 6.0)
    if p == 0:
        return np.array([q, q, q])
    Bm = (H - q * np.eye(3)) / p
    r = np.clip(np.linalg.det(Bm).real / 2.0, -1.0, 1.0)
    phi = math.acos(r) / 3.0
    e1 = q + 2 * p * math.cos(phi)
    e3 = q + 2 * p * math.cos(phi + 2 * math.pi / 3)
    return np.sort([e1, 3 * q - e1 - e3, e3])


def brute_force_circle(points):
    """Smallest circle through a pair (as diameter) or a triple of the points."""
    pts = np.asarray(points, dtype=complex)
    if len(pts) == 1:
        return complex(pts[0]), 0.0
    scale = 1.0 + float(np.max(np.abs(pts)))
    i, j = np.array(list(itertools.combinations(range(len(pts)), 2))).T
    centers = [0.5 * (pts[i] + pts[j])]
    radii = [0.5 * np.abs(pts[i] - pts[j])]
    if len(pts) >= 3:
        i, j, k = np.array(list(itertools.combinations(range(len(pts)), 3))).T
        a, b, c = pts[i], pts[j], pts[k]
        d = 2 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
        ok = np.abs(d) >= 1e-14 * scale ** 2
        a, b, c, d = a[ok], b[ok], c[ok], d[ok]
        ux = (abs(a) ** 2 * (b.imag - c.imag) + abs(b) ** 2 * (c.imag - a.imag) + abs(c) ** 2 * (a.imag - b.imag)) / d
        uy = (abs(a) ** 2 * (c.real - b.real) + abs(b) ** 2 * (a.real - c.real) + abs(c) ** 2 * (b.real - a.real)) / d
        u = ux + 1j * uy
        centers.append(u)
        radii.append(np.abs(a - u))
    centers, radii = np.concatenate(centers), np.concatenate(radii)
    covers = np.all(np.abs(pts[None, :] - centers[:, None]) <= radii[:, None] + 1e-10 * scale, axis=1)
    best = np.flatnonzero(covers)[np.argmin(radii[covers])]
    return complex(centers[best]), float(radii[best])


def brute_force_diameter(points):
    pts = np.asarray(points, dtype=complex)
    return float(np.max(np.abs(pts[:, None] - pts[None, :])))


def random_symbol(rng, max_N=10, max_terms=3, max_d=2, restricted=True, grid=0):
    """Random Fourier symbol with single-exponential terms."""
    N = int(rng.integers(1, max_N + 1))
    d = int(rng.integers(1, max_d + 1))
    ivs = []
    for _ in range(d):
        if restricted and rng.random() < 0.3:
            a = rng.uniform(0, math.pi)
            ivs.append((a, a + rng.uniform(0.1, math.pi)))
        else:
            ivs.append((0.0, TWO_PI))
    terms = []
    for _ in range(int(rng.integers(0, max_terms + 1))):
        freq = rng.integers(-2, 3, size=d)
        if not freq.any():
            freq[0] = 1
        coeff = complex(rng.normal(), rng.normal())
        terms.append((PhiFunction.fourier(freq, coeff), random_complex(rng, N)))
    return FourierSymbol(random_hermitian(rng, N, 2.0), tuple(terms), KDomain(tuple(ivs), grid or (256 if d == 1 else 48)))


def sampled_chord_allowance(radius, span, n):
    """Shortfall of the best sampled chord on an arc longer than a half turn.

    The sample nearest the antipode of any sample is within half a step h, so
    the longest sampled chord is at least 2R cos(h/4) >= 2R - R h^2 / 16.
    """
    if span <= math.pi:
        return 0.0
    h = span / (n - 1)
    return radius * h * h / 16
