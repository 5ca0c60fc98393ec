"""Matrix symbols A(k) = H0 + sum_j (phi_j(k) A_j + conj(phi_j(k)) A_j^*).

The quasimomentum ``k`` lives on a box of intervals inside [0, 2*pi]^d.  An
axis whose interval has length 2*pi is a full torus axis, sampled without its
right endpoint.  Fourier coefficient functions are single exponentials
``c * exp(i n.k)``; anything richer must be split into several terms or
given as raw samples on the grid.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import PlanarSet
from .linalg import as_matrix, hermitian_part

TWO_PI = 2.0 * math.pi
_AXIS_TOL = 1e-12

DEFAULT_GRID = {1: 256, 2: 128}


@dataclass(frozen=True)
class KDomain:
    intervals: tuple[tuple[float, float], ...]
    grid: int = 0

    def __post_init__(self):
        ivs = tuple((float(a), float(b)) for a, b in self.intervals)
        if not ivs:
            raise ValueError("k-domain needs at least one axis")
        for a, b in ivs:
            if a < -_AXIS_TOL or b > TWO_PI + _AXIS_TOL or not (0.0 < b - a <= TWO_PI + _AXIS_TOL):
                raise ValueError(f"axis interval [{a}, {b}] must satisfy 0 <= a < b <= 2*pi")
        object.__setattr__(self, "intervals", ivs)
        L = self.grid or DEFAULT_GRID.get(len(ivs), 32)
        if L < 2:
            raise ValueError("grid resolution must be at least 2")
        object.__setattr__(self, "grid", int(L))

    @classmethod
    def torus(cls, dim: int = 1, grid: int = 0) -> "KDomain":
        return cls(((0.0, TWO_PI),) * dim, grid)

    @property
    def dim(self) -> int:
        return len(self.intervals)

    def is_full(self, axis: int) -> bool:
        a, b = self.intervals[axis]
        return b - a >= TWO_PI - _AXIS_TOL

    @property
    def full_torus(self) -> bool:
        return all(self.is_full(i) for i in range(self.dim))

    def axis_points(self, axis: int, L: int | None = None) -> np.ndarray:
        L = L or self.grid
        a, b = self.intervals[axis]
        return np.linspace(a, b, L, endpoint=not self.is_full(axis))

    def with_grid(self, L: int) -> "KDomain":
        return KDomain(self.intervals, L)


def sample_grid(domain: KDomain, L: int | None = None) -> np.ndarray:
    """Tensor grid of shape ``(L**d, d)``; the last axis varies fastest."""
    axes = [domain.axis_points(i, L) for i in range(domain.dim)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


@dataclass(frozen=True)
class PhiFunction:
    kind: str
    freq: tuple[int, ...] = ()
    coeff: complex = 1.0 + 0j
    values: np.ndarray | None = None

    def __post_init__(self):
        if self.kind == "fourier":
            object.__setattr__(self, "freq", tuple(int(n) for n in self.freq))
            object.__setattr__(self, "coeff", complex(self.coeff))
        elif self.kind == "samples":
            vals = np.asarray(self.values, dtype=complex)
            if not np.all(np.isfinite(vals)):
                raise ValueError("sampled phi has non-finite values")
            object.__setattr__(self, "values", vals)
        else:
            raise ValueError(f"unknown phi kind {self.kind!r}")

    @classmethod
    def fourier(cls, freq, coeff: complex = 1.0) -> "PhiFunction":
        return cls("fourier", freq=tuple(freq), coeff=coeff)

    @classmethod
    def sampled(cls, values) -> "PhiFunction":
        return cls("samples", values=values)

    @property
    def is_constant(self) -> bool:
        if self.kind == "fourier":
            return not any(self.freq) or self.coeff == 0
        return bool(np.all(self.values == self.values.flat[0]))


def _grid_indices(domain: KDomain, ks: np.ndarray, L: int) -> tuple[np.ndarray, ...]:
    idx = []
    for axis in range(domain.dim):
        a, b = domain.intervals[axis]
        full = domain.is_full(axis)
        step = (b - a) / (L if full else L - 1)
        pos = (ks[:, axis] - a) / step
        i = np.rint(pos)
        if np.any(np.abs(pos - i) > 1e-7):
            raise ValueError("sampled phi can only be evaluated on its grid points")
        i = i.astype(int)
        idx.append(i % L if full else i)
    return tuple(idx)


def phi_values(phi: PhiFunction, domain: KDomain, ks: np.ndarray) -> np.ndarray:
    ks = np.atleast_2d(np.asarray(ks, dtype=float))
    if phi.kind == "fourier":
        return phi.coeff * np.exp(1j * (ks @ np.asarray(phi.freq, dtype=float)))
    L = phi.values.shape[0]
    return phi.values[_grid_indices(domain, ks, L)]


def phi_image(phi: PhiFunction, domain: KDomain) -> PlanarSet:
    """The image set phi(K) as a circle, an arc, or a finite sample."""
    if phi.kind == "samples":
        return PlanarSet.from_points(phi.values)
    c = phi.coeff
    if phi.is_constant:
        return PlanarSet.from_points([c])
    span = 0.0
    lo = math.atan2(c.imag, c.real)
    for axis, n in enumerate(phi.freq):
        if n == 0:
            continue
        if domain.is_full(axis):
            return PlanarSet.circle(0j, abs(c))
        a, b = domain.intervals[axis]
        span += abs(n) * (b - a)
        lo += min(n * a, n * b)
    if span >= TWO_PI - _AXIS_TOL:
        return PlanarSet.circle(0j, abs(c))
    return PlanarSet.arc(0j, abs(c), lo, lo + span)


@dataclass(frozen=True)
class FourierSymbol:
    H0: np.ndarray
    terms: tuple[tuple[PhiFunction, np.ndarray], ...] = ()
    domain: KDomain = field(default_factory=KDomain.torus)

    def __post_init__(self):
        H0 = hermitian_part(self.H0)
        N = H0.shape[0]
        terms = []
        for phi, A in self.terms:
            A = as_matrix(A)
            if A.shape != (N, N):
                raise ValueError(f"term matrix has shape {A.shape}, expected {(N, N)}")
            if phi.kind == "fourier" and len(phi.freq) != self.domain.dim:
                raise ValueError(f"frequency {phi.freq} does not match k-dimension {self.domain.dim}")
            if phi.kind == "samples" and phi.values.shape != (phi.values.shape[0],) * self.domain.dim:
                raise ValueError("sampled phi must be a full tensor grid over the k-domain")
            terms.append((phi, A))
        object.__setattr__(self, "H0", H0)
        object.__setattr__(self, "terms", tuple(terms))

    @property
    def N(self) -> int:
        return self.H0.shape[0]

    def _check_k(self, ks: np.ndarray) -> None:
        if ks.shape[1] != self.domain.dim:
            raise ValueError(f"k has dimension {ks.shape[1]}, expected {self.domain.dim}")
        for axis, (a, b) in enumerate(self.domain.intervals):
            if self.domain.is_full(axis):
                continue
            col = ks[:, axis]
            if np.any(col < a - 1e-12) or np.any(col > b + 1e-12):
                raise ValueError(f"k outside the domain interval [{a}, {b}] on axis {axis}")

    def evaluate_many(self, ks) -> np.ndarray:
        """Stack of A(k) for each row of ``ks``; shape ``(n, N, N)``."""
        ks = np.atleast_2d(np.asarray(ks, dtype=float))
        self._check_k(ks)
        out = np.broadcast_to(self.H0, (ks.shape[0], self.N, self.N)).copy()
        for phi, A in self.terms:
            v = phi_values(phi, self.domain, ks)[:, None, None]
            out += v * A + np.conj(v) * A.conj().T
        return out

    def evaluate(self, k) -> np.ndarray:
        return self.evaluate_many(np.reshape(np.asarray(k, dtype=float), (1, -1)))[0]

    def grid(self, L: int | None = None) -> np.ndarray:
        return sample_grid(self.domain, L)

    def fold_constants(self) -> "FourierSymbol":
        """Move terms with constant phi into H0."""
        H0 = self.H0.copy()
        kept = []
        for phi, A in self.terms:
            if phi.is_constant:
                c = phi.coeff if phi.kind == "fourier" else complex(phi.values.flat[0])
                H0 = H0 + c * A + np.conj(c) * A.conj().T
            else:
                kept.append((phi, A))
        return FourierSymbol(H0, tuple(kept), self.domain)


def evaluate(sym: FourierSymbol, k) -> np.ndarray:
    return sym.evaluate(k)
