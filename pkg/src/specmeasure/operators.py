"""Symbols of periodic lattice operators and their finite periodic truncations.

Two families are supported: block Jacobi matrices on Z with period ``p`` and
``m x m`` blocks,

    (J y)_n = a_{n-1}^* y_{n-1} + b_n y_n + a_n y_{n+1},

and the discrete Schrodinger operator on Z^2 with an N x M periodic
potential.  Quasimomenta are taken in [0, 2*pi), so a Bloch phase is
``exp(i k)`` throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, nuclear_norm
from .symbol import FourierSymbol, KDomain, PhiFunction


@dataclass(frozen=True)
class JacobiSpec:
    a: tuple[np.ndarray, ...]
    b: tuple[np.ndarray, ...]

    def __post_init__(self):
        a = tuple(as_matrix(x) for x in self.a)
        b = tuple(as_matrix(x) for x in self.b)
        if not a or len(a) != len(b):
            raise ValueError(f"need equally many a and b blocks, got {len(a)} and {len(b)}")
        m = a[0].shape[0]
        for n, (an, bn) in enumerate(zip(a, b), start=1):
            if an.shape != (m, m) or bn.shape != (m, m):
                raise ValueError(f"block {n} does not have shape {(m, m)}")
            if np.linalg.norm(bn - bn.conj().T) > 1e-12 * max(1.0, np.linalg.norm(bn)):
                raise ValueError(f"b[{n}] is not Hermitian")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", tuple(0.5 * (x + x.conj().T) for x in b))

    @property
    def period(self) -> int:
        return len(self.a)

    @property
    def block_dim(self) -> int:
        return self.a[0].shape[0]

    def rotated(self, shift: int) -> "JacobiSpec":
        """Relabel sites so that ``a[shift]`` becomes the last (corner) block."""
        p = self.period
        order = [(shift + 1 + i) % p for i in range(p)]
        return JacobiSpec(tuple(self.a[i] for i in order), tuple(self.b[i] for i in order))


@dataclass(frozen=True)
class Schrodinger2DSpec:
    q: np.ndarray

    def __post_init__(self):
        q = np.array(self.q, dtype=float)
        if q.ndim != 2 or q.size == 0:
            raise ValueError("potential must be a nonempty N x M array")
        if not np.all(np.isfinite(q)):
            raise ValueError("potential has non-finite entries")
        object.__setattr__(self, "q", q)

    @property
    def N(self) -> int:
        return self.q.shape[0]

    @property
    def M(self) -> int:
        return self.q.shape[1]


def _restricted_domain(restrict, grid: int) -> KDomain:
    if restrict is None:
        return KDomain.torus(1, grid)
    alpha, beta = restrict
    return KDomain(((alpha, beta),), grid)


def jacobi_symbol(spec: JacobiSpec, restrict=None, grid: int = 0) -> FourierSymbol:
    """Bloch symbol of a periodic block Jacobi matrix.

    The constant part is block tridiagonal with ``b_1..b_p`` on the diagonal
    and ``a_1..a_{p-1}`` above it; the single Fourier term ``exp(i k)``
    carries ``a_p`` in the bottom-left block.  For ``p = 1`` the constant part
    is ``b_1`` and the term matrix is ``a_1``.
    """
    p, m = spec.period, spec.block_dim
    N = p * m
    H0 = np.zeros((N, N), dtype=complex)
    for n in range(p):
        blk = slice(n * m, (n + 1) * m)
        H0[blk, blk] += spec.b[n]
        if n < p - 1:
            nxt = slice((n + 1) * m, (n + 2) * m)
            H0[blk, nxt] += spec.a[n]
            H0[nxt, blk] += spec.a[n].conj().T
    corner = np.zeros((N, N), dtype=complex)
    corner[(p - 1) * m:, :m] = spec.a[p - 1]
    return FourierSymbol(H0, ((PhiFunction.fourier((1,)), corner),), _restricted_domain(restrict, grid))


def jacobi_best_shift(spec: JacobiSpec) -> tuple[int, float]:
    """Shift (0-based index n of ``a[n]`` moved to the corner) minimising 4 Tr|a_n|."""
    values = [4.0 * nuclear_norm(an) for an in spec.a]
    best = min(range(len(values)), key=lambda n: (values[n], n))
    return best, values[best]


def jacobi_restricted_bound(spec: JacobiSpec, alpha: float, beta: float) -> float:
    """4 sin((beta - alpha)/2) min_n Tr|a_n| for quasimomenta in [alpha, beta] within [0, pi]."""
    if not (0.0 <= alpha < beta <= math.pi + 1e-12):
        raise ValueError("restriction must satisfy 0 <= alpha < beta <= pi")
    return math.sin(0.5 * (beta - alpha)) * jacobi_best_shift(spec)[1]


def sharpness_spec(m: int) -> JacobiSpec:
    """Period-one example a = I_m, b = diag(4, 8, ..., 4m) whose spectrum is [2, 2 + 4m]."""
    return JacobiSpec((np.eye(m),), (np.diag(4.0 * np.arange(1, m + 1)),))


def schrodinger2d_symbol(spec: Schrodinger2DSpec, grid: int = 0) -> FourierSymbol:
    """Bloch symbol of the 2D discrete Schrodinger operator, an NM x NM matrix.

    Site (n, m) has index ``(m - 1) N + (n - 1)``.  The constant part holds the
    potential, the nearest-neighbour hops inside each column block and the
    identity blocks between consecutive column blocks.  Wrap-around hops
    across the cell boundary form one term per lattice direction.
    """
    N, M = spec.N, spec.M
    H0 = np.zeros((N * M, N * M), dtype=complex)
    for m in range(M):
        off = m * N
        for n in range(N):
            H0[off + n, off + n] += spec.q[n, m]
            if n < N - 1:
                H0[off + n, off + n + 1] += 1.0
                H0[off + n + 1, off + n] += 1.0
        if m < M - 1:
            idx = np.arange(N)
            H0[off + idx, off + N + idx] += 1.0
            H0[off + N + idx, off + idx] += 1.0

    wrap1 = np.zeros_like(H0)
    for m in range(M):
        wrap1[m * N + N - 1, m * N] = 1.0
    wrap2 = np.zeros_like(H0)
    wrap2[(M - 1) * N:, :N] = np.eye(N)
    terms = (
        (PhiFunction.fourier((1, 0)), wrap1),
        (PhiFunction.fourier((0, 1)), wrap2),
    )
    return FourierSymbol(H0, terms, KDomain.torus(2, grid))


def large_spectrum_potential(N: int, M: int, eps: float) -> Schrodinger2DSpec:
    """Potential q[n, m] = m / eps (1-based m), constant along n."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not (M >= N >= 1):
        raise ValueError("need M >= N >= 1")
    col = np.arange(1, M + 1) / eps
    return Schrodinger2DSpec(np.tile(col, (N, 1)))


def _hoppings(sym: FourierSymbol) -> dict[tuple[int, ...], np.ndarray]:
    hops: dict[tuple[int, ...], np.ndarray] = {}
    d = sym.domain.dim

    def add(R, X):
        hops[R] = hops.get(R, 0) + X

    add((0,) * d, sym.H0)
    for phi, A in sym.terms:
        if phi.kind != "fourier":
            raise ValueError("periodic truncation needs Fourier terms")
        R = tuple(phi.freq)
        add(R, phi.coeff * A)
        add(tuple(-n for n in R), np.conj(phi.coeff) * A.conj().T)
    return hops


def finite_periodic_truncation(sym: FourierSymbol, L: int) -> np.ndarray:
    """Operator on L^d unit cells with periodic boundary conditions.

    Block (x, x + R mod L) receives the hopping h(R), where
    A(k) = sum_R h(R) exp(i k.R).  The result is block circulant, so its
    spectrum is the union of the spectra of A(2 pi l / L).
    """
    if not sym.domain.full_torus:
        raise ValueError("periodic truncation requires a full-torus k-domain")
    d = sym.domain.dim
    if d not in (1, 2) or L < 2:
        raise ValueError("need d in (1, 2) and L >= 2")
    N = sym.N
    cells = list(np.ndindex(*(L,) * d))
    index = {c: i for i, c in enumerate(cells)}
    T = np.zeros((len(cells) * N, len(cells) * N), dtype=complex)
    for R, h in _hoppings(sym).items():
        for c in cells:
            target = tuple((ci + ri) % L for ci, ri in zip(c, R))
            i, j = index[c], index[target]
            T[i * N:(i + 1) * N, j * N:(j + 1) * N] += h
    return 0.5 * (T + T.conj().T)

