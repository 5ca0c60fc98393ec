"""Dense Hermitian linear algebra on small complex matrices.

Eigenvalues come from a cyclic complex Jacobi iteration, so every quantity
derived here (matrix absolute values, nuclear norms, Loewner-order checks)
is independent of LAPACK.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

SWEEP_BUDGET = 100
OFFDIAG_RTOL = 1e-14


class NotSquareError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass


class ConvergenceError(ArithmeticError):
    pass


class EigResult(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(H) -> np.ndarray:
    """Return ``H`` as a finite square complex array."""
    H = np.asarray(H, dtype=complex)
    if H.ndim == 0:
        H = H.reshape(1, 1)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {H.shape}")
    if not np.all(np.isfinite(H)):
        raise ValueError("matrix has non-finite entries")
    return H


def frobenius(H) -> float:
    return float(np.sqrt(np.sum(np.abs(H) ** 2)))


def hermitian_part(H, tol: float = 1e-12) -> np.ndarray:
    """Symmetrize ``H`` after checking ``||H - H*||_F <= tol * ||H||_F``."""
    H = as_matrix(H)
    skew = frobenius(H - H.conj().T)
    if skew > tol * frobenius(H):
        raise NotHermitianError(f"matrix is not Hermitian (||H - H*||_F = {skew:.3e})")
    return 0.5 * (H + H.conj().T)


def _offdiag(A: np.ndarray) -> float:
    return frobenius(A - np.diag(np.diag(A)))


def eig_hermitian(H, tol: float = 1e-12) -> EigResult:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Each rotation first removes the phase of the pivot ``A[p, q]`` and then
    applies the classical real rotation that annihilates it.  Sweeps stop once
    the off-diagonal Frobenius mass drops below ``1e-14 * ||H||_F``.

    Returns eigenvalues in ascending order (stable for ties) and the matching
    orthonormal eigenvectors as columns.
    """
    A = hermitian_part(H, tol).copy()
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    target = OFFDIAG_RTOL * frobenius(A)

    for _ in range(SWEEP_BUDGET + 1):
        if _offdiag(A) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                mag = abs(apq)
                app, aqq = A[p, p].real, A[q, q].real
                if mag == 0.0:
                    continue
                # pivot below the rounding level of both diagonal entries
                if abs(app) + 100.0 * mag == abs(app) and abs(aqq) + 100.0 * mag == abs(aqq):
                    A[p, q] = A[q, p] = 0.0
                    continue
                w = np.conj(apq / mag)
                theta = (aqq - app) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                # A <- A G, then A <- G* A, with G = [[c, s], [-s w, c w]]
                colp, colq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * colp - s * w * colq
                A[:, q] = s * colp + c * w * colq
                rowp, rowq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rowp - s * np.conj(w) * rowq
                A[q, :] = s * rowp + c * np.conj(w) * rowq
                A[p, q] = A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real

                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * w * vq
                V[:, q] = s * vp + c * w * vq
    else:
        raise ConvergenceError(f"Jacobi iteration did not converge in {SWEEP_BUDGET} sweeps")

    evals = np.diag(A).real.copy()
    order = np.argsort(evals, kind="stable")
    return EigResult(evals[order], V[:, order])


def eigvalsh(H, tol: float = 1e-12) -> np.ndarray:
    return eig_hermitian(H, tol).eigenvalues


def _psd_sqrt(G: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # G = B*B is PSD in exact arithmetic; negative eigenvalues are noise
    evals, V = eig_hermitian(G)
    roots = np.sqrt(np.clip(evals, 0.0, None))
    return roots, V


def matrix_abs(B) -> np.ndarray:
    """|B| = (B*B)^(1/2), Hermitian positive semidefinite."""
    B = as_matrix(B)
    roots, V = _psd_sqrt(B.conj().T @ B)
    R = (V * roots) @ V.conj().T
    return 0.5 * (R + R.conj().T)


def nuclear_norm(A) -> float:
    """Sum of singular values, Tr|A|."""
    A = as_matrix(A)
    roots, _ = _psd_sqrt(A.conj().T @ A)
    return float(np.sum(roots))


def is_psd(H, tol: float = 1e-9) -> bool:
    """True iff the smallest eigenvalue of the Hermitian ``H`` is >= -tol."""
    evals = eigvalsh(H)
    return bool(evals.size == 0 or evals[0] >= -tol)


def operator_norm(H) -> float:
    evals = eigvalsh(H)
    return float(np.max(np.abs(evals))) if evals.size else 0.0


def lemma1_sandwich_check(B, tol: float = 1e-9) -> bool:
    """Check -(|B| + |B*|) <= B + B* <= |B| + |B*| in the Loewner order."""
    B = as_matrix(B)
    M = matrix_abs(B) + matrix_abs(B.conj().T)
    S = B + B.conj().T
    return is_psd(M - S, tol) and is_psd(M + S, tol)
