"""Sparse (five-diagonal) and dense unitary operator models for circle measures.

``build_cmv`` assembles the block factors L = diag(Xi_0, Xi_2, ...) and
M = diag(Xi_-1, Xi_1, ...) from 2x2 blocks

    Xi_k = [[conj(alpha_k), rho_k], [rho_k, -alpha_k]],

with Xi_-1 = [1] and a final 1x1 block equal to conj(alpha_{m-1}).  The
product LM is unitary and five-diagonal and represents multiplication by z
in an alternating-Laurent orthonormal basis; its spectral measure with
respect to e_1 has Verblunsky coefficients exactly alpha_0..alpha_{m-1}.

``build_hessenberg`` is the dense alternative (multiplication by z in the
orthonormal-polynomial basis) and ``householder_reduce`` inverts it: any
unitary matrix is conjugated to Hessenberg form with positive subdiagonal,
off which the coefficients of the spectral measure for (U, e_1) are read.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrumError
from .opuc import SpectralMeasureCircle, VerblunskySeq

__all__ = [
    "CMVOperator",
    "HessenbergOperator",
    "build_cmv",
    "build_hessenberg",
    "householder_reduce",
    "cmv_spectral",
    "cmv_det_check",
    "matrix_to_json_dict",
]

UNIMODULAR_TOL = 1e-10
_CLUSTER_GAP = 1e-8
_PIVOT_TOL = 1e-14


@dataclass(frozen=True)
class CMVOperator:
    """Factored five-diagonal model: L and M block-diagonal unitaries."""

    v: VerblunskySeq
    L: np.ndarray
    M: np.ndarray

    @property
    def lm(self) -> np.ndarray:
        return self.L @ self.M

    @property
    def ml(self) -> np.ndarray:
        return self.M @ self.L


@dataclass(frozen=True)
class HessenbergOperator:
    """Dense unitary Hessenberg model with strictly positive subdiagonal."""

    H: np.ndarray


def _lm_factors_stack(alphas: np.ndarray):
    """L, M stacks of shape (..., m, m) for an alpha array of shape (..., m).

    Vectorized over all leading axes; entries outside the block pattern are
    exact zeros, so LM is five-diagonal by construction.
    """
    alphas = np.asarray(alphas, dtype=complex)
    m = alphas.shape[-1]
    lead = alphas.shape[:-1]
    rho = np.sqrt(np.maximum(0.0, 1.0 - np.abs(alphas) ** 2))
    L = np.zeros(lead + (m, m), dtype=complex)
    M = np.zeros(lead + (m, m), dtype=complex)
    M[..., 0, 0] = 1.0
    for k in range(m):
        target = L if k % 2 == 0 else M
        if k <= m - 2:
            target[..., k, k] = np.conj(alphas[..., k])
            target[..., k, k + 1] = rho[..., k]
            target[..., k + 1, k] = rho[..., k]
            target[..., k + 1, k + 1] = -alphas[..., k]
        else:
            target[..., m - 1, m - 1] = np.conj(alphas[..., m - 1])
    return L, M


def build_cmv(v: VerblunskySeq) -> CMVOperator:
    """Materialize the L, M factors for one coefficient sequence."""
    L, M = _lm_factors_stack(v.alphas)
    return CMVOperator(v, L, M)


def build_hessenberg(v: VerblunskySeq) -> HessenbergOperator:
    """Dense Hessenberg model with entries in terms of the coefficients.

    H[i, j] = -alpha_{i-1} conj(alpha_j) prod_{l=i..j-1} rho_l for i <= j
    (with alpha_{-1} = -1), rho_j on the subdiagonal, zero below.
    """
    a = v.alphas
    n = a.size
    rho = v.rhos
    ext = np.concatenate([[-1.0 + 0.0j], a])  # ext[i] = alpha_{i-1}
    H = np.zeros((n, n), dtype=complex)
    for j in range(n):
        tail = np.conj(a[j]) * np.concatenate([np.cumprod(rho[:j][::-1])[::-1], [1.0]])
        H[: j + 1, j] = -ext[: j + 1] * tail
        if j + 1 < n:
            H[j + 1, j] = rho[j]
    return HessenbergOperator(H)


def householder_reduce(U: np.ndarray, realform: bool = False, unitary_tol: float = 1e-8) -> VerblunskySeq:
    """Verblunsky coefficients of the spectral measure for (U, e_1).

    Iteratively conjugates U to Hessenberg form: column k is cleared below
    the subdiagonal by the reflection through v = [0,..,0, alpha, a_{k+2,k},
    .., a_{n,k}] with alpha = a_{k+1,k} - phase(a_{k+1,k}) * ||tail||, then a
    diagonal phase rotation makes the subdiagonal entry positive.  With
    ``realform`` the pivot alpha = a_{k+1,k} - ||tail|| keeps everything real
    and the phase step degenerates to an occasional sign flip.  e_1 is fixed
    by every conjugation, so the measure is preserved.

    When a pivot column vanishes the spectral measure has fewer than n
    support points and a DegenerateSpectrumError is raised.
    """
    A = np.array(U, dtype=float if realform else complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("U must be a square matrix")
    n = A.shape[0]
    err = np.max(np.abs(A @ A.conj().T - np.eye(n)))
    if err > unitary_tol:
        raise ValueError(f"input is not unitary to {unitary_tol:g} (defect {err:.3g})")

    for k in range(n - 1):
        if k < n - 2:
            col = A[k + 1 :, k].copy()
            s = np.linalg.norm(col)
            if s < _PIVOT_TOL:
                raise DegenerateSpectrumError(f"pivot column {k} vanishes; support has fewer than n points")
            pivot = col[0]
            if realform:
                col[0] = pivot - s
            else:
                phase = pivot / abs(pivot) if abs(pivot) >= _PIVOT_TOL else 1.0
                col[0] = pivot - phase * s
            vn2 = np.real(np.vdot(col, col))
            if vn2 > 0.0:
                w = np.zeros(n, dtype=A.dtype)
                w[k + 1 :] = col
                A -= (2.0 / vn2) * np.outer(w, np.conj(w) @ A)
                A -= (2.0 / vn2) * np.outer(A @ w, np.conj(w))
        d = A[k + 1, k]
        if abs(d) < _PIVOT_TOL:
            raise DegenerateSpectrumError(f"subdiagonal entry {k} vanishes; support has fewer than n points")
        ph = d / abs(d)
        if ph != 1.0:
            A[k + 1, :] *= np.conj(ph)
            A[:, k + 1] *= ph

    rho = np.abs(np.diag(A, -1)) if n > 1 else np.array([])
    norms = np.concatenate([[1.0], np.cumprod(rho)])  # norms[c] = prod_{l<c} rho_l
    # first row of H is conj(alpha_c) * prod_{l<c} rho_l (the alpha_{-1} = -1
    # convention cancels the leading sign)
    alphas = np.conj(A[0, :].astype(complex) / norms)
    alphas[-1] /= abs(alphas[-1])  # unimodular up to the input's unitarity defect
    if realform:
        alphas = alphas.real.astype(complex)
    return VerblunskySeq(alphas)


def _reorthogonalize_clusters(lam: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """Re-orthonormalize eigenvector groups of nearly equal eigenvalues."""
    order = np.argsort(np.angle(lam) % (2.0 * np.pi))
    lam_s = lam[order]
    start = 0
    m = lam.size
    for i in range(1, m + 1):
        boundary = i == m or abs(lam_s[i] - lam_s[i - 1]) >= _CLUSTER_GAP
        if boundary:
            if i - start > 1:
                idx = order[start:i]
                q, _ = np.linalg.qr(vec[:, idx])
                vec[:, idx] = q
            start = i
    return vec


def cmv_spectral(v: VerblunskySeq) -> SpectralMeasureCircle:
    """Eigen-angles and weights of the spectral measure for (LM, e_1).

    Weights are the squared moduli of the first components of the normalized
    eigenvectors, renormalized to sum to 1; eigenvalues are checked to be
    unimodular to 1e-10 and then projected onto the circle so downstream
    angle statistics are exactly unimodular.
    """
    op = build_cmv(v)
    lam, vec = np.linalg.eig(op.lm)
    defect = np.max(np.abs(np.abs(lam) - 1.0))
    if defect > UNIMODULAR_TOL:
        raise ArithmeticError(f"eigenvalues off the unit circle by {defect:.3g}")
    lam = lam / np.abs(lam)
    if len(v) > 1 and np.min(np.abs(np.subtract.outer(lam, lam)[np.triu_indices(len(v), 1)])) < _CLUSTER_GAP:
        vec = _reorthogonalize_clusters(lam, vec.copy())
    thetas = np.angle(lam) % (2.0 * np.pi)
    weights = np.abs(vec[0, :]) ** 2
    weights = weights / weights.sum()
    return SpectralMeasureCircle(thetas, weights)


def cmv_det_check(v: VerblunskySeq):
    """Both determinant evaluations of the CMV matrix.

    Returns ``(prod_eigs, formula)`` where the first is the product of the
    eigenvalues of LM and the second is (-1)^{m-1} conj(alpha_{m-1}), the
    product of det(L) and det(M).
    """
    op = build_cmv(v)
    lam = np.linalg.eigvals(op.lm)
    m = len(v)
    formula = (-1.0) ** (m - 1) * np.conj(v.alphas[-1])
    return complex(np.prod(lam)), complex(formula)


def matrix_to_json_dict(mat: np.ndarray) -> dict:
    """Documented JSON layout for a dense complex matrix.

    Row-major entry list of [re, im] pairs, so the entry at (i, j) is
    ``entries[i * ncols + j]``.
    """
    mat = np.asarray(mat, dtype=complex)
    flat = mat.reshape(-1)
    return {
        "layout": "row-major",
        "shape": [int(mat.shape[0]), int(mat.shape[1])],
        "entries": [[float(x.real), float(x.imag)] for x in flat],
    }
