"""Orthogonal polynomials on the unit circle for finitely supported measures.

A probability measure supported at m distinct points of the circle is in
bijection with its recurrence coefficients alpha_0..alpha_{m-1}: the interior
ones lie in the open unit disk and the last is unimodular.  The monic
orthogonal polynomials obey the coupled recurrence

    Phi_{k+1}(z)  = z Phi_k(z)  - conj(alpha_k) Phi*_k(z)
    Phi*_{k+1}(z) = Phi*_k(z)   - alpha_k z Phi_k(z)

with Phi_0 = Phi*_0 = 1, where Phi*_k(z) = z^k conj(Phi_k(1/conj(z))) is the
reversed polynomial, and ||Phi_k|| = prod_{l<k} rho_l with
rho_l = sqrt(1 - |alpha_l|^2).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DegeneracyWarning, DegenerateMeasureError

__all__ = [
    "VerblunskySeq",
    "MonicPolynomial",
    "SpectralMeasureCircle",
    "szego_evaluate",
    "monic_coeffs",
    "phi_norm",
    "measure_to_verblunsky",
    "toeplitz_det",
    "phi2n_at_pm1",
    "reverse_coefficients",
]

UNIT_TOL = 1e-12
GAP_TOL = 1e-10
_NEAR_DEGENERATE = 1e-10


@dataclass(frozen=True)
class VerblunskySeq:
    """Finite Verblunsky sequence alpha_0..alpha_{m-1}.

    Interior coefficients must lie strictly inside the unit disk; the final
    one must be unimodular to within 1e-12.  The auxiliary conventions
    alpha_{-1} = -1 and alpha_{-2} = 0 used by downstream recurrences are
    fixed here once and for all.
    """

    alphas: np.ndarray

    def __post_init__(self):
        a = np.atleast_1d(np.asarray(self.alphas, dtype=complex))
        if a.ndim != 1 or a.size < 1:
            raise ValueError("alphas must be a nonempty 1-d sequence")
        mod = np.abs(a)
        if a.size > 1 and np.any(mod[:-1] >= 1.0):
            raise DegenerateMeasureError("interior Verblunsky coefficients must satisfy |alpha| < 1")
        if a.size > 1 and np.any(mod[:-1] > 1.0 - _NEAR_DEGENERATE):
            warnings.warn(
                "interior |alpha| within 1e-10 of the unit circle; "
                "support points are nearly coincident",
                DegeneracyWarning,
                stacklevel=2,
            )
        if abs(mod[-1] - 1.0) > UNIT_TOL:
            raise ValueError(f"final coefficient must be unimodular, |alpha_m1| = {mod[-1]!r}")
        a.setflags(write=False)
        object.__setattr__(self, "alphas", a)

    def __len__(self) -> int:
        return self.alphas.size

    @property
    def rhos(self) -> np.ndarray:
        """rho_k = sqrt(1 - |alpha_k|^2); the last entry is ~0."""
        return np.sqrt(np.maximum(0.0, 1.0 - np.abs(self.alphas) ** 2))

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.alphas.imag == 0.0))

    def real_alphas(self, tol: float = 1e-12) -> np.ndarray:
        """Real coefficient array; raises if any imaginary part exceeds tol."""
        if np.max(np.abs(self.alphas.imag), initial=0.0) > tol:
            raise ValueError("sequence is not real")
        return self.alphas.real.copy()


@dataclass(frozen=True)
class MonicPolynomial:
    """Polynomial c_0 + c_1 z + ... + z^k stored by ascending coefficients."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs))
        if c.ndim != 1 or c.size < 1:
            raise ValueError("coeffs must be a nonempty 1-d sequence")
        if c[-1] != 1:
            raise ValueError("leading coefficient must be exactly 1")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        z = np.asarray(z)
        out = np.zeros(z.shape, dtype=np.result_type(self.coeffs.dtype, z.dtype, float))
        for c in self.coeffs[::-1]:
            out = out * z + c
        return out


def _check_circle_gaps(thetas_sorted: np.ndarray) -> float:
    gaps = np.diff(thetas_sorted)
    wrap = 2.0 * np.pi - (thetas_sorted[-1] - thetas_sorted[0])
    return float(min(gaps.min(initial=np.inf), wrap)) if thetas_sorted.size > 1 else 2.0 * np.pi


@dataclass(frozen=True)
class SpectralMeasureCircle:
    """Probability measure sum mu_j delta(theta_j) on the unit circle.

    Angles are normalized to [0, 2pi), sorted ascending, and must be
    pairwise distinct (minimum circular gap > 1e-10); weights must be
    positive and sum to 1 within 1e-12.
    """

    thetas: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        th = np.atleast_1d(np.asarray(self.thetas, dtype=float)) % (2.0 * np.pi)
        w = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if th.shape != w.shape or th.ndim != 1 or th.size < 1:
            raise ValueError("thetas and weights must be 1-d of equal nonzero length")
        if np.any(w <= 0):
            raise DegenerateMeasureError("all weights must be positive")
        if abs(w.sum() - 1.0) > UNIT_TOL:
            raise ValueError(f"weights must sum to 1, got {w.sum()!r}")
        order = np.argsort(th)
        th, w = th[order], w[order]
        if _check_circle_gaps(th) <= GAP_TOL:
            raise DegenerateMeasureError("support points coincide (circular gap <= 1e-10)")
        th.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "thetas", th)
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return self.thetas.size

    @property
    def points(self) -> np.ndarray:
        """Support points e^{i theta_j}."""
        return np.exp(1j * self.thetas)


def szego_evaluate(v: VerblunskySeq, z: complex, k: int):
    """(Phi_k(z), Phi*_k(z)) by forward joint iteration of the recurrence."""
    if not 0 <= k <= len(v):
        raise ValueError(f"k must lie in [0, {len(v)}], got {k}")
    z = np.asarray(z, dtype=complex)
    phi = np.ones(z.shape, dtype=complex)
    phis = np.ones(z.shape, dtype=complex)
    for a in v.alphas[:k]:
        phi, phis = z * phi - np.conj(a) * phis, phis - a * z * phi
    if z.ndim == 0:
        return complex(phi), complex(phis)
    return phi, phis


def monic_coeffs(v: VerblunskySeq, k: int) -> MonicPolynomial:
    """Coefficient vector of Phi_k, via the recurrence in coefficient space."""
    if not 0 <= k <= len(v):
        raise ValueError(f"k must lie in [0, {len(v)}], got {k}")
    phi = np.array([1.0 + 0.0j])
    phis = np.array([1.0 + 0.0j])
    for a in v.alphas[:k]:
        zphi = np.concatenate([[0.0], phi])
        pad = np.concatenate([phis, [0.0]])
        phi, phis = zphi - np.conj(a) * pad, pad - a * zphi
    return MonicPolynomial(phi)


def phi_norm(v: VerblunskySeq, k: int) -> float:
    """||Phi_k|| = prod_{l<k} sqrt(1 - |alpha_l|^2)."""
    if not 0 <= k <= len(v) - 1:
        raise ValueError(f"k must lie in [0, {len(v) - 1}], got {k}")
    return float(np.prod(v.rhos[:k], initial=1.0))


def measure_to_verblunsky(m: SpectralMeasureCircle) -> VerblunskySeq:
    """Verblunsky coefficients of a finitely supported measure.

    Gram-Schmidt in disguise: the polynomial values are maintained only on
    the support points, where the discrete inner product is exact, and each
    coefficient is read off as

        conj(alpha_k) = <Phi*_k, z Phi_k>_mu / ||Phi_k||^2_mu .

    O(n^2) work; better conditioned than moment-based recursions.
    """
    z = m.points
    w = m.weights
    n = len(m)
    phi = np.ones(n, dtype=complex)
    phis = np.ones(n, dtype=complex)
    alphas = np.empty(n, dtype=complex)
    for k in range(n):
        den = float(np.sum(w * np.abs(phi) ** 2))
        if not np.isfinite(den) or den <= 0.0:
            raise DegenerateMeasureError(f"vanishing norm at step {k}; measure is degenerate")
        abar = complex(np.sum(w * np.conj(phis) * z * phi) / den)
        alphas[k] = np.conj(abar)
        phi, phis = z * phi - abar * phis, phis - alphas[k] * z * phi
    return VerblunskySeq(alphas)


def toeplitz_det(m: SpectralMeasureCircle):
    """Both closed forms of the Toeplitz determinant of the measure.

    Returns ``(lhs, rhs)`` with
    lhs = |Delta(e^{i theta})|^2 prod mu_j and
    rhs = prod_{k<=n-2} (1 - |alpha_k|^2)^{n-k-1},
    each accumulated in log space (the Vandermonde underflows for n ~ 30).
    """
    th = m.thetas
    n = len(m)
    if n >= 2:
        diff = th[:, None] - th[None, :]
        iu = np.triu_indices(n, k=1)
        log_vdm2 = 2.0 * np.sum(np.log(np.abs(2.0 * np.sin(diff[iu] / 2.0))))
    else:
        log_vdm2 = 0.0
    log_lhs = log_vdm2 + float(np.sum(np.log(m.weights)))
    v = measure_to_verblunsky(m)
    powers = np.arange(n - 1, 0, -1)
    log_rhs = float(np.sum(powers * np.log1p(-np.abs(v.alphas[: n - 1]) ** 2)))
    return float(np.exp(log_lhs)), float(np.exp(log_rhs))


def phi2n_at_pm1(v: VerblunskySeq):
    """(Phi_2n(1), Phi_2n(-1)) for a real sequence of even length with alpha_{2n-1} = -1.

    Closed products: Phi_2n(1) = 2 prod_{k<=2n-2} (1 - alpha_k) and
    Phi_2n(-1) = 2 prod_{k<=2n-2} (1 + (-1)^k alpha_k).
    """
    a = v.real_alphas()
    m = a.size
    if m % 2 != 0 or m < 2:
        raise ValueError("sequence must have even length 2n")
    if abs(a[-1] + 1.0) > 1e-9:
        raise ValueError("final coefficient must be -1")
    inner = a[:-1]
    signs = np.where(np.arange(inner.size) % 2 == 0, 1.0, -1.0)
    at_plus1 = 2.0 * float(np.prod(1.0 - inner))
    at_minus1 = 2.0 * float(np.prod(1.0 + signs * inner))
    return at_plus1, at_minus1


def reverse_coefficients(v: VerblunskySeq) -> VerblunskySeq:
    """Coefficient reversal preserving the degree-m monic polynomial.

    With alpha_{m-1} = e^{i phi}, returns the sequence
    tilde_alpha_k = -e^{i phi} conj(alpha_{m-2-k}) for k <= m-2 and
    tilde_alpha_{m-1} = e^{i phi}.  Involutive, and for real sequences with
    phi = pi it is the plain order reversal of the interior coefficients.
    """
    a = v.alphas
    last = a[-1]
    out = np.empty_like(a)
    out[-1] = last
    if a.size > 1:
        out[:-1] = -last * np.conj(a[-2::-1])
    return VerblunskySeq(out)
