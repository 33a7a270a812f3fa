"""From the circle to the interval: pushforwards, Geronimus relations, folding.

A conjugation-symmetric measure on the circle (support in pairs e^{+-i
theta_j}, real Verblunsky coefficients, last one -1) pushes forward to a
measure on [-2, 2] under x = z + 1/z.  The Jacobi operator of the pushed
measure is obtained from the circle coefficients by the Geronimus relations

    b_{k+1} = (1 - alpha_{2k-1}) alpha_{2k} - (1 + alpha_{2k-1}) alpha_{2k-2}
    a_{k+1} = sqrt((1 - alpha_{2k-1}) (1 - alpha_{2k}^2) (1 + alpha_{2k+1}))

with alpha_{-1} = -1 and alpha_{-2} = 0, and can equally be extracted from
the five-diagonal model: S^T (LM + ML) S is the direct sum of two Jacobi
matrices for an explicit orthogonal block rotation S (``split_lm_plus_ml``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .cmv import _lm_factors_stack
from .errors import DegenerateMeasureError
from .opuc import MonicPolynomial, SpectralMeasureCircle, VerblunskySeq

__all__ = [
    "JacobiOperator",
    "SpectralMeasureInterval",
    "push_to_interval",
    "geronimus",
    "geronimus_coeffs",
    "geronimus_complement",
    "jacobi_spectral",
    "split_lm_plus_ml",
    "twisted_coeffs",
    "classical_jacobi",
    "fold_to_interval",
]

PAIR_TOL = 1e-9
RANGE_TOL = 1e-10


@dataclass(frozen=True)
class JacobiOperator:
    """Real symmetric tridiagonal operator: diagonal b_1..b_n, off-diagonal a_1..a_{n-1} > 0."""

    b: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        b = np.atleast_1d(np.asarray(self.b, dtype=float))
        a = np.asarray(self.a, dtype=float).reshape(-1)
        if b.ndim != 1 or b.size < 1 or a.size != b.size - 1:
            raise ValueError("need n diagonal entries and n-1 off-diagonal entries")
        if np.any(a <= 0):
            raise ValueError("off-diagonal entries must be strictly positive")
        b.setflags(write=False)
        a.setflags(write=False)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return self.b.size

    def to_dense(self) -> np.ndarray:
        J = np.diag(self.b)
        if self.n > 1:
            J += np.diag(self.a, 1) + np.diag(self.a, -1)
        return J

    def charpoly(self) -> MonicPolynomial:
        """det(x - J), monic of degree n, via the three-term recurrence."""
        coeffs = _charpoly_coeffs(self.b[None, :], self.a[None, :] ** 2)[0]
        return MonicPolynomial(coeffs)

    def to_json_dict(self) -> dict:
        return {"b": [float(x) for x in self.b], "a": [float(x) for x in self.a]}


@dataclass(frozen=True)
class SpectralMeasureInterval:
    """Probability measure sum mu_j delta(x_j) with x_j in [-2, 2], sorted ascending."""

    xs: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        xs = np.atleast_1d(np.asarray(self.xs, dtype=float))
        w = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if xs.shape != w.shape or xs.ndim != 1 or xs.size < 1:
            raise ValueError("xs and weights must be 1-d of equal nonzero length")
        if np.any(np.abs(xs) > 2.0 + RANGE_TOL):
            raise ValueError("support must lie in [-2, 2]")
        if np.any(w <= 0):
            raise DegenerateMeasureError("all weights must be positive")
        if abs(w.sum() - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {w.sum()!r}")
        order = np.argsort(xs)
        xs, w = xs[order], w[order]
        if xs.size > 1 and np.min(np.diff(xs)) <= RANGE_TOL:
            raise DegenerateMeasureError("support points coincide")
        xs.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return self.xs.size


def symmetric_pairs(m: SpectralMeasureCircle, tol: float = PAIR_TOL):
    """Split a conjugation-symmetric measure into (thetas in (0, pi), pair weights).

    The support must consist of +-theta pairs with equal weights (within
    tol); points at 0 or pi are rejected.  Pair weight is the total mass of
    the pair.
    """
    th, w = m.thetas, m.weights
    if np.any(th <= tol) or np.any(np.abs(th - np.pi) <= tol) or th.size % 2 != 0:
        raise ValueError("measure is not supported on +-theta pairs inside (0, pi)")
    low = th < np.pi
    th_low, w_low = th[low], w[low]
    th_high, w_high = th[~low][::-1], w[~low][::-1]
    if th_low.size != th_high.size:
        raise ValueError("unpaired support points; measure is not conjugation-symmetric")
    if np.max(np.abs(th_low + th_high - 2.0 * np.pi)) > tol:
        raise ValueError("support angles are not mirror-symmetric within tolerance")
    if np.max(np.abs(w_low - w_high)) > tol:
        raise ValueError("pair weights differ beyond tolerance")
    return th_low, w_low + w_high


def push_to_interval(m: SpectralMeasureCircle) -> SpectralMeasureInterval:
    """Pushforward under x = z + 1/z: point 2 cos(theta_j) carries the pair mass."""
    th, w = symmetric_pairs(m)
    return SpectralMeasureInterval(2.0 * np.cos(th), w)


def geronimus_coeffs(alphas: np.ndarray):
    """Vectorized Geronimus relations.

    ``alphas`` has shape (..., 2n) with the final coefficient -1; returns
    (b, a) of shapes (..., n) and (..., n-1).  The unused a_n vanishes
    identically because 1 + alpha_{2n-1} = 0 and is not formed.
    """
    alphas = np.asarray(alphas, dtype=float)
    m = alphas.shape[-1]
    if m % 2 != 0 or m < 2:
        raise ValueError("alphas must have even length 2n")
    lead = alphas.shape[:-1]
    pad = np.concatenate(
        [np.zeros(lead + (1,)), -np.ones(lead + (1,)), alphas], axis=-1
    )  # pad[..., i] = alpha_{i-2}
    odd_prev = pad[..., 1:m:2]  # alpha_{2k-1}, k = 0..n-1
    even_cur = pad[..., 2 : m + 2 : 2]  # alpha_{2k}
    even_prev = pad[..., 0:m:2]  # alpha_{2k-2}
    b = (1.0 - odd_prev) * even_cur - (1.0 + odd_prev) * even_prev
    odd_next = pad[..., 3 : m + 1 : 2]  # alpha_{2k+1}, k = 0..n-2
    a2 = (1.0 - odd_prev[..., :-1]) * (1.0 - even_cur[..., :-1] ** 2) * (1.0 + odd_next)
    return b, np.sqrt(np.maximum(a2, 0.0))


def _require_symmetric_sequence(v: VerblunskySeq) -> np.ndarray:
    a = v.real_alphas()
    if a.size % 2 != 0 or a.size < 2:
        raise ValueError("sequence must have even length 2n")
    if abs(a[-1] + 1.0) > PAIR_TOL:
        raise ValueError("final coefficient must be -1 for a symmetric measure")
    return a


def geronimus(v: VerblunskySeq) -> JacobiOperator:
    """Jacobi operator of the pushed-forward measure of a real sequence."""
    a = _require_symmetric_sequence(v)
    b, off = geronimus_coeffs(a)
    return JacobiOperator(b, off)


def geronimus_complement(v: VerblunskySeq) -> JacobiOperator:
    """Second Jacobi block of the LM + ML splitting, by closed formula.

    tilde_b_{k+1} = (1 - alpha_{2k+1}) alpha_{2k} - (1 + alpha_{2k+1}) alpha_{2k+2},
    tilde_a_{k+1} = sqrt((1 + alpha_{2k+1}) (1 - alpha_{2k+2}^2) (1 - alpha_{2k+3})),
    with alpha_{2n} = 0.  Its spectral measure is the (4 - x^2)-tilt of the
    pushforward, normalized by 2 (1 - alpha_0^2) (1 - alpha_1).
    """
    a = _require_symmetric_sequence(v)
    m = a.size
    n = m // 2
    pad = np.concatenate([a, [0.0]])  # alpha_{2n} = 0
    odd = pad[1:m:2]  # alpha_{2k+1}, k = 0..n-1
    even_next = pad[2 : m + 1 : 2]  # alpha_{2k+2}
    even_cur = pad[0:m:2]  # alpha_{2k}
    bt = (1.0 - odd) * even_cur - (1.0 + odd) * even_next
    at2 = (1.0 + odd[: n - 1]) * (1.0 - even_next[: n - 1] ** 2) * (1.0 - odd[1:n])
    return JacobiOperator(bt, np.sqrt(np.maximum(at2, 0.0)))


def jacobi_spectral(J: JacobiOperator) -> SpectralMeasureInterval:
    """Eigenvalues and first-component-squared weights of (J, e_1)."""
    if J.n == 1:
        return SpectralMeasureInterval(J.b.copy(), np.array([1.0]))
    xs, vec = eigh_tridiagonal(J.b, J.a)
    w = vec[0, :] ** 2
    return SpectralMeasureInterval(xs, w / w.sum())


def split_lm_plus_ml(v: VerblunskySeq):
    """Split S^T (LM + ML) S into its two Jacobi blocks.

    Returns ``(J, Jt, residual)``: the odd-indexed principal submatrix J
    (which carries the pushforward measure with respect to e_1), the
    even-indexed block Jt, and the largest off-pattern entry of the rotated
    matrix, which vanishes identically in exact arithmetic.
    """
    a = _require_symmetric_sequence(v)
    m = a.size
    L, M = _lm_factors_stack(a)
    T = (L @ M + M @ L).real
    S = np.zeros((m, m))
    S[0, 0] = 1.0
    # the dangling final index keeps the top-left entry -sqrt((1-alpha)/2)
    # of its truncated 2x2 block, = -1 at alpha_{m-1} = -1; this is what
    # makes the final off-diagonal of the second block come out positive
    S[m - 1, m - 1] = -1.0
    for k in range(1, m - 1, 2):
        sm = np.sqrt((1.0 - a[k]) / 2.0)
        sp = np.sqrt((1.0 + a[k]) / 2.0)
        S[k : k + 2, k : k + 2] = [[-sm, sp], [sp, sm]]
    A = S.T @ T @ S
    i, j = np.indices((m, m))
    pattern = ((i % 2) == (j % 2)) & (np.abs(i - j) <= 2)
    residual = float(np.max(np.abs(A[~pattern]))) if m > 1 else 0.0
    Jblock = A[0::2, 0::2]
    Tblock = A[1::2, 1::2]
    J = JacobiOperator(np.diag(Jblock), np.diag(Jblock, 1))
    Jt = JacobiOperator(np.diag(Tblock), np.diag(Tblock, 1))
    return J, Jt, residual


def twisted_coeffs(v: VerblunskySeq, sign: int) -> JacobiOperator:
    """Jacobi operator of the (2 + sign*x)-tilted pushforward measure.

    For the measure (2 + s x) d_nu(x) / (2 (1 + s alpha_0)), s = +-1, the
    recurrence coefficients are

        b_{k+1} = s [(1 - s alpha_{2k}) alpha_{2k+1} - (1 + s alpha_{2k}) alpha_{2k-1}]
        a_{k+1} = sqrt((1 - s alpha_{2k}) (1 - alpha_{2k+1}^2) (1 + s alpha_{2k+2}))

    with alpha_{-1} = -1.  The sign convention is pinned by the free case:
    all interior alpha = 0 gives b_1 = s, matching direct orthonormalization
    against the tilted arcsine measure.
    """
    s = int(sign)
    if s not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    al = _require_symmetric_sequence(v)
    m = al.size
    n = m // 2
    pad = np.concatenate([[-1.0], al])  # pad[i] = alpha_{i-1}
    even = pad[1 : m : 2]  # alpha_{2k}, k = 0..n-1
    odd_next = pad[2 : m + 1 : 2]  # alpha_{2k+1}
    odd_prev = pad[0:m:2]  # alpha_{2k-1}
    b = s * ((1.0 - s * even) * odd_next - (1.0 + s * even) * odd_prev)
    even_next = pad[3 : m + 1 : 2]  # alpha_{2k+2}, k = 0..n-2
    a2 = (1.0 - s * even[: n - 1]) * (1.0 - odd_next[: n - 1] ** 2) * (1.0 + s * even_next)
    return JacobiOperator(b, np.sqrt(np.maximum(a2, 0.0)))


def classical_jacobi(atil: float, btil: float, n: int):
    """Recurrence coefficients and monic charpoly for the weight (2-x)^atil (2+x)^btil.

    The k = 0 entries of the standard recurrence are 0/0 at atil + btil = 0
    (for b_1) and atil + btil = -1 (for a_1); both singularities are
    removable and the cancelled forms are used:

        b_1 = 2 (btil - atil) / (atil + btil + 2)
        a_1^2 = 16 (atil + 1)(btil + 1) / ((atil + btil + 2)^2 (atil + btil + 3)).

    Returns ``(J, P)`` with P = det(x - J) monic of degree n; P equals the
    degree-n monic orthogonal polynomial of the weight.
    """
    if atil <= -1 or btil <= -1:
        raise ValueError("parameters must exceed -1")
    if n < 1:
        raise ValueError("n must be >= 1")
    s = atil + btil
    b = np.empty(n)
    b[0] = 2.0 * (btil - atil) / (s + 2.0)
    k = np.arange(1, n, dtype=float)
    b[1:] = 2.0 * (btil**2 - atil**2) / ((2.0 * k + s) * (2.0 * k + s + 2.0))
    a2 = np.empty(max(n - 1, 0))
    if n > 1:
        a2[0] = 16.0 * (atil + 1.0) * (btil + 1.0) / ((s + 2.0) ** 2 * (s + 3.0))
        k = np.arange(1, n - 1, dtype=float)
        a2[1:] = (
            16.0 * (k + 1.0) * (k + s + 1.0) * (k + atil + 1.0) * (k + btil + 1.0)
        ) / ((2.0 * k + s + 1.0) * (2.0 * k + s + 2.0) ** 2 * (2.0 * k + s + 3.0))
    J = JacobiOperator(b, np.sqrt(a2))
    return J, J.charpoly()


def fold_to_interval(poly: MonicPolynomial) -> MonicPolynomial:
    """Fold a real self-inversive Phi_2n into P_n(x) = (z^-n Phi(z) + z^n Phi(1/z)) / 2.

    Done in coefficient space through the basis C_j(x) = z^j + z^-j (monic
    Chebyshev-type, C_0 = 2, C_1 = x, C_{j+1} = x C_j - C_{j-1}) rather than
    by evaluate-and-interpolate, so no extra roundoff enters:

        P_n = c_n + (1/2) sum_{j=1..n} (c_{n+j} + c_{n-j}) C_j(x).
    """
    c = poly.coeffs
    if np.max(np.abs(np.asarray(c).imag), initial=0.0) > 1e-12:
        raise ValueError("fold requires a real-coefficient polynomial")
    c = np.asarray(c, dtype=complex).real
    if poly.degree % 2 != 0 or poly.degree < 2:
        raise ValueError("fold requires even degree >= 2")
    n = poly.degree // 2
    out = np.zeros(n + 1)
    out[0] = c[n]
    cj_prev = np.array([2.0])
    cj = np.array([0.0, 1.0])
    for j in range(1, n + 1):
        out[: j + 1] += 0.5 * (c[n + j] + c[n - j]) * cj
        if j < n:
            nxt = np.concatenate([[0.0], cj])
            nxt[:j] -= cj_prev
            cj_prev, cj = cj, nxt
    if abs(out[-1] - 1.0) > 1e-9:
        raise ValueError("folded polynomial is not monic; input was not self-inversive")
    out[-1] = 1.0
    return MonicPolynomial(out)


def _charpoly_coeffs(b: np.ndarray, a2: np.ndarray) -> np.ndarray:
    """Batched monic charpoly coefficients of tridiagonal matrices.

    ``b`` has shape (..., n) and ``a2`` the squared off-diagonals
    (..., n-1); returns ascending coefficients of det(x - J), shape
    (..., n+1), by the minor recurrence
    P_{k+1} = (x - b_{k+1}) P_k - a_k^2 P_{k-1}.
    """
    b = np.asarray(b, dtype=float)
    a2 = np.asarray(a2, dtype=float)
    lead = b.shape[:-1]
    n = b.shape[-1]
    prev = np.ones(lead + (1,))
    cur = np.concatenate([-b[..., :1], np.ones(lead + (1,))], axis=-1)
    for k in range(1, n):
        x_cur = np.concatenate([np.zeros(lead + (1,)), cur], axis=-1)
        cur_pad = np.concatenate([cur, np.zeros(lead + (1,))], axis=-1)
        prev_pad = np.concatenate([prev, np.zeros(lead + (2,))], axis=-1)
        nxt = x_cur - b[..., k : k + 1] * cur_pad - a2[..., k - 1 : k] * prev_pad
        prev, cur = cur, nxt
    return cur
