"""Ensemble samplers and the closed-form quantities they are checked against.

``sample_circular`` draws the n-particle circular ensemble at inverse
temperature beta by giving the five-diagonal model independent coefficients
alpha_k distributed with radial exponent parameter beta*(n-k-1)+1 (the last
one uniform on the circle) and reading off the eigen-angles.
``sample_jacobi`` draws the Jacobi ensemble (weight (2-x)^a (2+x)^b on
[-2, 2]) from independent symmetric-beta coefficients pushed through the
Geronimus relations into a tridiagonal operator.  Everything else in this
module exists to certify those samplers: Haar cross-checks at beta = 2,
exact rejection samplers with analytic envelopes, unnormalized log
densities, partition functions, the Selberg product, coordinate-change
Jacobians, and the averaged characteristic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from . import distributions as dist
from .cmv import _lm_factors_stack, UNIMODULAR_TOL, cmv_spectral
from .errors import EnvelopeError, ParameterDomainError
from .opuc import (
    MonicPolynomial,
    SpectralMeasureCircle,
    VerblunskySeq,
    measure_to_verblunsky,
    monic_coeffs,
    reverse_coefficients,
)
from .rng import RngStream, as_generator
from .szego_map import (
    _charpoly_coeffs,
    classical_jacobi,
    fold_to_interval,
    geronimus,
    geronimus_coeffs,
    symmetric_pairs,
)

__all__ = [
    "EnsembleSpec",
    "SampleBatch",
    "sample_circular",
    "sample_jacobi",
    "sample_haar_unitary",
    "sample_haar_so",
    "log_density_circular",
    "log_density_jacobi",
    "partition_circular",
    "verblunsky_volume",
    "selberg_value",
    "averaged_alphas",
    "expected_charpoly",
    "jacobian_check",
    "rejection_oracle_circular",
    "rejection_oracle_jacobi",
    "sorted_gaps",
]

_CLUSTER_GAP = 1e-8
JACOBI_RANGE_TOL = 1e-10


@dataclass(frozen=True)
class EnsembleSpec:
    """One sampling task: particle count, inverse temperature, weights, seed."""

    n: int
    beta: float
    a: float | None = None
    b: float | None = None
    seed: RngStream = RngStream(0)

    def validate(self, jacobi: bool) -> None:
        if self.n < 1:
            raise ParameterDomainError(f"n must be >= 1, got {self.n}")
        if not self.beta > 0:
            raise ParameterDomainError(f"beta must be positive, got {self.beta}")
        if jacobi:
            a = 0.0 if self.a is None else self.a
            b = 0.0 if self.b is None else self.b
            if a <= -1 or b <= -1:
                raise ParameterDomainError(f"a and b must exceed -1, got a={a}, b={b}")


@dataclass(frozen=True)
class SampleBatch:
    """A batch of i.i.d. draws from one ensemble.

    ``eigenvalues`` holds one sorted row per draw: angles in [0, 2pi) for
    the circular ensemble, points of [-2, 2] for the Jacobi ensemble.
    Weights (spectral masses) and the underlying coefficient rows are kept
    when the producing sampler computed them.
    """

    spec: EnsembleSpec
    kind: str  # "circular" | "jacobi"
    eigenvalues: np.ndarray
    weights: np.ndarray | None = None
    alphas: np.ndarray | None = None

    @property
    def count(self) -> int:
        return self.eigenvalues.shape[0]


def _spectral_batch_circular(alphas: np.ndarray):
    """Sorted eigen-angles and weights for a stack of coefficient rows."""
    L, M = _lm_factors_stack(alphas)
    lam, vec = np.linalg.eig(L @ M)
    defect = np.max(np.abs(np.abs(lam) - 1.0))
    if defect > UNIMODULAR_TOL:
        raise ArithmeticError(f"eigenvalues off the unit circle by {defect:.3g}")
    lam = lam / np.abs(lam)
    thetas = np.angle(lam) % (2.0 * np.pi)
    weights = np.abs(vec[:, 0, :]) ** 2
    order = np.argsort(thetas, axis=1)
    thetas = np.take_along_axis(thetas, order, axis=1)
    weights = np.take_along_axis(weights, order, axis=1)
    weights /= weights.sum(axis=1, keepdims=True)
    # nearly degenerate eigenvalue pairs (probability ~0) get the careful
    # single-draw treatment with eigenvector re-orthogonalization
    n = thetas.shape[1]
    if n > 1:
        gaps = np.diff(thetas, axis=1)
        wrap = 2.0 * np.pi - (thetas[:, -1] - thetas[:, 0])
        mingap = np.minimum(gaps.min(axis=1), wrap)
        for i in np.nonzero(mingap < _CLUSTER_GAP)[0]:
            m = cmv_spectral(VerblunskySeq(alphas[i]))
            thetas[i], weights[i] = m.thetas, m.weights
    return thetas, weights


def sample_circular(spec: EnsembleSpec, count: int, keep_alphas: bool = True) -> SampleBatch:
    """Draw ``count`` circular-ensemble configurations at inverse temperature beta.

    Coefficient k is drawn from the disk law with parameter
    beta*(n-k-1) + 1 for k = 0..n-1, so the last one (parameter 1) is
    uniform on the circle; the eigen-angles of the resulting five-diagonal
    unitary then follow the |Delta|^beta density.
    """
    spec.validate(jacobi=False)
    if count < 1:
        raise ParameterDomainError("count must be >= 1")
    g = spec.seed.generator()
    n = spec.n
    alphas = np.empty((count, n), dtype=complex)
    for k in range(n):
        alphas[:, k] = dist.sample_theta(spec.beta * (n - k - 1) + 1.0, g, size=count)
    thetas, weights = _spectral_batch_circular(alphas)
    return SampleBatch(spec, "circular", thetas, weights, alphas if keep_alphas else None)


def _jacobi_alpha_params(n: int, beta: float, a: float, b: float):
    """(s, t) shape pairs for coefficients k = 0..2n-2."""
    k = np.arange(2 * n - 1, dtype=float)
    even = k % 2 == 0
    s = np.where(even, (2 * n - k - 2) * beta / 4.0 + a + 1.0, (2 * n - k - 3) * beta / 4.0 + a + b + 2.0)
    t = np.where(even, (2 * n - k - 2) * beta / 4.0 + b + 1.0, (2 * n - k - 1) * beta / 4.0)
    return s, t


def sample_jacobi(spec: EnsembleSpec, count: int, keep_alphas: bool = True) -> SampleBatch:
    """Draw ``count`` Jacobi-ensemble configurations.

    Coefficients follow the symmetric beta laws: for even k the pair of
    shapes is ((2n-k-2)beta/4 + a + 1, (2n-k-2)beta/4 + b + 1), for odd k it
    is ((2n-k-3)beta/4 + a + b + 2, (2n-k-1)beta/4); the final coefficient
    is pinned to -1.  Eigenvalues come from the Geronimus tridiagonal model.
    """
    spec.validate(jacobi=True)
    if count < 1:
        raise ParameterDomainError("count must be >= 1")
    a = 0.0 if spec.a is None else float(spec.a)
    b = 0.0 if spec.b is None else float(spec.b)
    g = spec.seed.generator()
    n = spec.n
    alphas = np.empty((count, 2 * n))
    ss, tt = _jacobi_alpha_params(n, spec.beta, a, b)
    for k in range(2 * n - 1):
        alphas[:, k] = dist.sample_beta_sym(float(ss[k]), float(tt[k]), g, size=count)
    alphas[:, -1] = -1.0
    bdiag, aoff = geronimus_coeffs(alphas)
    J = np.zeros((count, n, n))
    idx = np.arange(n)
    J[:, idx, idx] = bdiag
    if n > 1:
        J[:, idx[:-1], idx[1:]] = aoff
        J[:, idx[1:], idx[:-1]] = aoff
    xs, vec = np.linalg.eigh(J)
    out_of_range = np.max(np.abs(xs)) - 2.0
    if out_of_range > JACOBI_RANGE_TOL:
        raise ArithmeticError(f"eigenvalue outside [-2, 2] by {out_of_range:.3g}")
    weights = vec[:, 0, :] ** 2
    weights /= weights.sum(axis=1, keepdims=True)
    return SampleBatch(spec, "jacobi", xs, weights, alphas if keep_alphas else None)


def sample_haar_unitary(n: int, rng) -> np.ndarray:
    """Haar-distributed unitary: complex Ginibre QR with positive R diagonal."""
    if n < 1:
        raise ParameterDomainError("n must be >= 1")
    g = as_generator(rng)
    z = (g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def sample_haar_so(two_n: int, rng) -> np.ndarray:
    """Haar-distributed special orthogonal matrix of even size.

    Real Ginibre QR with positive R diagonal gives Haar on the full
    orthogonal group; a determinant -1 draw is moved to the det +1
    component by negating its last column, which preserves invariance.
    """
    if two_n < 2 or two_n % 2 != 0:
        raise ParameterDomainError("two_n must be an even integer >= 2")
    g = as_generator(rng)
    q, r = np.linalg.qr(g.standard_normal((two_n, two_n)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q = q.copy()
        q[:, -1] = -q[:, -1]
    return q


def log_abs_vandermonde_circle(thetas: np.ndarray) -> np.ndarray:
    """sum_{j<k} log|e^{i th_j} - e^{i th_k}| along the last axis; -inf if coincident."""
    thetas = np.asarray(thetas, dtype=float)
    n = thetas.shape[-1]
    if n < 2:
        return np.zeros(thetas.shape[:-1])
    iu = np.triu_indices(n, k=1)
    diff = thetas[..., :, None] - thetas[..., None, :]
    chords = np.abs(2.0 * np.sin(diff[..., iu[0], iu[1]] / 2.0))
    with np.errstate(divide="ignore"):
        return np.sum(np.log(chords), axis=-1)


def log_abs_vandermonde(xs: np.ndarray) -> np.ndarray:
    """sum_{j<k} log|x_j - x_k| along the last axis; -inf if coincident."""
    xs = np.asarray(xs, dtype=float)
    n = xs.shape[-1]
    if n < 2:
        return np.zeros(xs.shape[:-1])
    iu = np.triu_indices(n, k=1)
    diff = np.abs(xs[..., :, None] - xs[..., None, :])[..., iu[0], iu[1]]
    with np.errstate(divide="ignore"):
        return np.sum(np.log(diff), axis=-1)


def log_density_circular(thetas, beta: float) -> float:
    """Unnormalized log density beta * sum_{j<k} log|e^{i th_j} - e^{i th_k}|."""
    thetas = np.asarray(thetas, dtype=float)
    if not np.all(np.isfinite(thetas)):
        raise ParameterDomainError("angles must be finite")
    return float(beta * log_abs_vandermonde_circle(thetas))


def log_density_jacobi(xs, beta: float, a: float, b: float) -> float:
    """Unnormalized log density of the Jacobi ensemble at a configuration.

    beta * sum_{j<k} log|x_j - x_k| + sum_j (a log(2-x_j) + b log(2+x_j));
    a point sitting exactly on an endpoint yields the -inf sentinel.
    """
    xs = np.asarray(xs, dtype=float)
    if np.any(np.abs(xs) > 2.0):
        raise ParameterDomainError("all points must lie in [-2, 2]")
    interaction = float(beta * log_abs_vandermonde(xs))
    lo = 2.0 - xs
    hi = 2.0 + xs
    if (np.any(lo == 0.0) and a != 0.0) or (np.any(hi == 0.0) and b != 0.0):
        return float("-inf")
    with np.errstate(divide="ignore"):
        external = float(np.sum(a * np.log(lo) + b * np.log(hi)))
    return interaction + external


def partition_circular(n: int, beta: float) -> float:
    """Closed-form partition function Gamma(beta n / 2 + 1) / Gamma(beta/2 + 1)^n."""
    if n < 1 or beta <= 0:
        raise ParameterDomainError("need n >= 1 and beta > 0")
    return float(np.exp(gammaln(beta * n / 2.0 + 1.0) - n * gammaln(beta / 2.0 + 1.0)))


def verblunsky_volume(n: int, beta: float) -> float:
    """Total mass (2 pi)^n / (beta^{n-1} (n-1)!) of the coefficient-side density."""
    if n < 1 or beta <= 0:
        raise ParameterDomainError("need n >= 1 and beta > 0")
    return float(np.exp(n * np.log(2.0 * np.pi) - (n - 1) * np.log(beta) - gammaln(n)))


def selberg_value(n: int, x: float, y: float, z: float) -> float:
    """The n-dimensional Selberg integral over [0, 1]^n.

    integral of |Delta(u)|^{2z} prod u^{x-1} (1-u)^{y-1} equals

        prod_{r=0}^{n-1} Gamma(x+rz) Gamma(y+rz) Gamma(1+(r+1)z)
                         / (Gamma(1+z) Gamma(x+y+(n+r-1)z)),

    evaluated in log space.  (The [-2, 2]^n variant differs by the factor
    2^tau, tau = 2n((n-1)z + x + y - 1), from the substitution x = 4u - 2.)
    """
    if n < 1 or x <= 0 or y <= 0 or z < 0:
        raise ParameterDomainError("need n >= 1, x > 0, y > 0, z >= 0")
    r = np.arange(n, dtype=float)
    log_val = np.sum(
        gammaln(x + r * z)
        + gammaln(y + r * z)
        + gammaln(1.0 + (r + 1.0) * z)
        - gammaln(1.0 + z)
        - gammaln(x + y + (n + r - 1.0) * z)
    )
    return float(np.exp(log_val))


def averaged_alphas(n: int, beta: float, a: float, b: float) -> np.ndarray:
    """Expected coefficient sequence of the Jacobi-ensemble model (last entry -1).

    E(alpha_k) = (2b - 2a) / ((2n-k-2) beta + 2a + 2b + 4) for even k and
    (beta - 2a - 2b - 4) / (same denominator) for odd k, from the mean
    (t - s)/(t + s) of the symmetric beta law.
    """
    if n < 1 or beta <= 0 or a <= -1 or b <= -1:
        raise ParameterDomainError("need n >= 1, beta > 0, a > -1, b > -1")
    k = np.arange(2 * n - 1, dtype=float)
    den = (2 * n - k - 2) * beta + 2 * a + 2 * b + 4
    mean = np.where(k % 2 == 0, (2 * b - 2 * a) / den, (beta - 2 * a - 2 * b - 4) / den)
    return np.concatenate([mean, [-1.0]])


def expected_charpoly(n: int, beta: float, a: float, b: float, route: str = "fold") -> MonicPolynomial:
    """E[det(x - J)] for the Jacobi-ensemble tridiagonal model, three ways.

    route="fold": build the degree-2n circle polynomial from the averaged
    coefficients and fold it onto the interval.  route="geronimus": reverse
    the averaged coefficients, apply the Geronimus relations, and take the
    characteristic polynomial.  route="classical": the classical-weight
    recurrence with parameters atil = 2(a+1)/beta - 1, btil = 2(b+1)/beta-1,
    whose monic polynomial equals 4^n n!/(atil+btil+n+1)_n P_n(x/2) for the
    corresponding Jacobi weight.  All three agree to ~1e-10 coefficientwise.
    """
    v = VerblunskySeq(averaged_alphas(n, beta, a, b))
    if route == "fold":
        return fold_to_interval(monic_coeffs(v, 2 * n))
    if route == "geronimus":
        return geronimus(reverse_coefficients(v)).charpoly()
    if route == "classical":
        atil = 2.0 * (a + 1.0) / beta - 1.0
        btil = 2.0 * (b + 1.0) / beta - 1.0
        return classical_jacobi(atil, btil, n)[1]
    raise ValueError(f"unknown route {route!r}")


def _angle_near(angle: float, ref: float) -> float:
    """Representative of ``angle`` mod 2pi lying within pi of ``ref``."""
    return ref + (angle - ref + np.pi) % (2.0 * np.pi) - np.pi


def jacobian_check(m: SpectralMeasureCircle, real_case: bool = False, step: float = 1e-5):
    """Jacobian of (thetas, weights) -> coefficients, finite differences vs closed form.

    Complex case: the map (theta_1..theta_n, mu_1..mu_{n-1}) to
    (Re alpha_0, Im alpha_0, .., Re alpha_{n-2}, Im alpha_{n-2}, phi) with
    alpha_{n-1} = e^{i phi}; the closed form is
    2^{1-n} |Delta(e^{i theta})|^2 / prod (1-|alpha_k|^2)^{n-k-2}.
    Real case (conjugation-symmetric input, pair coordinates theta_j in
    (0, pi)): the map to (alpha_0..alpha_{2n-2}) with closed form
    2^{1-n} |Delta(x)|^2 / prod (1-alpha_k^2)^{(2n-k-3)/2}, x_j = 2cos theta_j.

    Returns ``(fd_det, formula_det)``, both positive.
    """
    if step <= 0 or step < 1e-12:
        raise ValueError("step underflow")

    if real_case:
        th0, w0 = symmetric_pairs(m)
        n = th0.size

        def build(t):
            th = t[:n]
            mu = np.concatenate([t[n:], [1.0 - np.sum(t[n:])]])
            full_th = np.concatenate([th, 2.0 * np.pi - th])
            full_w = np.concatenate([mu / 2.0, mu / 2.0])
            return SpectralMeasureCircle(full_th, full_w)

        def coords(meas):
            al = measure_to_verblunsky(meas)
            return al.real_alphas(tol=1e-9)[: 2 * n - 1]

        t0 = np.concatenate([th0, w0[:-1]])
        base = coords(build(t0))
        dim = 2 * n - 1
        al = np.concatenate([base, [-1.0]])
        xs = 2.0 * np.cos(th0)
        k = np.arange(2 * n - 1, dtype=float)
        log_formula = (
            (1 - n) * np.log(2.0)
            + 2.0 * log_abs_vandermonde(xs)
            - np.sum((2 * n - k - 3) / 2.0 * np.log1p(-al[: 2 * n - 1] ** 2))
        )
    else:
        n = len(m)

        def build(t):
            mu = np.concatenate([t[n:], [1.0 - np.sum(t[n:])]])
            return SpectralMeasureCircle(t[:n], mu)

        base_alpha = measure_to_verblunsky(m).alphas
        phi0 = float(np.angle(base_alpha[-1]) % (2.0 * np.pi))

        def coords(meas):
            al = measure_to_verblunsky(meas).alphas
            out = np.empty(2 * n - 1)
            out[0 : 2 * n - 2 : 2] = al[: n - 1].real
            out[1 : 2 * n - 2 : 2] = al[: n - 1].imag
            out[-1] = _angle_near(float(np.angle(al[-1])), phi0)
            return out

        t0 = np.concatenate([m.thetas, m.weights[:-1]])
        dim = 2 * n - 1
        al = base_alpha
        k = np.arange(max(n - 1, 0), dtype=float)
        log_formula = (
            (1 - n) * np.log(2.0)
            + 2.0 * log_abs_vandermonde_circle(m.thetas)
            - np.sum((n - k - 2) * np.log1p(-np.abs(al[: n - 1]) ** 2))
        )

    jac = np.empty((dim, dim))
    for i in range(dim):
        tp = t0.copy()
        tm = t0.copy()
        tp[i] += step
        tm[i] -= step
        jac[:, i] = (coords(build(tp)) - coords(build(tm))) / (2.0 * step)
    fd_det = abs(float(np.linalg.det(jac)))
    return fd_det, float(np.exp(log_formula))


def _collect_rejection(propose, log_accept, log_envelope, count, g, guard=10_000_000):
    """Generic exact rejection loop with an analytic envelope."""
    rows = []
    accepted = 0
    proposals = 0
    batch = max(1024, 4 * count)
    while accepted < count:
        cand = propose(batch)
        logw = log_accept(cand) - log_envelope
        keep = np.log(g.random(cand.shape[0])) < logw
        got = cand[keep]
        rows.append(got)
        accepted += got.shape[0]
        proposals += cand.shape[0]
        if proposals >= guard and accepted < max(1, proposals * 1e-6):
            raise EnvelopeError(
                f"acceptance rate {accepted / proposals:.2e} below 1e-6 after {proposals} proposals"
            )
    return np.concatenate(rows, axis=0)[:count]


def rejection_oracle_circular(n: int, beta: float, count: int, rng) -> SampleBatch:
    """Exact brute-force circular-ensemble sampler (tiny n only).

    Uniform angle proposals accepted with probability
    |Delta|^beta / 2^{beta n (n-1)/2}; the envelope is the exact bound
    |e^{i a} - e^{i b}| <= 2, so accepted draws follow the target law with
    no bias.  Cost grows fast: restricted to n <= 4, beta <= 8.
    """
    if n < 1 or n > 4 or beta <= 0 or beta > 8:
        raise ParameterDomainError("rejection oracle restricted to 1 <= n <= 4, 0 < beta <= 8")
    g = as_generator(rng)
    log_env = beta * n * (n - 1) / 2.0 * np.log(2.0)

    def propose(b):
        return g.random((b, n)) * 2.0 * np.pi

    def log_accept(th):
        return beta * log_abs_vandermonde_circle(th)

    th = _collect_rejection(propose, log_accept, log_env, count, g)
    spec = EnsembleSpec(n=n, beta=beta)
    return SampleBatch(spec, "circular", np.sort(th, axis=1))


def rejection_oracle_jacobi(n: int, beta: float, a: float, b: float, count: int, rng) -> SampleBatch:
    """Exact brute-force Jacobi-ensemble sampler (tiny n, a, b >= 0).

    Uniform proposals on [-2, 2]^n accepted against the exact envelope
    4^{beta n (n-1)/2} * 4^{n max(a, b)} (the external weight satisfies
    (2-x)^a (2+x)^b <= 4^{max(a,b)} pointwise for a, b >= 0).
    """
    if n < 1 or n > 3 or beta <= 0 or a < 0 or b < 0:
        raise ParameterDomainError("rejection oracle restricted to 1 <= n <= 3 and a, b >= 0")
    g = as_generator(rng)
    log_env = (beta * n * (n - 1) / 2.0 + n * max(a, b)) * np.log(4.0)

    def propose(batch):
        return g.random((batch, n)) * 4.0 - 2.0

    def log_accept(xs):
        with np.errstate(divide="ignore"):
            ext = np.sum(a * np.log(2.0 - xs) + b * np.log(2.0 + xs), axis=-1)
        return beta * log_abs_vandermonde(xs) + ext

    xs = _collect_rejection(propose, log_accept, log_env, count, g)
    spec = EnsembleSpec(n=n, beta=beta, a=a, b=b)
    return SampleBatch(spec, "jacobi", np.sort(xs, axis=1))


def sorted_gaps(angles: np.ndarray) -> np.ndarray:
    """Row-wise sorted nearest-neighbor gaps of circular angle configurations.

    Each row of n angles yields n gaps (including the wrap-around one)
    summing to 2 pi, returned sorted ascending; this scalar reduction is the
    rotation-invariant statistic used for distribution comparisons.
    """
    a = np.sort(np.asarray(angles, dtype=float) % (2.0 * np.pi), axis=-1)
    gaps = np.diff(a, axis=-1)
    wrap = 2.0 * np.pi - (a[..., -1] - a[..., 0])
    return np.sort(np.concatenate([gaps, wrap[..., None]], axis=-1), axis=-1)


def mc_charpoly_coeffs(batch: SampleBatch) -> np.ndarray:
    """Per-draw monic charpoly coefficients of the sampled Jacobi operators."""
    if batch.kind != "jacobi" or batch.alphas is None:
        raise ValueError("need a jacobi batch carrying its coefficient rows")
    bdiag, aoff = geronimus_coeffs(batch.alphas)
    return _charpoly_coeffs(bdiag, aoff**2)
