"""Samplers and closed-form moments for the building-block distributions.

The disk-valued law sampled by :func:`sample_theta` has density

    (nu - 1) / (2 pi) * (1 - |z|^2)^((nu - 3) / 2)

on the open unit disk for ``nu > 1``; ``nu = 1`` is the limiting case of the
uniform law on the unit circle.  The symmetric beta law of
:func:`sample_beta_sym` lives on (-1, 1) with density proportional to
``(1 - x)^(s-1) (1 + x)^(t-1)``.  Both arise as projections of the uniform
law on a sphere, which is why :func:`sample_sphere` and
:func:`sample_simplex` are housed here as well.

All samplers are pure functions of their random source: pass distinct
streams from concurrent contexts and never share one generator.
"""

from __future__ import annotations

import numpy as np
from scipy.special import gammaln

from .errors import ParameterDomainError
from .rng import as_generator

__all__ = [
    "sample_theta",
    "sample_beta_sym",
    "sample_sphere",
    "sample_simplex",
    "dirichlet_moment",
    "theta_radial_cdf",
    "beta_sym_cdf",
]


def sample_theta(nu: float, rng, size=None):
    """Draw from the disk-valued law with radial density exponent (nu-3)/2.

    Uses the exact inverse CDF of the squared radius,
    ``s = 1 - (1 - U)^(2/(nu-1))``, with an independent uniform phase; this
    is rejection-free and valid for any real ``nu > 1``.  For ``nu = 1`` the
    draw is uniform on the unit circle (|z| = 1 exactly).

    Parameters
    ----------
    nu : float
        Degrees-of-freedom parameter, >= 1.
    rng : RngStream or numpy.random.Generator
    size : int, optional
        Number of draws; None returns a scalar.

    Returns
    -------
    complex or complex ndarray in the closed unit disk.
    """
    if nu < 1:
        raise ParameterDomainError(f"nu must be >= 1, got {nu}")
    g = as_generator(rng)
    shape = () if size is None else (size,)
    phase = np.exp(2j * np.pi * g.random(shape))
    if nu == 1:
        return phase if size is not None else complex(phase)
    # U in [0, 1) keeps 1-U > 0; |z| < 1 strictly except for pathological
    # rounding near the circle (likely for nu barely above 1), which we
    # resample away: rejecting a zero-probability boundary set is still exact.
    s = 1.0 - (1.0 - g.random(shape)) ** (2.0 / (nu - 1.0))
    z = np.sqrt(s) * phase
    while np.any(np.abs(z) >= 1.0):
        bad = np.abs(z) >= 1.0
        s = 1.0 - (1.0 - g.random(shape)) ** (2.0 / (nu - 1.0))
        z = np.where(bad, np.sqrt(s) * phase, z)
    return z if size is not None else complex(z)


def sample_beta_sym(s: float, t: float, rng, size=None):
    """Draw from the beta law on (-1, 1) with density ~ (1-x)^(s-1) (1+x)^(t-1).

    Generated as ``x = 1 - 2u`` with ``u ~ Beta(s, t)`` on [0, 1] (numpy's
    gamma-ratio construction), which matches the normalization
    ``2^(1-s-t) Gamma(s+t) / (Gamma(s) Gamma(t))``.  Draws landing exactly on
    an endpoint (possible in floating point for shapes < 1) are resampled.

    Parameters
    ----------
    s, t : float
        Shape parameters, both > 0.
    rng : RngStream or numpy.random.Generator
    size : int, optional

    Returns
    -------
    float or ndarray in the open interval (-1, 1).
    """
    if s <= 0 or t <= 0:
        raise ParameterDomainError(f"beta shapes must be positive, got s={s}, t={t}")
    g = as_generator(rng)
    shape = () if size is None else (size,)
    x = 1.0 - 2.0 * g.beta(s, t, shape)
    while np.any(np.abs(x) >= 1.0):
        bad = np.abs(x) >= 1.0
        x = np.where(bad, 1.0 - 2.0 * g.beta(s, t, shape), x)
    return x if size is not None else float(x)


def sample_sphere(dim: int, rng) -> np.ndarray:
    """Uniform point on the unit sphere S^dim in R^(dim+1).

    Normalizes a vector of independent standard normals.  The first
    coordinate is then beta-distributed with shape (dim/2, dim/2) on (-1, 1)
    and the first two coordinates combine to a sample_theta(dim) draw.
    """
    if dim < 1:
        raise ParameterDomainError(f"dim must be >= 1, got {dim}")
    g = as_generator(rng)
    while True:
        v = g.standard_normal(dim + 1)
        norm = np.linalg.norm(v)
        if norm > 0:
            return v / norm


def sample_simplex(n: int, rng, size=None) -> np.ndarray:
    """Uniform weight vector on the (n-1)-simplex {mu_j > 0, sum = 1}.

    Normalized unit-rate exponentials; equivalently Dirichlet(1, ..., 1).
    Returns shape (n,), or (size, n) when ``size`` is given.
    """
    if n < 1:
        raise ParameterDomainError(f"n must be >= 1, got {n}")
    g = as_generator(rng)
    shape = (n,) if size is None else (size, n)
    e = g.exponential(1.0, shape)
    return e / e.sum(axis=-1, keepdims=True)


def dirichlet_moment(p) -> float:
    """E[prod mu_j^{p_j}] for (mu_1..mu_n) uniform on the (n-1)-simplex.

    Equals ``(n-1)! * prod Gamma(p_j + 1) / Gamma(sum p_j + n)``, evaluated
    in log-gamma space so large n and large exponents do not overflow.
    """
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size < 1:
        raise ParameterDomainError("p must be a nonempty 1-d vector")
    if np.any(p <= -1):
        raise ParameterDomainError("every exponent must exceed -1")
    n = p.size
    log_val = gammaln(n) + np.sum(gammaln(p + 1.0)) - gammaln(np.sum(p) + n)
    return float(np.exp(log_val))


def theta_radial_cdf(s, nu: float):
    """CDF of |z|^2 for a sample_theta(nu) draw: 1 - (1-s)^((nu-1)/2)."""
    s = np.clip(np.asarray(s, dtype=float), 0.0, 1.0)
    return 1.0 - (1.0 - s) ** ((nu - 1.0) / 2.0)


def beta_sym_cdf(x, s: float, t: float):
    """CDF on (-1, 1) of the sample_beta_sym(s, t) law."""
    from scipy.special import betainc

    u = np.clip((1.0 + np.asarray(x, dtype=float)) / 2.0, 0.0, 1.0)
    # (1+x)/2 ~ Beta(t, s) in the standard [0, 1] parametrization
    return betainc(t, s, u)
