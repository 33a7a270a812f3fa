"""Tests for the building-block samplers and moments."""

import numpy as np
import pytest
from scipy.stats import kstest

from circbeta.distributions import (
    beta_sym_cdf,
    dirichlet_moment,
    sample_beta_sym,
    sample_simplex,
    sample_sphere,
    sample_theta,
    theta_radial_cdf,
)
from circbeta.errors import ParameterDomainError
from circbeta.rng import RngStream


def test_theta_nu1_is_unit_circle():
    z = sample_theta(1.0, RngStream(1), size=2000)
    assert np.max(np.abs(np.abs(z) - 1.0)) < 1e-15
    p = kstest((np.angle(z) % (2 * np.pi)) / (2 * np.pi), "uniform").pvalue
    assert p > 1e-3


def test_theta_nu3_radius_squared_uniform():
    z = sample_theta(3.0, RngStream(2), size=100_000)
    assert kstest(np.abs(z) ** 2, "uniform").pvalue > 1e-3


def test_theta_mean_square_radius():
    # E|z|^2 = 2/(nu+1); at nu=5 this is 1/3
    nu = 5.0
    z = sample_theta(nu, RngStream(3), size=1_000_000)
    s = np.abs(z) ** 2
    se = s.std(ddof=1) / np.sqrt(s.size)
    assert abs(s.mean() - 1.0 / 3.0) < 4 * se


# nu barely above 1 compresses a few percent of the radial mass into the
# last ~1e-16 of [0, 1), below double resolution, so a continuous KS at this
# draw count is only meaningful once (nu-1)/2 is large enough for floats
# (the jump at the boundary is eps^((nu-1)/2), which needs to sit below the
# ~4e-3 KS rejection band); nu >= 1.4 comfortably clears that.
@pytest.mark.parametrize("nu", [1.4, 2.0, 3.0, 7.5])
def test_theta_radial_cdf_and_phase(nu):
    z = sample_theta(nu, RngStream(4), size=100_000)
    assert kstest(np.abs(z) ** 2, lambda s: theta_radial_cdf(s, nu)).pvalue > 1e-3
    assert kstest((np.angle(z) % (2 * np.pi)) / (2 * np.pi), "uniform").pvalue > 1e-3


def test_theta_rejects_bad_nu():
    with pytest.raises(ParameterDomainError):
        sample_theta(0.5, RngStream(0))


def test_beta_sym_symmetric_mean_zero():
    x = sample_beta_sym(2.5, 2.5, RngStream(5), size=200_000)
    se = x.std(ddof=1) / np.sqrt(x.size)
    assert abs(x.mean()) < 4 * se


def test_beta_sym_mean_formula():
    # E X = (t - s)/(t + s); s=2, t=1 gives -1/3
    x = sample_beta_sym(2.0, 1.0, RngStream(6), size=1_000_000)
    se = x.std(ddof=1) / np.sqrt(x.size)
    assert abs(x.mean() - (-1.0 / 3.0)) < 4 * se


def test_beta_sym_uniform_case():
    x = sample_beta_sym(1.0, 1.0, RngStream(7), size=100_000)
    assert kstest((x + 1) / 2, "uniform").pvalue > 1e-3


def test_beta_sym_swap_is_negation_in_law():
    from scipy.stats import ks_2samp

    x = sample_beta_sym(1.7, 0.6, RngStream(8), size=50_000)
    y = sample_beta_sym(0.6, 1.7, RngStream(9), size=50_000)
    assert ks_2samp(x, -y).pvalue > 1e-3


def test_beta_sym_cdf_matches_samples():
    x = sample_beta_sym(0.4, 2.2, RngStream(10), size=100_000)
    assert kstest(x, lambda t: beta_sym_cdf(t, 0.4, 2.2)).pvalue > 1e-3


def test_beta_sym_rejects_bad_shapes():
    with pytest.raises(ParameterDomainError):
        sample_beta_sym(0.0, 1.0, RngStream(0))
    with pytest.raises(ParameterDomainError):
        sample_beta_sym(1.0, -2.0, RngStream(0))


def test_sphere_unit_norm_and_circle_case():
    g = RngStream(11).generator()
    v = sample_sphere(1, g)
    assert v.shape == (2,)
    norms = [np.linalg.norm(sample_sphere(d, g)) for d in range(1, 9) for _ in range(10)]
    assert np.max(np.abs(np.array(norms) - 1.0)) < 1e-12


@pytest.mark.parametrize("dim", range(1, 9))
def test_sphere_first_coordinate_marginal(dim):
    g = RngStream(12 + dim).generator()
    x1 = np.array([sample_sphere(dim, g)[0] for _ in range(20_000)])
    s = dim / 2.0
    assert kstest(x1, lambda t: beta_sym_cdf(t, s, s)).pvalue > 1e-3


def test_sphere_first_two_coordinates_disk_law():
    # dim=4: x1 + i x2 has the dim-parameter disk law; test its radial CDF
    g = RngStream(30).generator()
    pts = np.array([sample_sphere(4, g)[:2] for _ in range(100_000)])
    s2 = pts[:, 0] ** 2 + pts[:, 1] ** 2
    assert kstest(s2, lambda s: theta_radial_cdf(s, 4)).pvalue > 1e-3


def test_simplex_basics_and_moments():
    assert np.array_equal(sample_simplex(1, RngStream(13)), [1.0])
    u = sample_simplex(2, RngStream(14), size=200_000)
    assert kstest(u[:, 0], "uniform").pvalue > 1e-3

    w = sample_simplex(3, RngStream(15), size=1_000_000)
    for moment, expected in ((w[:, 0], 1.0 / 3.0), (w[:, 0] ** 2, 1.0 / 6.0)):
        se = moment.std(ddof=1) / np.sqrt(moment.size)
        assert abs(moment.mean() - expected) < 4 * se
    assert np.max(np.abs(w.sum(axis=1) - 1.0)) < 1e-15


def test_dirichlet_moment_values():
    assert dirichlet_moment([0.0, 0.0, 0.0, 0.0]) == pytest.approx(1.0, abs=1e-15)
    assert dirichlet_moment([1.0, 0.0]) == pytest.approx(0.5, rel=1e-14)
    # E[mu_1^2] on the 2-simplex, cross-checked in test_simplex_basics_and_moments
    assert dirichlet_moment([2.0, 0.0, 0.0]) == pytest.approx(1.0 / 6.0, rel=1e-14)


def test_dirichlet_moment_permutation_invariant():
    g = RngStream(16).generator()
    for _ in range(20):
        p = g.random(5) * 3.0 - 0.9
        q = g.permutation(p)
        assert dirichlet_moment(p) == pytest.approx(dirichlet_moment(q), rel=1e-13)


def test_dirichlet_moment_partition_case():
    # all exponents beta/2 - 1: value is Gamma(beta/2)^n (n-1)! / Gamma(n beta/2)
    from scipy.special import gammaln

    n, beta = 6, 1.7
    p = np.full(n, beta / 2.0 - 1.0)
    expected = np.exp(n * gammaln(beta / 2.0) + gammaln(n) - gammaln(n * beta / 2.0))
    assert dirichlet_moment(p) == pytest.approx(expected, rel=1e-13)


def test_dirichlet_moment_rejects_bad_exponent():
    with pytest.raises(ParameterDomainError):
        dirichlet_moment([0.5, -1.0])


def test_streams_are_deterministic_and_distinct():
    a = sample_theta(2.5, RngStream(99, 0), size=50)
    b = sample_theta(2.5, RngStream(99, 0), size=50)
    c = sample_theta(2.5, RngStream(99, 1), size=50)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
