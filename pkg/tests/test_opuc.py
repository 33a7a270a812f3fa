"""Tests for the recurrence machinery and the coefficient <-> measure bijection."""

import numpy as np
import pytest

from conftest import random_measure, random_real_verblunsky, random_verblunsky

from circbeta.errors import DegenerateMeasureError
from circbeta.opuc import (
    MonicPolynomial,
    SpectralMeasureCircle,
    VerblunskySeq,
    measure_to_verblunsky,
    monic_coeffs,
    phi2n_at_pm1,
    phi_norm,
    reverse_coefficients,
    szego_evaluate,
    toeplitz_det,
)


def test_verblunsky_validation():
    with pytest.raises(ValueError):
        VerblunskySeq([0.5])  # last must be unimodular
    with pytest.raises(DegenerateMeasureError):
        VerblunskySeq([1.2, 1.0])  # interior outside the disk
    v = VerblunskySeq([0.3 - 0.4j, -1.0])
    assert len(v) == 2 and not v.is_real
    assert VerblunskySeq([0.3, -1.0]).is_real


def test_szego_free_case():
    v = VerblunskySeq([0, 0, 0, 1.0])
    for z in (2.0, 0.3 - 1.1j, np.exp(0.7j)):
        phi, phis = szego_evaluate(v, z, 3)
        assert phi == pytest.approx(z**3)
        assert phis == pytest.approx(1.0)


def test_szego_hand_value():
    # alpha_0 = 1/2: Phi_1(1) = 1 - 1/2
    v = VerblunskySeq([0.5, 1.0])
    assert szego_evaluate(v, 1.0, 1)[0] == pytest.approx(0.5)


def test_szego_reversal_modulus_on_circle():
    g = np.random.default_rng(0)
    v = random_verblunsky(g, 7)
    z = np.exp(2j * np.pi * g.random(100))
    for k in (1, 3, 7):
        phi, phis = szego_evaluate(v, z, k)
        assert np.max(np.abs(np.abs(phi) - np.abs(phis))) < 1e-10
        # Phi*_k(z) = z^k conj(Phi_k(1/conj(z)))
        phi_at, _ = szego_evaluate(v, 1.0 / np.conj(z), k)
        assert np.max(np.abs(phis - z**k * np.conj(phi_at))) < 1e-10


def test_monic_coeffs_matches_evaluation():
    g = np.random.default_rng(1)
    v = random_verblunsky(g, 6)
    z = 0.8 * np.exp(2j * np.pi * g.random(20))
    for k in (0, 1, 4, 6):
        poly = monic_coeffs(v, k)
        assert poly.degree == k
        phi, _ = szego_evaluate(v, z, k)
        scale = np.maximum(np.abs(phi), 1.0)
        assert np.max(np.abs(poly(z) - phi) / scale) < 1e-10


def test_monic_coeffs_trivia():
    v = VerblunskySeq([0, 0, 1.0])
    assert np.array_equal(monic_coeffs(v, 2).coeffs, [0, 0, 1])
    v = VerblunskySeq([0.3 + 0.2j, 1.0])
    assert monic_coeffs(v, 1).coeffs == pytest.approx([-(0.3 - 0.2j), 1.0])
    # real coefficients stay real
    vr = random_real_verblunsky(np.random.default_rng(2), 8)
    assert np.max(np.abs(monic_coeffs(vr, 8).coeffs.imag)) == 0.0


def test_phi_norm():
    v = VerblunskySeq([0.6, 0.0, 1.0])
    assert phi_norm(v, 0) == 1.0
    assert phi_norm(v, 1) == pytest.approx(0.8)
    # agreement with the quadrature norm over the support points
    g = np.random.default_rng(3)
    m = random_measure(g, 7)
    v = measure_to_verblunsky(m)
    for k in range(7):
        phi, _ = szego_evaluate(v, m.points, k)
        quad = np.sqrt(np.sum(m.weights * np.abs(phi) ** 2))
        assert quad == pytest.approx(phi_norm(v, k), rel=1e-10)


def test_measure_to_verblunsky_single_point():
    m = SpectralMeasureCircle([1.3], [1.0])
    v = measure_to_verblunsky(m)
    assert v.alphas[0] == pytest.approx(np.exp(-1.3j))


def test_measure_to_verblunsky_two_symmetric_points():
    # {+1, -1} with equal mass: Phi_2 = z^2 - 1, so alpha = (0, +1); the
    # determinant identity prod(z_j) = (-1)^(m-1) conj(alpha_1) fixes +1
    m = SpectralMeasureCircle([0.0, np.pi], [0.5, 0.5])
    v = measure_to_verblunsky(m)
    assert v.alphas == pytest.approx([0.0, 1.0], abs=1e-14)
    # the {+i, -i} pair is the alpha_1 = -1 case
    m = SpectralMeasureCircle([np.pi / 2, 3 * np.pi / 2], [0.5, 0.5])
    v = measure_to_verblunsky(m)
    assert v.alphas == pytest.approx([0.0, -1.0], abs=1e-14)


def test_measure_to_verblunsky_against_gram_schmidt():
    # independent oracle: Gram-Schmidt on the monomial Gram (moment) matrix
    g = np.random.default_rng(4)
    for n in (2, 4, 7):
        m = random_measure(g, n)
        v = measure_to_verblunsky(m)
        z = m.points
        basis = []  # coefficient vectors of the monic orthogonal polynomials
        for k in range(n):
            c = np.zeros(k + 1, dtype=complex)
            c[-1] = 1.0
            for poly in basis:
                vals_p = np.polyval(poly[::-1], z)
                vals_c = np.polyval(c[::-1], z)
                proj = np.sum(m.weights * np.conj(vals_p) * vals_c) / np.sum(
                    m.weights * np.abs(vals_p) ** 2
                )
                c[: poly.size] -= proj * poly
            basis.append(c)
            if k >= 1:
                alpha_oracle = -np.conj(c[0])
                assert v.alphas[k - 1] == pytest.approx(alpha_oracle, abs=1e-9)


def test_measure_constructor_rejects_degenerate():
    with pytest.raises(DegenerateMeasureError):
        SpectralMeasureCircle([0.5, 0.5 + 1e-12], [0.5, 0.5])
    with pytest.raises(ValueError):
        SpectralMeasureCircle([0.5, 1.5], [0.7, 0.7])  # sum != 1


def test_toeplitz_identity_hand_case():
    m = SpectralMeasureCircle([0.0, np.pi], [0.5, 0.5])
    lhs, rhs = toeplitz_det(m)
    assert lhs == pytest.approx(1.0, abs=1e-12)
    assert rhs == pytest.approx(1.0, abs=1e-12)
    m1 = SpectralMeasureCircle([2.0], [1.0])
    assert toeplitz_det(m1) == pytest.approx((1.0, 1.0))


def test_toeplitz_identity_random():
    g = np.random.default_rng(5)
    for _ in range(100):
        n = int(g.integers(1, 13))
        lhs, rhs = toeplitz_det(random_measure(g, n))
        assert abs(lhs - rhs) / lhs < 1e-8


def test_phi2n_products():
    g = np.random.default_rng(6)
    # all interior zero: both products are 2
    v0 = VerblunskySeq([0, 0, 0, -1.0])
    assert phi2n_at_pm1(v0) == pytest.approx((2.0, 2.0))
    # n=1, alpha_0 = 0.3: Phi_2(1) = 2 * 0.7
    v1 = VerblunskySeq([0.3, -1.0])
    assert phi2n_at_pm1(v1)[0] == pytest.approx(1.4)
    for n in (1, 3, 6):
        v = random_real_verblunsky(g, 2 * n)
        plus, minus = phi2n_at_pm1(v)
        assert plus == pytest.approx(szego_evaluate(v, 1.0, 2 * n)[0].real, rel=1e-10)
        assert minus == pytest.approx(szego_evaluate(v, -1.0, 2 * n)[0].real, rel=1e-10)


def test_reverse_coefficients():
    g = np.random.default_rng(7)
    # real sequence with last -1: plain reversal of the interior
    v = random_real_verblunsky(g, 8)
    rv = reverse_coefficients(v)
    assert np.allclose(rv.alphas[:-1], v.alphas[:-1][::-1])
    assert rv.alphas[-1] == -1.0
    for _ in range(30):
        m = int(g.integers(1, 11))
        v = random_verblunsky(g, m)
        rv = reverse_coefficients(v)
        # involution
        assert np.max(np.abs(reverse_coefficients(rv).alphas - v.alphas)) < 1e-15
        # same degree-m monic polynomial
        d = np.max(np.abs(monic_coeffs(v, m).coeffs - monic_coeffs(rv, m).coeffs))
        assert d < 1e-10


def test_monic_polynomial_requires_unit_lead():
    with pytest.raises(ValueError):
        MonicPolynomial([1.0, 2.0])
