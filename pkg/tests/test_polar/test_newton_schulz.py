# tests/test_polar/test_newton_schulz.py
import numpy as np
import pytest
from pydantic import ValidationError

from mars_m.exceptions import DegenerateInputError
from mars_m.linalg import fro_norm, inner, jacobi_svd, nuclear_norm
from mars_m.polar import NsScheme, exact_polar, newton_schulz, orthogonalize
from tests.conftest import polar_test_matrix


def test_identity_cubic_converges():
    out = newton_schulz(np.eye(4), NsScheme.cubic(steps=10))
    assert fro_norm(out - np.eye(4)) <= 1e-6


def test_zero_maps_to_zero():
    out = newton_schulz(np.zeros((3, 2)))
    assert out.shape == (3, 2)
    assert not out.any()


def test_cubic_matches_exact_polar(rng):
    m = polar_test_matrix(rng, 16, 8, cond=100.0)
    assert fro_norm(newton_schulz(m, NsScheme.cubic(30)) - exact_polar(m)) <= 1e-6


def test_wide_input_is_transpose_of_tall(rng):
    m = polar_test_matrix(rng, 10, 4, cond=10.0)
    scheme = NsScheme.cubic(30)
    np.testing.assert_allclose(newton_schulz(m.T, scheme), newton_schulz(m, scheme).T, atol=1e-12)


def test_one_by_one_is_sign():
    assert newton_schulz(np.array([[-3.0]]), NsScheme.cubic(30))[0, 0] == pytest.approx(-1.0)


@pytest.mark.parametrize("c", [1e-3, 1.0, 1e3])
def test_scale_invariance(rng, c):
    m = polar_test_matrix(rng, 12, 6, cond=20.0)
    scheme = NsScheme.quintic(steps=5, eps=1e-15)
    np.testing.assert_allclose(newton_schulz(c * m, scheme), newton_schulz(m, scheme), atol=1e-9)


def test_quintic_near_orthonormal_columns(rng):
    m = polar_test_matrix(rng, 20, 8, cond=1000.0)
    o = newton_schulz(m)
    # the quintic oscillates in [0.68, 1.2] instead of converging to 1
    assert fro_norm(o.T @ o - np.eye(8)) <= 1.5


def test_cubic_orthonormal_columns(rng):
    m = polar_test_matrix(rng, 20, 8, cond=100.0)
    o = newton_schulz(m, NsScheme.cubic(30))
    assert fro_norm(o.T @ o - np.eye(8)) <= 1e-6


def test_quintic_spectrum_and_alignment(rng):
    for _ in range(20):
        n = int(rng.integers(2, 17))
        m = polar_test_matrix(rng, int(rng.integers(n, 33)), n, cond=100.0)
        o = newton_schulz(m)
        s = jacobi_svd(o).S
        assert 0.5 <= s[-1] and s[0] <= 1.5
        # the deployed quintic oscillates in about [0.68, 1.2], so the
        # alignment with the nuclear norm sits well below 1
        assert inner(m, o) >= 0.65 * nuclear_norm(m)


def test_exact_polar_examples():
    theta = 0.7
    q = np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
    np.testing.assert_allclose(exact_polar(q), q, atol=1e-12)
    np.testing.assert_allclose(exact_polar(np.diag([3.0, 0.5])), np.eye(2), atol=1e-12)
    m = np.array([[0.0, -2.0], [2.0, 0.0]])
    o = exact_polar(m)
    np.testing.assert_allclose(o, [[0.0, -1.0], [1.0, 0.0]], atol=1e-12)
    assert inner(m, o) == pytest.approx(4.0)


def test_exact_polar_rejects_zero():
    with pytest.raises(DegenerateInputError):
        exact_polar(np.zeros((2, 2)))


def test_exact_polar_maximizes_alignment(rng):
    m = rng.standard_normal((6, 4))
    best = inner(m, exact_polar(m))
    for _ in range(100):
        q, _ = np.linalg.qr(rng.standard_normal((6, 4)))
        assert best >= inner(m, q) - 1e-12


def test_orthogonalize_dispatch(rng):
    m = polar_test_matrix(rng, 6, 3, cond=5.0)
    np.testing.assert_array_equal(orthogonalize(m, NsScheme(), "svd"), exact_polar(m))
    np.testing.assert_array_equal(orthogonalize(m, NsScheme()), newton_schulz(m, NsScheme()))
    assert not orthogonalize(np.zeros((2, 2)), NsScheme(), "svd").any()


def test_scheme_validation():
    assert NsScheme() == NsScheme.quintic(5)
    with pytest.raises(ValidationError):
        NsScheme(steps=0)
    with pytest.raises(ValidationError):
        NsScheme(variant="septic")
