import math

import numpy as np
import pytest
from scipy import integrate
from scipy.special import eval_jacobi

from dirac_yukawa.errors import NormalizationDomainError
from dirac_yukawa.radial import default_grid, norm_constant, shape, shape_derivative

CASES = [
    # (alpha, nu, edge, n)
    (0.1, 4.9, 2.0, 0),
    (0.1, 4.9, 2.0, 1),
    (0.1, 3.2, 1.0, 2),
    (0.05, 10.0, 4.0, 3),
    (0.2, 1.5, 2.5, 1),
]


def reference_shape(alpha, nu, edge, n, r):
    """Direct evaluation via scipy's Jacobi polynomial."""
    x = math.exp(-2.0 * alpha * r)
    return x**nu * (1.0 - x) ** edge * eval_jacobi(n, 2.0 * nu, 2.0 * edge - 1.0, 1.0 - 2.0 * x)


class TestShape:
    @pytest.mark.parametrize("alpha, nu, edge, n", CASES)
    def test_matches_scipy_jacobi(self, alpha, nu, edge, n):
        for r in np.geomspace(0.01, 40.0, 25):
            ours = shape(alpha, nu, edge, n, r)
            ref = reference_shape(alpha, nu, edge, n, r)
            assert ours == pytest.approx(ref, rel=1e-10, abs=1e-300)

    def test_vector_input(self):
        r = np.linspace(0.1, 10.0, 11)
        out = shape(0.1, 4.9, 2.0, 1, r)
        assert out.shape == r.shape
        assert out[3] == pytest.approx(shape(0.1, 4.9, 2.0, 1, r[3]), rel=1e-14)

    def test_origin_limit(self):
        # (1 - x)^edge vanishes at r -> 0 for edge > 0
        assert abs(shape(0.1, 4.9, 2.0, 0, 1e-10)) <= 1e-15

    def test_node_count(self):
        # degree-n polynomial factor gives exactly n interior sign changes
        r = np.linspace(0.05, 60.0, 6001)
        vals = shape(0.1, 3.2, 1.0, 2, r)
        signs = np.sign(vals)
        changes = int(np.sum(signs[1:] * signs[:-1] < 0))
        assert changes == 2


class TestShapeDerivative:
    @pytest.mark.parametrize("alpha, nu, edge, n", CASES)
    def test_matches_finite_difference(self, alpha, nu, edge, n):
        for r in [0.5, 2.0, 7.0, 15.0]:
            h = 1e-6 * max(1.0, r)
            fd = (shape(alpha, nu, edge, n, r + h) - shape(alpha, nu, edge, n, r - h)) / (2.0 * h)
            exact = shape_derivative(alpha, nu, edge, n, r)
            assert exact == pytest.approx(fd, rel=5e-8, abs=1e-12)

    def test_vector_input(self):
        r = np.linspace(0.5, 10.0, 7)
        out = shape_derivative(0.1, 4.9, 2.0, 2, r)
        assert out.shape == r.shape


class TestNormConstant:
    @pytest.mark.parametrize("alpha, nu, edge, n", CASES)
    def test_against_quadrature(self, alpha, nu, edge, n):
        N = norm_constant(alpha, nu, edge, n)
        total, _ = integrate.quad(
            lambda r: (N * shape(alpha, nu, edge, n, r)) ** 2, 0.0, np.inf, limit=300, epsabs=1e-12
        )
        assert total == pytest.approx(1.0, rel=1e-9)

    def test_nonpositive_nu_rejected(self):
        with pytest.raises(NormalizationDomainError):
            norm_constant(0.1, 0.0, 2.0, 0)
        with pytest.raises(NormalizationDomainError):
            norm_constant(0.1, -1.0, 2.0, 0)

    def test_negative_edge_rejected(self):
        with pytest.raises(NormalizationDomainError):
            norm_constant(0.1, 4.9, -1.0, 0)

    def test_zero_edge_needs_positive_n(self):
        # n = 0, edge = 0 is the constant-polynomial profile with a
        # non-integrable normalization (gamma argument n + edge = 0)
        with pytest.raises(NormalizationDomainError):
            norm_constant(0.1, 4.9, 0.0, 0)
        assert norm_constant(0.1, 4.9, 0.0, 1) > 0.0


class TestDefaultGrid:
    def test_shape_and_span(self):
        g = default_grid(0.1, 4.9, points=256)
        assert g.shape == (256,)
        assert g[0] == pytest.approx(1e-4)
        assert g[-1] == pytest.approx(25.0 / (2.0 * 0.1 * 4.9))
        assert np.all(np.diff(g) > 0.0)

    def test_tail_decay(self):
        g = default_grid(0.1, 4.9)
        tail = abs(shape(0.1, 4.9, 2.0, 0, g[-1]))
        peak = np.max(np.abs(shape(0.1, 4.9, 2.0, 0, g)))
        assert tail <= 1e-9 * peak
