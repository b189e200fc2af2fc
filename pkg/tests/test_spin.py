import math

import numpy as np
import pytest
from scipy import integrate

from dirac_yukawa import spin_spectrum, tables
from dirac_yukawa.errors import (
    CoulombLimitError,
    InvalidStateError,
    NormalizationDomainError,
)
from dirac_yukawa.states import Classification, PhysicalParams, StateIndex

P_TABLE4 = PhysicalParams(M=5.0, A=1.0, alpha=0.1, C_sym=4.9)


def table2_params(c_s):
    return PhysicalParams(M=5.0, A=1.0, alpha=0.1, C_sym=c_s)


class TestAuxCoefficients:
    def test_worked_example(self):
        aux = spin_spectrum.aux_coefficients(P_TABLE4, StateIndex(1, -1), 4.058076)
        assert aux.N == 2
        assert aux.W == pytest.approx(-0.1, rel=1e-12)
        assert aux.S == pytest.approx(2.5, rel=1e-12)
        assert aux.nu_sq == pytest.approx((5.0 - 4.058076) * (5.0 + 4.058076 - 4.9) / 0.04, rel=1e-12)
        assert aux.nu == pytest.approx(math.sqrt(aux.nu_sq), rel=1e-14)

    def test_negative_nu_sq_gives_none(self):
        # E > M makes the decay index imaginary
        aux = spin_spectrum.aux_coefficients(P_TABLE4, StateIndex(1, -1), 6.0)
        assert aux.nu_sq < 0.0
        assert aux.nu is None

    def test_coulomb_limit_rejected(self):
        p = PhysicalParams(M=5.0, A=1.0, alpha=0.0)
        with pytest.raises(CoulombLimitError):
            spin_spectrum.aux_coefficients(p, StateIndex(0, 1), 4.0)


class TestQuadraticRoots:
    def test_vieta_identities(self):
        disc, e_hi, e_lo = spin_spectrum._quadratic_roots(5.0, 1.0, 0.1, 4.9, 1)
        N_sq, W, S = 4.0, -0.1, 2.5
        a2 = 1.0 + N_sq
        b1 = W + S * N_sq
        k0 = (W + 0.5 * 0.1 * N_sq) ** 2 + 5.0 * W * N_sq
        assert e_hi + e_lo == pytest.approx(2.0 * b1 / a2, rel=1e-12)
        assert e_hi * e_lo == pytest.approx(k0 / a2, rel=1e-12)
        assert disc == pytest.approx(b1 * b1 - a2 * k0, rel=1e-12)

    def test_negative_discriminant(self):
        # deep inside the complex window of the kappa < 0 block
        disc, e_hi, e_lo = spin_spectrum._quadratic_roots(5.0, 1.0, 0.1, 10.1, -2)
        assert disc < 0.0 and e_hi is None and e_lo is None

    def test_even_in_half_shell(self):
        # the quadratic depends on the shell index only through its square
        a = spin_spectrum._quadratic_roots(5.0, 1.0, 0.1, 4.9, 3)
        b = spin_spectrum._quadratic_roots(5.0, 1.0, 0.1, 4.9, -3)
        assert a == pytest.approx(b, rel=1e-14)


class TestEnergyPair:
    def test_table4_worked_row(self):
        pair = spin_spectrum.spin_energy_pair(P_TABLE4, StateIndex(1, -1))
        assert pair.e_plus == pytest.approx(4.05808, abs=1e-5)
        assert pair.e_minus == pytest.approx(-0.098076, abs=1e-5)
        assert pair.class_plus is Classification.BOUND
        assert pair.class_minus is Classification.BOUND

    def test_undefined_state(self):
        pair = spin_spectrum.spin_energy_pair(P_TABLE4, StateIndex(0, -1))
        assert pair.e_plus is None and pair.e_minus is None
        assert pair.class_plus is Classification.UNDEFINED

    @pytest.mark.parametrize("row", tables.load_reference()["table4"]["rows"])
    def test_full_table4(self, row):
        pair = spin_spectrum.spin_energy_pair(P_TABLE4, StateIndex(row["n"], row["kappa"]))
        if row["e_plus"] is None:
            assert pair.class_plus is Classification.UNDEFINED
        else:
            assert pair.e_plus == pytest.approx(row["e_plus"], abs=1e-5)
            assert pair.e_minus == pytest.approx(row["e_minus"], abs=1e-5)
            assert pair.class_plus is Classification.BOUND
            assert pair.class_minus is Classification.BOUND

    def test_table2_spot_values(self):
        ref = tables.load_reference()["table2"]
        # C_s = 0 row of the kappa > 0 block
        row = next(r for r in ref["plus_rows"] if r[0] == 0.0)
        for kappa, ref_val in zip(ref["plus_kappas"], row[1:]):
            pair = spin_spectrum.spin_energy_pair(table2_params(0.0), StateIndex(0, kappa))
            assert pair.e_plus == pytest.approx(ref_val, abs=1.5e-3)

    def test_forbidden_window_not_bound(self):
        # the kappa > 0 block loses its states across the central window
        for c_s in [9.8, 10.0, 10.5, 11.0, 11.3]:
            pair = spin_spectrum.spin_energy_pair(table2_params(c_s), StateIndex(0, 1))
            assert pair.class_plus is not Classification.BOUND

    def test_scattering_classification(self):
        # a candidate energy above M has an imaginary decay index
        cls = spin_spectrum.validate_energy(P_TABLE4, StateIndex(1, -1), 6.0)
        assert cls is Classification.SCATTERING

    def test_complex_window(self):
        pair = spin_spectrum.spin_energy_pair(table2_params(10.1), StateIndex(0, -2))
        assert pair.class_plus is Classification.COMPLEX
        assert pair.class_minus is Classification.COMPLEX

    def test_degeneracy_in_shell_index(self):
        # states with equal |n + kappa + 1| share both roots
        a = spin_spectrum.spin_energy_pair(P_TABLE4, StateIndex(0, 2))
        b = spin_spectrum.spin_energy_pair(P_TABLE4, StateIndex(1, 1))
        c = spin_spectrum.spin_energy_pair(P_TABLE4, StateIndex(1, -5))
        assert a.e_plus == pytest.approx(b.e_plus, rel=1e-14)
        assert a.e_minus == pytest.approx(b.e_minus, rel=1e-14)
        assert a.e_plus == pytest.approx(c.e_plus, rel=1e-14)


class TestResidual:
    def test_bound_roots_satisfy_condition(self):
        pair = spin_spectrum.spin_energy_pair(P_TABLE4, StateIndex(1, -1))
        res_p, sign_p = spin_spectrum.energy_residual(P_TABLE4, StateIndex(1, -1), pair.e_plus)
        res_m, sign_m = spin_spectrum.energy_residual(P_TABLE4, StateIndex(1, -1), pair.e_minus)
        assert res_p <= 1e-12
        assert res_m <= 1e-12
        assert sign_p == +1
        # the antiparticle root lives on the other radical sign
        assert sign_m == -1

    def test_arbitrary_energy_fails(self):
        res, _ = spin_spectrum.energy_residual(P_TABLE4, StateIndex(1, -1), 3.0)
        assert res > 1e-3

    def test_undefined_shell_raises(self):
        with pytest.raises(InvalidStateError):
            spin_spectrum.energy_residual(P_TABLE4, StateIndex(0, -1), 4.0)

    def test_infinite_outside_radicand(self):
        res, sign = spin_spectrum.energy_residual(P_TABLE4, StateIndex(1, -1), 6.0)
        assert math.isinf(res) and sign == 0


class TestComponents:
    def setup_method(self):
        self.s = StateIndex(1, 1)
        pair = spin_spectrum.spin_energy_pair(P_TABLE4, self.s)
        self.E = pair.e_plus

    def test_upper_component_normalized(self):
        total, _ = integrate.quad(
            lambda r: spin_spectrum.upper_component(P_TABLE4, self.s, self.E, r) ** 2,
            0.0,
            np.inf,
            limit=300,
            epsabs=1e-12,
        )
        assert total == pytest.approx(1.0, rel=1e-9)

    def test_lower_from_coupling_relation(self):
        # G must equal (F' + kappa F / r) / (M + E - C_s); check F' by
        # central differences so the two components are tied independently
        denom = P_TABLE4.M + self.E - P_TABLE4.C_sym
        for r in [0.5, 2.0, 6.0]:
            h = 1e-6
            dF = (
                spin_spectrum.upper_component(P_TABLE4, self.s, self.E, r + h)
                - spin_spectrum.upper_component(P_TABLE4, self.s, self.E, r - h)
            ) / (2.0 * h)
            F = spin_spectrum.upper_component(P_TABLE4, self.s, self.E, r)
            expected = (dF + self.s.kappa * F / r) / denom
            got = spin_spectrum.lower_component(P_TABLE4, self.s, self.E, r)
            assert got == pytest.approx(expected, rel=1e-6, abs=1e-10)

    def test_non_bound_energy_rejected(self):
        with pytest.raises(InvalidStateError):
            spin_spectrum.upper_component(P_TABLE4, self.s, 3.0, 1.0)
        with pytest.raises(InvalidStateError):
            spin_spectrum.lower_component(P_TABLE4, self.s, 3.0, 1.0)

    def test_normalization_needs_decay(self):
        with pytest.raises(NormalizationDomainError):
            spin_spectrum.normalization_constant(P_TABLE4, self.s, 6.0)

    def test_emission_grid(self):
        g = spin_spectrum.emission_grid(P_TABLE4, self.s, self.E, points=128)
        assert g.shape == (128,)
        assert np.all(np.diff(g) > 0.0)
