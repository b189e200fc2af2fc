import math

import numpy as np
import pytest
from scipy import integrate

from dirac_yukawa import pseudospin_spectrum, tables
from dirac_yukawa.errors import CoulombLimitError, InvalidStateError
from dirac_yukawa.states import Classification, PhysicalParams, StateIndex

P_TABLE5 = PhysicalParams(M=5.0, A=1.0, alpha=0.1, C_sym=-5.0)


class TestAuxCoefficients:
    def test_worked_example(self):
        aux = pseudospin_spectrum.pseudo_aux_coefficients(P_TABLE5, StateIndex(1, -2), -3.917958)
        assert aux.N == -2
        assert aux.U == pytest.approx(0.0, abs=1e-12)
        assert aux.T == pytest.approx(0.5 * (-5.0 + 0.1), rel=1e-12)
        assert aux.nu_sq == pytest.approx((5.0 - 3.917958) * (5.0 + 3.917958 - 5.0) / 0.04, rel=1e-10)

    def test_coulomb_limit_rejected(self):
        p = PhysicalParams(M=5.0, A=1.0, alpha=0.0, C_sym=-5.0)
        with pytest.raises(CoulombLimitError):
            pseudospin_spectrum.pseudo_aux_coefficients(p, StateIndex(1, -2), -3.9)


class TestQuadraticRoots:
    def test_vieta_identities(self):
        disc, e_hi, e_lo = pseudospin_spectrum._pseudo_quadratic_roots(5.0, 1.0, 0.1, -5.0, -1)
        N_sq = 4.0
        U = 0.0
        T = 0.5 * (-5.0 + 0.1)
        a2 = 1.0 + N_sq
        b1 = T * N_sq
        k0 = (0.5 * 0.1 * N_sq) ** 2
        assert e_hi + e_lo == pytest.approx(2.0 * b1 / a2, rel=1e-12)
        assert e_hi * e_lo == pytest.approx(k0 / a2, rel=1e-10)

    def test_even_in_half_shell(self):
        a = pseudospin_spectrum._pseudo_quadratic_roots(5.0, 1.0, 0.1, -5.0, 2)
        b = pseudospin_spectrum._pseudo_quadratic_roots(5.0, 1.0, 0.1, -5.0, -2)
        assert a == pytest.approx(b, rel=1e-14)


class TestMapFromSpin:
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    @pytest.mark.parametrize("kappa", [-5, -2, 2, 3, 5])
    def test_agrees_with_direct_quadratic(self, n, kappa):
        s = StateIndex(n, kappa)
        if s.n + s.kappa == 0:
            return
        disc_m, hi_m, lo_m = pseudospin_spectrum.map_from_spin(P_TABLE5, s)
        disc_d, hi_d, lo_d = pseudospin_spectrum._pseudo_quadratic_roots(
            P_TABLE5.M, P_TABLE5.A, P_TABLE5.alpha, P_TABLE5.C_sym, s.n + s.kappa
        )
        assert disc_m == pytest.approx(disc_d, rel=1e-12)
        if hi_d is None:
            assert hi_m is None
        else:
            assert hi_m == pytest.approx(hi_d, rel=1e-12, abs=1e-12)
            assert lo_m == pytest.approx(lo_d, rel=1e-12, abs=1e-12)

    def test_undefined_shell(self):
        assert pseudospin_spectrum.map_from_spin(P_TABLE5, StateIndex(2, -2)) == (None, None, None)


class TestEnergyPair:
    def test_table5_worked_row(self):
        pair = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, StateIndex(1, -2))
        assert pair.e_plus == pytest.approx(-0.00204188, abs=1e-6)
        assert pair.e_minus == pytest.approx(-3.917958, abs=1e-5)
        assert pair.class_plus is Classification.BOUND
        assert pair.class_minus is Classification.BOUND

    def test_undefined_state(self):
        pair = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, StateIndex(1, -1))
        assert pair.e_plus is None
        assert pair.class_plus is Classification.UNDEFINED

    @pytest.mark.parametrize("row", tables.load_reference()["table5"]["rows"])
    def test_full_table5(self, row):
        pair = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, StateIndex(row["n"], row["kappa"]))
        if row["e_plus"] is None:
            assert pair.class_plus is Classification.UNDEFINED
        else:
            assert pair.e_plus == pytest.approx(row["e_plus"], abs=1e-5)
            assert pair.e_minus == pytest.approx(row["e_minus"], abs=1e-5)
            assert pair.class_plus is Classification.BOUND
            assert pair.class_minus is Classification.BOUND

    def test_finite_spectrum_edge(self):
        # the discriminant changes sign between |kappa| = 25 and 26 at n = 1
        inside = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, StateIndex(1, -25))
        outside = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, StateIndex(1, -26))
        assert inside.class_plus is Classification.BOUND
        assert outside.class_plus is Classification.COMPLEX
        assert outside.e_plus is None

    def test_degeneracy_in_shell_index(self):
        a = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, StateIndex(1, 2))
        b = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, StateIndex(0, 3))
        c = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, StateIndex(0, -3))
        assert a.e_plus == pytest.approx(b.e_plus, rel=1e-14)
        assert a.e_minus == pytest.approx(b.e_minus, rel=1e-14)
        assert a.e_plus == pytest.approx(c.e_plus, rel=1e-14)


class TestResidual:
    def test_bound_roots_satisfy_condition(self):
        s = StateIndex(1, -2)
        pair = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, s)
        res_p, _ = pseudospin_spectrum.energy_residual(P_TABLE5, s, pair.e_plus)
        res_m, _ = pseudospin_spectrum.energy_residual(P_TABLE5, s, pair.e_minus)
        assert res_p <= 1e-12
        assert res_m <= 1e-12

    def test_both_radical_signs_appear(self):
        signs = set()
        for row in tables.load_reference()["table5"]["rows"]:
            if row["e_plus"] is None:
                continue
            s = StateIndex(row["n"], row["kappa"])
            pair = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, s)
            _, sp = pseudospin_spectrum.energy_residual(P_TABLE5, s, pair.e_plus)
            _, sm = pseudospin_spectrum.energy_residual(P_TABLE5, s, pair.e_minus)
            signs.update({sp, sm})
        assert signs == {+1, -1}

    def test_undefined_shell_raises(self):
        with pytest.raises(InvalidStateError):
            pseudospin_spectrum.energy_residual(P_TABLE5, StateIndex(2, -2), -3.9)

    def test_infinite_outside_radicand(self):
        res, sign = pseudospin_spectrum.energy_residual(P_TABLE5, StateIndex(1, -2), -6.0)
        assert math.isinf(res) and sign == 0


class TestComponents:
    def setup_method(self):
        self.s = StateIndex(1, 2)
        pair = pseudospin_spectrum.pseudospin_energy_pair(P_TABLE5, self.s)
        self.E = pair.e_minus
        assert pair.class_minus is Classification.BOUND

    def test_lower_component_normalized(self):
        total, _ = integrate.quad(
            lambda r: pseudospin_spectrum.lower_component_ps(P_TABLE5, self.s, self.E, r) ** 2,
            0.0,
            np.inf,
            limit=300,
            epsabs=1e-12,
        )
        assert total == pytest.approx(1.0, rel=1e-9)

    def test_upper_from_coupling_relation(self):
        denom = P_TABLE5.M - self.E + P_TABLE5.C_sym
        for r in [0.5, 2.0, 6.0]:
            h = 1e-6
            dG = (
                pseudospin_spectrum.lower_component_ps(P_TABLE5, self.s, self.E, r + h)
                - pseudospin_spectrum.lower_component_ps(P_TABLE5, self.s, self.E, r - h)
            ) / (2.0 * h)
            G = pseudospin_spectrum.lower_component_ps(P_TABLE5, self.s, self.E, r)
            expected = (dG - self.s.kappa * G / r) / denom
            got = pseudospin_spectrum.upper_component_ps(P_TABLE5, self.s, self.E, r)
            assert got == pytest.approx(expected, rel=1e-6, abs=1e-10)

    def test_non_bound_energy_rejected(self):
        with pytest.raises(InvalidStateError):
            pseudospin_spectrum.lower_component_ps(P_TABLE5, self.s, -1.0, 1.0)
        with pytest.raises(InvalidStateError):
            pseudospin_spectrum.upper_component_ps(P_TABLE5, self.s, -1.0, 1.0)
