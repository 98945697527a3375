"""Unit tests for heat currents, stencil derivatives and amplification."""

import numpy as np
import pytest

from qtt.model import TransistorModel, bose_occupation
from qtt.dynamics import steady_state
from qtt.observables import (
    AmplificationResult,
    DivergedAmplificationError,
    HeatCurrents,
    StencilConfig,
    alpha_gap,
    amplification,
    five_point_derivative,
    heat_current,
    heat_currents,
    transient_identity_residual,
)
from qtt.states import density_of, paper_example_state, paradigm_state


class TestHeatCurrents:
    def test_ground_state_emits_into_every_bath(self, model):
        """From |000> each bath extracts energy: J_X = -(E_up - E_lo) J(w)(1+n)."""
        rho = np.zeros((8, 8), dtype=complex)
        rho[0, 0] = 1.0
        n = bose_occupation(1.0, 0.2)
        assert heat_current(model, "A", rho) == pytest.approx(-(1 + n), rel=1e-14)
        # bath B: |000> -> |010> drops the energy by 2 at spectral density J(2) = 2
        n2 = bose_occupation(2.0, 0.08)
        assert heat_current(model, "B", rho) == pytest.approx(-4 * (1 + n2), rel=1e-12)

    def test_steady_sum_rule(self, model):
        jc = heat_currents(model, steady_state(model))
        assert abs(jc.total) < 1e-10

    def test_steady_transport_direction(self, model):
        """At the operating point heat flows in at A and out at C."""
        jc = heat_currents(model, steady_state(model))
        assert jc.j_a > 0 and jc.j_c < 0

    def test_container(self):
        jc = HeatCurrents(1.0, 2.0, -3.0)
        assert jc.total == 0.0
        assert np.array_equal(jc.as_array(), [1.0, 2.0, -3.0])


class TestFivePointStencil:
    def test_exact_on_degree_four(self):
        poly = np.polynomial.Polynomial([0.3, -1.2, 0.5, 2.0, -0.7])
        deriv = poly.deriv()
        for x0 in (-1.0, 0.0, 0.37, 2.0):
            got = five_point_derivative(poly, x0, 1e-3)
            assert abs(got - deriv(x0)) < 1e-12

    def test_fourth_order_error_on_exp(self):
        err = abs(five_point_derivative(np.exp, 0.0, 1e-2) - 1.0)
        assert err == pytest.approx(1e-8 / 30, rel=1e-2)  # h^4 f^(5) / 30

    def test_config_validation(self):
        with pytest.raises(ValueError):
            StencilConfig(0.0)


class TestAmplification:
    def test_steady_frozen_values(self, model):
        r = amplification(model, 0.05)
        assert r.alpha_a == pytest.approx(-148.913159, rel=1e-6)
        assert r.alpha_c == pytest.approx(147.913159, rel=1e-6)
        assert not r.diverged
        assert r.time is None
        assert abs(r.currents.total) < 1e-10

    def test_transient_frozen_values(self, model):
        ghz = density_of(paradigm_state("GHZ"))
        r = amplification(model, 0.05, rho0=ghz, t=0.1, state_id="GHZ")
        assert r.alpha_a == pytest.approx(-1153.850457, rel=1e-6)
        assert r.alpha_c == pytest.approx(1138.918390, rel=1e-6)
        assert r.state_id == "GHZ"
        assert r.time == 0.1

    def test_transient_requires_time(self, model):
        with pytest.raises(ValueError):
            amplification(model, 0.05, rho0=np.eye(8, dtype=complex) / 8)

    def test_tb_must_clear_stencil(self, model):
        with pytest.raises(ValueError):
            amplification(model, 0.002)

    def test_long_time_matches_steady(self, model):
        """By t = 50 the initial state is forgotten and both modes agree."""
        rho0 = density_of(paper_example_state("W'"))
        rt = amplification(model, 0.08, rho0=rho0, t=50.0)
        rs = amplification(model, 0.08)
        assert rt.alpha_a == pytest.approx(rs.alpha_a, abs=1e-6)
        assert rt.alpha_c == pytest.approx(rs.alpha_c, abs=1e-6)

    def test_halved_stencil_agrees(self, model):
        r1 = amplification(model, 0.05, stencil=StencilConfig(1e-3))
        r2 = amplification(model, 0.05, stencil=StencilConfig(5e-4))
        assert abs(r1.alpha_a - r2.alpha_a) / abs(r2.alpha_a) < 1e-4


class TestTransientIdentity:
    def test_steady_mode_residual(self, model):
        assert transient_identity_residual(model, 0.08) < 1e-8

    def test_transient_mode_residual(self, model):
        ghz = density_of(paradigm_state("GHZ"))
        res = transient_identity_residual(model, 0.08, rho0=ghz, t=0.1)
        assert res < 1e-3


class TestAlphaGap:
    def test_value(self):
        r = AmplificationResult(alpha_a=-149.0, alpha_c=148.0, djb_dtb=-1e-5,
                                diverged=False, t_b=0.05, time=None)
        assert alpha_gap(r) == pytest.approx(1.0)

    def test_diverged_raises(self):
        r = AmplificationResult(alpha_a=np.inf, alpha_c=-np.inf, djb_dtb=0.0,
                                diverged=True, t_b=0.125, time=None)
        with pytest.raises(DivergedAmplificationError):
            alpha_gap(r)
