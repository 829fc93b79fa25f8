"""Reduced density, purity, entropy, and the entanglement temperature map."""

import io
import math

import numpy as np
import pytest

from entosc import DomainError
from entosc.oscillator_basis import chi_batch, quadrature
from entosc.reduced_state import (
    ThermoPoint,
    entropy,
    entropy_closed_form,
    eta_for_temperature,
    position_density,
    purity,
    reduced_density,
    temperature,
    thermo_curve,
    width,
    write_thermo_csv,
)

LN2 = math.log(2.0)


class TestReducedDensity:
    def test_pure_at_zero(self):
        rho = reduced_density(0, 0.0)
        assert rho.probs.tolist() == [1.0]
        assert rho.tail_bound == 0.0

    def test_exact_rationals_at_log_two(self):
        probs = reduced_density(0, LN2).probs
        assert probs[0] == pytest.approx(0.64, abs=1e-14)
        assert probs[1] == pytest.approx(0.2304, abs=1e-14)
        assert probs[2] == pytest.approx(0.082944, abs=1e-14)

    def test_sums_to_one(self):
        rho = reduced_density(2, 1.0, tol=1e-13)
        assert float(rho.probs.sum()) == pytest.approx(1.0, abs=1e-12)

    def test_thermal_form_for_ground_state(self):
        eta = 0.85
        q = math.tanh(eta) ** 2
        rho = reduced_density(0, eta)
        ks = np.arange(rho.cutoff + 1)
        assert np.allclose(rho.probs, (1 - q) * q**ks, rtol=1e-12)

    def test_monotone_decay_for_ground_state(self):
        rho = reduced_density(0, 1.3)
        assert np.all(np.diff(rho.probs) < 0)

    def test_validation(self):
        with pytest.raises(DomainError):
            reduced_density(0, 0.5, tol=0.0)


class TestPurity:
    def test_pure_state(self):
        assert purity(0, 0.0) == 1.0

    def test_closed_form_at_log_two(self):
        # cosh(2 ln 2) = 17/8
        assert purity(0, LN2) == pytest.approx(8.0 / 17.0, abs=1e-12)

    def test_closed_form_across_rapidities(self):
        for eta in np.linspace(0.0, 2.0, 20):
            assert abs(purity(0, eta) - 1.0 / math.cosh(2 * eta)) <= 1e-10

    def test_excited_state_is_more_mixed(self):
        assert purity(1, 0.5) < purity(0, 0.5)
        assert 0.0 < purity(1, 0.5) < 1.0


class TestEntropy:
    def test_zero_at_rest(self):
        assert entropy(0, 0.0) == 0.0
        assert entropy_closed_form(3, 0.0) == 0.0

    def test_unit_sinh_value(self):
        assert entropy(0, math.asinh(1.0)) == pytest.approx(2 * LN2, abs=1e-10)

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    @pytest.mark.parametrize("eta", [0.2, 0.6, 1.0, 1.5])
    def test_two_paths_agree(self, n, eta):
        assert abs(entropy(n, eta) - entropy_closed_form(n, eta)) <= 1e-8

    def test_strictly_increasing_in_rapidity(self):
        etas = np.linspace(0.0, 2.0, 15)
        values = [entropy(0, e) for e in etas]
        assert all(b > a for a, b in zip(values, values[1:]))


class TestPositionDensity:
    def test_origin_at_rest(self):
        assert position_density(0.0, 0.0, 0.0) == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-14)

    def test_diagonal_normalized(self):
        eta = 0.7
        scale = math.sqrt(math.cosh(2 * eta))
        rule = quadrature(64)
        # substitute x = scale * u so the Gaussian matches the e^{-u^2} weight
        values = position_density(eta, scale * rule.nodes, scale * rule.nodes)
        integral = scale * float(rule.weights @ (values * np.exp(rule.nodes**2)))
        assert integral == pytest.approx(1.0, abs=1e-10)

    def test_mehler_series_oracle(self):
        x, r, eta = 0.4, -0.3, 0.6
        rho = reduced_density(0, eta, tol=1e-16)
        cx = chi_batch(rho.cutoff, np.array([x]))[:, 0]
        cr = chi_batch(rho.cutoff, np.array([r]))[:, 0]
        series_value = float(np.sum(rho.probs * cx * cr))
        assert position_density(eta, x, r) == pytest.approx(series_value, abs=1e-7)

    def test_second_moment_matches_width(self):
        eta = 0.9
        c2 = math.cosh(2 * eta)
        scale = math.sqrt(c2)
        rule = quadrature(64)
        values = position_density(eta, scale * rule.nodes, scale * rule.nodes)
        moment = scale * float(
            rule.weights @ ((scale * rule.nodes) ** 2 * values * np.exp(rule.nodes**2))
        )
        assert moment == pytest.approx(c2 / 2.0, rel=1e-10)
        assert width(eta) ** 2 == pytest.approx(c2, rel=1e-15)


class TestWidth:
    def test_rest_width(self):
        assert width(0.0) == 1.0

    def test_log_two(self):
        assert width(LN2) == pytest.approx(math.sqrt(17.0 / 8.0), rel=1e-14)


class TestTemperature:
    def test_unit_temperature(self):
        eta = math.atanh(math.sqrt(math.exp(-1.0)))
        assert temperature(eta) == pytest.approx(1.0, rel=1e-12)

    def test_fast_hadron(self):
        eta = math.atanh(math.sqrt(0.8))
        assert temperature(eta) == pytest.approx(-1.0 / math.log(0.8), rel=1e-12)

    def test_round_trip(self):
        assert eta_for_temperature(temperature(1.1)) == pytest.approx(1.1, abs=1e-12)

    def test_zero_by_continuity(self):
        assert temperature(0.0) == 0.0
        assert eta_for_temperature(0.0) == 0.0

    def test_monotone_in_rapidity(self):
        etas = np.linspace(0.1, 2.5, 12)
        values = [temperature(e) for e in etas]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_negative_temperature_rejected(self):
        with pytest.raises(DomainError):
            eta_for_temperature(-1.0)


class TestThermoCurve:
    def test_rest_point(self):
        point = thermo_curve([0.0])[0]
        assert point == ThermoPoint(beta_sq=0.0, entropy=0.0, temperature=0.0)

    def test_half_beta_sq(self):
        point = thermo_curve([0.5])[0]
        assert point.entropy == pytest.approx(2 * LN2, abs=1e-10)
        assert point.temperature == pytest.approx(1.0 / LN2, rel=1e-12)

    def test_divergence_toward_light_speed(self):
        s = {q: thermo_curve([q])[0].entropy for q in (0.9, 0.99, 0.999)}
        assert s[0.999] > s[0.99] > s[0.9]

    def test_monotone_over_200_points(self):
        points = thermo_curve(np.linspace(0.0, 0.99, 200))
        entropies = [p.entropy for p in points]
        temperatures = [p.temperature for p in points]
        assert all(b > a for a, b in zip(entropies, entropies[1:]))
        assert all(b > a for a, b in zip(temperatures, temperatures[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            thermo_curve([1.0])

    def test_csv_format(self):
        buf = io.StringIO()
        write_thermo_csv(thermo_curve([0.0, 0.5]), buf)
        lines = buf.getvalue().split("\n")
        assert lines[0] == "beta_sq,entropy_nats,temperature"
        assert lines[1] == "0,0,0"
        assert lines[2].startswith("0.5,1.38629436112,")
