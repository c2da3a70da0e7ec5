import math

import numpy as np
import pytest

from evanesce import propagator as prop

RNG = np.random.default_rng(7)


def random_separation(rng=RNG):
    while True:
        t = rng.uniform(0.0, 8.0)
        r = rng.uniform(0.0, 8.0)
        sep = prop.Separation(t, r)
        if sep.regime is not prop.Regime.LIGHTLIKE and sep.root > 0.3:
            return sep


class TestSeparation:
    def test_regimes(self):
        assert prop.Separation(2.0, 1.0).regime is prop.Regime.TIMELIKE
        assert prop.Separation(1.0, 2.0).regime is prop.Regime.SPACELIKE
        assert prop.Separation(1.0, 1.0).regime is prop.Regime.LIGHTLIKE
        assert prop.Separation(0.0, 0.0).regime is prop.Regime.LIGHTLIKE

    def test_guard_band(self):
        # within the relative guard the point counts as light-like
        assert prop.Separation(1.0, 1.0 + 1e-12).regime is prop.Regime.LIGHTLIKE
        assert prop.Separation(1.0, 1.0 + 1e-3).regime is prop.Regime.SPACELIKE

    def test_derived_fields(self):
        sep = prop.Separation(3.0, 1.0)
        assert sep.x2 == pytest.approx(8.0, rel=1e-15)
        assert sep.root == pytest.approx(math.sqrt(8.0), rel=1e-15)

    def test_validation(self):
        with pytest.raises(ValueError):
            prop.Separation(-1.0, 2.0)
        with pytest.raises(ValueError):
            prop.Separation(1.0, -2.0)
        with pytest.raises(ValueError):
            prop.Separation(math.nan, 1.0)


class TestClosedForms:
    def test_lightlike_rejected_everywhere(self):
        sep = prop.Separation(1.0, 1.0)
        for fn in (prop.s1_closed, prop.s2_closed, prop.s2_full_closed):
            with pytest.raises(prop.LightlikeSeparationError):
                fn(sep, 1.0)
        with pytest.raises(prop.LightlikeSeparationError):
            prop.d_massless(sep)
        with pytest.raises(prop.LightlikeSeparationError):
            prop.s1_closed_one_dim(sep, 1.0)

    def test_mass_validation(self):
        with pytest.raises(ValueError):
            prop.s1_closed(prop.Separation(2.0, 1.0), 0.0)

    def test_regime_tag_carried(self):
        v = prop.s1_closed(prop.Separation(0.0, 3.0), 1.0)
        assert v.regime is prop.Regime.SPACELIKE and v.variant == "s1"
        v = prop.s2_full_closed(prop.Separation(3.0, 0.0), 1.0)
        assert v.regime is prop.Regime.TIMELIKE and v.variant == "s2_full"

    def test_spacelike_decay_length_is_compton(self):
        for wc in (0.5, 1.0, 2.0):
            d = np.linspace(5.0 / wc, 15.0 / wc, 25)
            fit = prop.decay_length_fit(
                [(di, abs(prop.s1_closed(prop.Separation(0.0, di), wc).value)) for di in d],
                envelope_power=1.5,
            )
            assert abs(fit.decay_length * wc - 1.0) < 0.02

    def test_timelike_envelope_constant(self):
        # |s1| * (x^2)^{3/4} flat to 2% for omega_c*sqrt(x^2) in [20, 40]
        z = np.linspace(20.0, 40.0, 21)
        env = np.array([
            abs(prop.s1_closed(prop.Separation(zi, 0.0), 1.0).value) * zi**1.5 for zi in z
        ])
        assert np.max(np.abs(env / np.median(env) - 1.0)) < 0.02

    def test_spacelike_monotone_decrease(self):
        wc = 1.0
        mags = [
            abs(prop.s1_closed(prop.Separation(0.0, d), wc).value)
            for d in np.linspace(2.0 / wc + 0.2, 12.0, 30)
        ]
        assert all(b < a for a, b in zip(mags, mags[1:]))

    def test_half_relation_emergent(self):
        for _ in range(30):
            sep = random_separation()
            s1 = prop.s1_closed(sep, 1.3).value
            s2 = prop.s2_closed(sep, 1.3).value
            assert abs(s2 + s1 / 2.0) <= 1e-12 * abs(s1)

    def test_s2_spacelike_decay_matches_s1(self):
        d = np.linspace(5.0, 15.0, 25)
        fit = prop.decay_length_fit(
            [(di, abs(prop.s2_closed(prop.Separation(0.0, di), 1.0).value)) for di in d],
            envelope_power=1.5,
        )
        assert abs(fit.decay_length - 1.0) < 0.02


class TestFullForm:
    def test_timelike_equals_minus_s1(self):
        for _ in range(10):
            sep = random_separation()
            if sep.regime is not prop.Regime.TIMELIKE:
                continue
            full = prop.s2_full_closed(sep, 1.0).value
            assert full == -prop.s1_closed(sep, 1.0).value

    def test_spacelike_small_argument(self):
        # value -> omega_c^2 / (16 pi) as the separation shrinks
        wc = 1.0
        v = prop.s2_full_closed(prop.Separation(0.0, 1e-3), wc).value
        assert v.imag == 0.0
        assert v.real == pytest.approx(wc**2 / (16 * math.pi), rel=1e-5)

    def test_spacelike_growth_rate(self):
        d = np.linspace(20.0, 40.0, 25)
        fit = prop.decay_length_fit(
            [(di, abs(prop.s2_full_closed(prop.Separation(0.0, di), 1.0).value)) for di in d],
            envelope_power=1.5,
        )
        assert abs(fit.rate - 1.0) < 0.02  # grows at +omega_c


class TestMasslessLimit:
    def test_inverse_square_law(self):
        v2 = prop.d_massless(prop.Separation(0.0, 2.0)).value
        v4 = prop.d_massless(prop.Separation(0.0, 4.0)).value
        assert abs(v2 / v4) == pytest.approx(4.0, rel=1e-12)

    def test_matches_s1_at_tiny_mass(self):
        for sep in (prop.Separation(0.0, 2.0), prop.Separation(3.0, 0.0)):
            wc = 1e-6 / sep.root
            d = prop.d_massless(sep).value
            s1 = prop.s1_closed(sep, wc).value
            assert abs(d - s1) / abs(d) < 1e-4

    def test_phase_structure(self):
        # purely imaginary on both sides of the cone, opposite signs
        timelike = prop.d_massless(prop.Separation(2.0, 0.0)).value
        spacelike = prop.d_massless(prop.Separation(0.0, 2.0)).value
        assert timelike.real == 0.0 and spacelike.real == 0.0
        assert timelike.imag > 0 > spacelike.imag


class TestTravelingOracle:
    @pytest.mark.parametrize("t,r", [(2.0, 1.0), (3.0, 0.5), (0.0, 3.0)])
    def test_matches_closed(self, t, r):
        got = prop.s1_oracle(t, r, 1.0)
        want = prop.s1_closed(prop.Separation(t, r), 1.0).value
        assert abs(got - want) / abs(want) < 1e-3

    def test_spec_sequence_meets_tolerance(self):
        # the coarse 4-step damping sequence {0.1, 0.05, 0.025, 0.0125}*scale
        cfg = prop.QuadratureConfig(extrapolation_steps=4, rel_tol=5e-3)
        got = prop.s1_oracle(2.0, 1.0, 1.0, cfg)
        want = prop.s1_closed(prop.Separation(2.0, 1.0), 1.0).value
        assert abs(got - want) / abs(want) < 1e-3

    def test_r_zero_limit(self):
        got = prop.s1_oracle(3.0, 0.0, 1.0)
        want = prop.s1_closed(prop.Separation(3.0, 0.0), 1.0).value
        assert abs(got - want) / abs(want) < 1e-3

    def test_massless_power_law(self):
        # with a negligible mass the modulus follows 1/x^2: doubling the
        # distance divides |value| by 4
        wc = 1e-4
        a = abs(prop.s1_oracle(0.0, 1.0, wc))
        b = abs(prop.s1_oracle(0.0, 2.0, wc))
        assert a / b == pytest.approx(4.0, rel=0.01)

    def test_nonconvergence_raises_with_diagnostics(self):
        cfg = prop.QuadratureConfig(rel_tol=1e-13)
        with pytest.raises(prop.OracleConvergenceError) as err:
            prop.s1_oracle(2.0, 1.0, 1.0, cfg)
        diag = err.value.diagnostics
        assert "eps" in diag and "cauchy_delta" in diag and len(diag["eps"]) == 6

    def test_low_momentum_cutoff_raises(self):
        cfg = prop.QuadratureConfig(momentum_cutoff=5.0)
        with pytest.raises(prop.OracleConvergenceError):
            prop.s1_oracle(0.5, 0.1, 1.0, cfg)

    def test_lightlike_rejected(self):
        with pytest.raises(prop.LightlikeSeparationError):
            prop.s1_oracle(1.0, 1.0, 1.0)


class TestEvanescentOracle:
    def test_frozen_regression(self):
        # values pinned from the converged quadrature of the mode sum
        got = prop.s2_oracle(0.0, 4.0, 1.0)
        assert got == pytest.approx(2.3093596306935792e-04 + 0j, rel=1e-10)
        got = prop.s2_oracle(5.0, 0.5, 1.0)
        assert got == pytest.approx(-3.6772001335031793e-03 - 1.1887236767379173e-03j, rel=1e-9)

    def test_self_convergence(self):
        # the internal panel-doubling gate passes at a tight tolerance
        cfg = prop.QuadratureConfig(rel_tol=1e-9)
        prop.s2_oracle(12.0, 3.0, 1.0, cfg)

    def test_pure_spacelike_value_is_real(self):
        # at t = 0 every mode contributes a real damped exponential
        v = prop.s2_oracle(0.0, 6.0, 1.0)
        assert v.imag == 0.0 and v.real > 0.0

    def test_spacelike_tail_is_power_law(self):
        # the real evanescent-mode sum falls off algebraically (index ~ -3),
        # unlike the exponentially decaying closed form
        ds = np.array([6.0, 8.0, 12.0, 16.0, 24.0])
        vals = np.array([abs(prop.s2_oracle(0.0, d, 1.0)) for d in ds])
        index = np.polyfit(np.log(ds), np.log(vals), 1)[0]
        assert -3.3 < index < -2.8

    def test_known_discrepancy_with_closed_form(self):
        # documented: the mode sum and the closed form are different
        # functions; the smallest deviation on a standard grid is O(1)
        for (t, r) in [(0.0, 4.0), (5.0, 0.5), (2.0, 6.0)]:
            closed = prop.s2_closed(prop.Separation(t, r), 1.0).value
            oracle = prop.s2_oracle(t, r, 1.0)
            assert abs(oracle - closed) / abs(closed) > 1.0

    def test_domain(self):
        with pytest.raises(ValueError):
            prop.s2_oracle(1.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            prop.s2_oracle(1.0, 2.0, -1.0)


class TestOneDimensionalVariant:
    @pytest.mark.parametrize("t,r", [(2.0, 1.0), (0.0, 3.0), (4.0, 1.0)])
    def test_closed_matches_oracle(self, t, r):
        got = prop.s1_oracle_one_dim(t, r, 1.0)
        want = prop.s1_closed_one_dim(prop.Separation(t, r), 1.0).value
        assert abs(got - want) / abs(want) < 1e-3

    def test_same_decay_rate_lighter_envelope(self):
        d = np.linspace(5.0, 15.0, 25)
        fit = prop.decay_length_fit(
            [(di, abs(prop.s1_closed_one_dim(prop.Separation(0.0, di), 1.0).value)) for di in d],
            envelope_power=0.5,
        )
        assert abs(fit.decay_length - 1.0) < 0.02


class TestDecayFit:
    def test_exact_exponential(self):
        d = np.linspace(1.0, 10.0, 20)
        fit = prop.decay_length_fit([(di, math.exp(-3.0 * di)) for di in d])
        assert fit.decay_length == pytest.approx(1.0 / 3.0, abs=1e-10)
        assert fit.residual < 1e-12

    def test_exact_growth_gives_negative_length(self):
        d = np.linspace(1.0, 5.0, 12)
        fit = prop.decay_length_fit([(di, math.exp(2.0 * di)) for di in d])
        assert fit.rate == pytest.approx(2.0, abs=1e-10)
        assert fit.decay_length == pytest.approx(-0.5, abs=1e-10)

    def test_envelope_compensation_is_exact(self):
        d = np.linspace(2.0, 9.0, 15)
        fit = prop.decay_length_fit(
            [(di, di**-1.5 * math.exp(-di)) for di in d], envelope_power=1.5
        )
        assert fit.rate == pytest.approx(-1.0, abs=1e-10)

    def test_validation(self):
        good = [(float(i), math.exp(-i)) for i in range(1, 6)]
        with pytest.raises(ValueError):
            prop.decay_length_fit(good[:4])
        bad_order = list(good)
        bad_order[2], bad_order[3] = bad_order[3], bad_order[2]
        with pytest.raises(ValueError):
            prop.decay_length_fit(bad_order)
        with pytest.raises(ValueError):
            prop.decay_length_fit([(d, 0.0) for d, _ in good])
        with pytest.raises(ValueError):
            prop.decay_length_fit([(-d, v) for d, v in good])


class TestQuadratureConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            prop.QuadratureConfig(regulator_eps=0.0)
        with pytest.raises(ValueError):
            prop.QuadratureConfig(extrapolation_steps=1)
        with pytest.raises(ValueError):
            prop.QuadratureConfig(rel_tol=-1.0)
