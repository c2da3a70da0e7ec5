"""Numerical identity suites behind the ``evanesce verify`` command.

Each suite re-derives a family of exact relations (spinor algebra, guided
kinematics, special-function oracles, propagator cross-checks) on randomized
inputs and reports the worst residual against its tolerance.  Rows with
status ``xfail`` are measured and reported but expected to exceed tolerance
(documented discrepancies); they do not fail a run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import propagator as prop
from . import special, spinor, waveguide
from .minkowski import FourVector

__all__ = ["CheckRow", "run_verify"]


@dataclass(frozen=True)
class CheckRow:
    suite: str
    check: str
    trials: int
    residual: float
    tolerance: float
    status: str
    note: str = ""


def _row(suite, check, residual, tolerance, trials=1, xfail=False, note="") -> CheckRow:
    if xfail:
        status = "xfail"
    else:
        status = "pass" if residual <= tolerance else "fail"
    return CheckRow(suite, check, trials, float(residual), float(tolerance), status, note)


def _random_wavevector(rng) -> np.ndarray:
    while True:
        k = rng.uniform(-2.0, 2.0, 3)
        if np.linalg.norm(k) > 0.2:
            return k


# ------------------------------------------------------------------ spinor

def spinor_suite(rng, trials, tol_algebra, tol_eigen) -> list[CheckRow]:
    rows = []
    gen = spinor.build_generators()
    s_sq = sum(gen["spin"][i] @ gen["spin"][i] for i in range(3))
    rows.append(_row("spinor", "spin-squared-2I", np.max(np.abs(s_sq - 2 * np.eye(6))), tol_algebra))
    chi_rebuilt = np.stack([gen["beta0"] @ gen["beta"][i] for i in range(3)])
    rows.append(_row("spinor", "chi-is-beta0-beta", np.max(np.abs(chi_rebuilt - gen["chi"])), tol_algebra))
    herm = max(
        np.max(np.abs(gen["chi"][i] - gen["chi"][i].conj().T)) for i in range(3)
    )
    rows.append(_row("spinor", "chi-hermitian", herm, tol_algebra))

    ortho = comp = ssum = omega_res = annih = spectrum = long_kill = 0.0
    for _ in range(trials):
        k = _random_wavevector(rng)
        n = np.linalg.norm(k)
        trip = spinor.polarization_basis(k)
        gram = np.array([[np.vdot(trip[a], trip[b]) for b in (1, -1, 0)] for a in (1, -1, 0)])
        ortho = max(ortho, np.max(np.abs(gram - np.eye(3))))
        total = sum(np.outer(trip[h], trip[h].conj()) for h in (1, -1, 0))
        comp = max(comp, np.max(np.abs(total - np.eye(3))))
        ssum = max(ssum, np.max(np.abs(spinor.spin_sum(k) - spinor.spin_sum_closed(k))))
        omega_res = max(omega_res, spinor.omega_identity_check(k, rng.uniform(0.0, 3.0)))
        for h in (1, -1):
            f = spinor.amplitude_spinor(k, h)
            annih = max(annih, np.linalg.norm(spinor.wave_operator(k, n) @ f) / n)
        f0 = spinor.amplitude_spinor(k, 0)
        annih = max(annih, np.linalg.norm(spinor.wave_operator(k, 0.0) @ f0) / n)
        long_kill = max(long_kill, np.linalg.norm(spinor.transverse_projector(k) @ f0))
        eig = np.sort(np.real(np.linalg.eigvals(spinor.chi_dot(k))))
        target = np.array([-n, -n, 0.0, 0.0, n, n])
        spectrum = max(spectrum, np.max(np.abs(eig - target)) / n)
    rows.append(_row("spinor", "polarization-orthonormality", ortho, tol_algebra, trials))
    rows.append(_row("spinor", "polarization-completeness", comp, tol_algebra, trials))
    rows.append(_row("spinor", "helicity-spin-sum", ssum, tol_algebra, trials))
    rows.append(_row("spinor", "squared-operator-identity", omega_res, tol_algebra, trials))
    rows.append(_row("spinor", "on-shell-annihilation", annih, tol_algebra, trials))
    rows.append(_row("spinor", "longitudinal-projected-out", long_kill, tol_algebra, trials))
    rows.append(_row("spinor", "helicity-spectrum", spectrum, tol_eigen, trials))

    rt = 0.0
    for _ in range(min(trials, 100)):
        E, B = rng.normal(size=3), rng.normal(size=3)
        E2, B2 = spinor.spinor_to_fields(spinor.fields_to_spinor(E, B))
        rt = max(rt, np.max(np.abs(E2 - E)), np.max(np.abs(B2 - B)))
    rows.append(_row("spinor", "field-round-trip", rt, tol_algebra, min(trials, 100)))
    return rows


# --------------------------------------------------------------- waveguide

def _random_guide(rng) -> tuple[waveguide.WaveguideSpec, waveguide.ModeIndex]:
    b1 = rng.uniform(0.5, 3.0)
    b2 = b1 * rng.uniform(0.3, 0.95)
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    spec = waveguide.WaveguideSpec(b1, b2, axis)
    mode = waveguide.ModeIndex(int(rng.integers(1, 4)), int(rng.integers(0, 3)))
    return spec, mode


def waveguide_suite(rng, trials, tol) -> list[CheckRow]:
    rows = []
    dual = energy = disp = ortho_dec = closure = phase = frame_dev = 0.0
    for _ in range(trials):
        spec, mode = _random_guide(rng)
        m = waveguide.cutoff_frequency(spec, mode)
        omega = m * (1.0 + rng.uniform(1e-3, 4.0))
        st = waveguide.GuidedPhotonState(E=omega, p=math.sqrt(omega**2 - m**2) * spec.axis, m=m)
        v = waveguide.velocities(st)
        dual = max(dual, abs(float(v.v_g @ v.v_p) - 1.0))
        vg2 = float(v.v_g @ v.v_g)
        energy = max(energy, abs(st.E - st.m / math.sqrt(1.0 - vg2)) / st.E)
        disp = max(disp, abs(st.E**2 - st.p_norm**2 - st.m**2) / st.E**2)

        k3 = rng.uniform(0.0, 5.0) * m
        k4 = waveguide.guided_wavevector(spec, mode, k3)
        dec = waveguide.decompose_momentum(k4, spec, mode)
        closure = max(closure, np.max(np.abs((dec.p_T + dec.p_L).as_array() - k4.as_array())))
        m2 = m * m
        ortho_dec = max(
            ortho_dec,
            abs(dec.p_L.dot(dec.p_T)) / m2,
            abs(dec.p_T.interval + m2) / m2,
            abs(dec.p_L.interval - m2) / m2,
            abs(k4.interval) / m2,
            abs(dec.eta.interval + 1.0),
        )
        x = FourVector(rng.uniform(-5, 5), rng.uniform(-5, 5, 3))
        xT, xL = waveguide.decompose_position(x, spec)
        kx = k4.dot(x)
        phase = max(
            phase,
            abs(kx - dec.p_T.dot(xT) - dec.p_L.dot(xL)) / (abs(kx) + 1.0),
        )
        e1, e2, e3 = waveguide.frame_basis(_random_wavevector(rng))
        basis = np.stack([e1, e2, e3])
        frame_dev = max(
            frame_dev,
            np.max(np.abs(basis @ basis.T - np.eye(3))),
            abs(np.linalg.det(basis) - 1.0),
        )
    rows.append(_row("waveguide", "velocity-duality", dual, tol, trials))
    rows.append(_row("waveguide", "relativistic-energy", energy, tol, trials))
    rows.append(_row("waveguide", "dispersion-closure", disp, 1e-12, trials))
    rows.append(_row("waveguide", "momentum-split-closure", closure, tol, trials))
    rows.append(_row("waveguide", "momentum-split-orthogonality", ortho_dec, tol, trials))
    rows.append(_row("waveguide", "phase-split", phase, tol, trials))
    rows.append(_row("waveguide", "frame-orthonormal-right-handed", frame_dev, 1e-12, trials))
    return rows


# ----------------------------------------------------------------- special

def _fd_recurrence_residual(z: float) -> float:
    # central difference of H0^(2), Richardson once, against -H1^(2)
    h = 1e-4 * max(1.0, z)
    d = [
        (special.hankel2(0, z + s) - special.hankel2(0, z - s)) / (2.0 * s)
        for s in (h, h / 2.0)
    ]
    deriv = (4.0 * d[1] - d[0]) / 3.0
    h1 = special.hankel2(1, z)
    return abs(-deriv - h1) / abs(h1)


def special_suite() -> list[CheckRow]:
    rows = []
    res = max(
        abs(special.hankel2(0, z) - special.hankel2_oracle(0, z)) / abs(special.hankel2(0, z))
        for z in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0)
    )
    rows.append(_row("special", "outgoing-hankel-0-vs-contour-oracle", res, 1e-10, 8))
    res = max(
        abs(special.hankel2(1, z) - special.hankel2_oracle(1, z)) / abs(special.hankel2(1, z))
        for z in (0.5, 1.0, 2.0, 5.0, 10.0)
    )
    rows.append(_row("special", "outgoing-hankel-1-vs-fd-oracle", res, 1e-8, 5))
    res = max(_fd_recurrence_residual(z) for z in (0.5, 1.0, 3.0, 8.0, 20.0))
    rows.append(_row("special", "derivative-recurrence", res, 1e-6, 5))
    res = max(
        abs(abs(special.hankel2(nu, z)) * math.sqrt(z) / math.sqrt(2.0 / math.pi) - 1.0)
        for z in (40.0, 60.0, 100.0)
        for nu in (0, 1)
    )
    rows.append(_row("special", "asymptotic-envelope", res, 5e-3, 6))
    res = max(
        abs(special.hankel2_negimag(nu, s) - special.hankel2_negimag_oracle(nu, s))
        / abs(special.hankel2_negimag(nu, s))
        for s in (0.5, 3.0, 8.0, 15.0)
        for nu in (0, 1)
    )
    rows.append(_row("special", "spacelike-branch-vs-rotated-oracle", res, 1e-10, 8))
    d = np.linspace(5.0, 15.0, 21)
    fit = prop.decay_length_fit(
        [(s, abs(special.hankel2_negimag(1, s))) for s in d], envelope_power=0.5
    )
    rows.append(_row("special", "spacelike-branch-decay-rate", abs(fit.rate + 1.0), 2e-2, 21))
    res = max(
        abs(special.bessel_i1(x) - special.bessel_i1_oracle(x)) / special.bessel_i1(x)
        for x in (0.5, 2.0, 10.0, 30.0)
    )
    rows.append(_row("special", "modified-bessel-vs-oracle", res, 1e-10, 4))
    x = np.linspace(20.0, 40.0, 21)
    fit = prop.decay_length_fit(
        [(xi, special.bessel_i1(xi)) for xi in x], envelope_power=0.5
    )
    rows.append(_row("special", "modified-bessel-growth-rate", abs(fit.rate - 1.0), 1e-2, 21))
    return rows


# -------------------------------------------------------------- propagator

def _oracle_grid(n_per_regime=4, lo=0.5, hi=8.0):
    pts = []
    for q in np.linspace(lo, hi, n_per_regime):
        r = 0.4 * q
        pts.append((math.hypot(q, r), r))
    for q in np.linspace(lo, hi, n_per_regime):
        t = 0.4 * q
        pts.append((t, math.hypot(q, t)))
    return pts


def propagator_suite(tol_oracle) -> list[CheckRow]:
    rows = []
    wc = 1.0
    pts = _oracle_grid()
    res = max(
        abs(prop.s1_closed(prop.Separation(t, r), wc).value - prop.s1_oracle(t, r, wc))
        / abs(prop.s1_oracle(t, r, wc))
        for t, r in pts
    )
    rows.append(_row("propagator", "traveling-closed-vs-integral-oracle", res, tol_oracle, len(pts)))

    pts1d = _oracle_grid(n_per_regime=2, lo=1.0, hi=6.0)
    res = max(
        abs(prop.s1_closed_one_dim(prop.Separation(t, r), wc).value - prop.s1_oracle_one_dim(t, r, wc))
        / abs(prop.s1_oracle_one_dim(t, r, wc))
        for t, r in pts1d
    )
    rows.append(_row("propagator", "one-dim-closed-vs-integral-oracle", res, tol_oracle, len(pts1d)))

    res = max(
        abs(prop.s2_closed(s, wc).value + prop.s1_closed(s, wc).value / 2.0)
        / abs(prop.s1_closed(s, wc).value)
        for s in (prop.Separation(t, r) for t, r in pts)
    )
    rows.append(_row("propagator", "half-relation-emergent", res, 1e-12, len(pts)))

    dev = 0.0
    for wfit in (0.5, 1.0, 2.0):
        d = np.linspace(5.0 / wfit, 15.0 / wfit, 25)
        fit = prop.decay_length_fit(
            [(di, abs(prop.s1_closed(prop.Separation(0.0, di), wfit).value)) for di in d],
            envelope_power=1.5,
        )
        dev = max(dev, abs(fit.decay_length * wfit - 1.0))
    rows.append(_row("propagator", "spacelike-decay-length-is-compton", dev, 2e-2, 75))

    d = np.linspace(5.0, 15.0, 25)
    fit = prop.decay_length_fit(
        [(di, abs(prop.s2_closed(prop.Separation(0.0, di), wc).value)) for di in d],
        envelope_power=1.5,
    )
    rows.append(_row("propagator", "evanescent-closed-decay-length", abs(fit.decay_length - 1.0), 2e-2, 25))

    z = np.linspace(20.0, 40.0, 21)
    env = np.array([
        abs(prop.s1_closed(prop.Separation(zi, 0.0), wc).value) * zi**1.5 for zi in z
    ])
    rows.append(_row(
        "propagator", "timelike-envelope-constancy",
        float(np.max(np.abs(env / np.median(env) - 1.0))), 2e-2, 21,
    ))

    fit = prop.decay_length_fit(
        [(di, abs(prop.s2_full_closed(prop.Separation(0.0, di), wc).value))
         for di in np.linspace(20.0, 40.0, 25)],
        envelope_power=1.5,
    )
    rows.append(_row("propagator", "full-form-spacelike-growth-rate", abs(fit.rate - wc), 2e-2, 25))

    dev = 0.0
    for sep in (prop.Separation(0.0, 2.0), prop.Separation(3.0, 0.0)):
        tiny = 1e-6 / sep.root
        dev = max(
            dev,
            abs(prop.d_massless(sep).value - prop.s1_closed(sep, tiny).value)
            / abs(prop.d_massless(sep).value),
        )
    rows.append(_row("propagator", "massless-limit-consistency", dev, 1e-4, 2))

    dgrid = np.linspace(2.2, 12.0, 30)
    mags = [abs(prop.s1_closed(prop.Separation(0.0, di), wc).value) for di in dgrid]
    mono = 0.0 if all(b < a for a, b in zip(mags, mags[1:])) else 1.0
    rows.append(_row("propagator", "spacelike-monotone-decrease", mono, 0.5, 30))

    spts = [(0.0, 4.0), (5.0, 0.5), (2.0, 6.0), (4.0, 1.0)]
    res = max(
        abs(prop.s2_oracle(t, r, wc) - prop.s2_closed(prop.Separation(t, r), wc).value)
        / abs(prop.s2_closed(prop.Separation(t, r), wc).value)
        for t, r in spts
    )
    rows.append(_row(
        "propagator", "evanescent-mode-sum-vs-closed", res, 1e-6, len(spts),
        xfail=True,
        note="known discrepancy: the real evanescent-mode sum has a power-law "
             "spacelike tail, not the exponential closed form; see README",
    ))
    return rows


def run_verify(
    seed: int = 2026,
    trials: int = 200,
    tol_algebra: float = 1e-12,
    tol_eigen: float = 1e-10,
    tol_kinematics: float = 1e-10,
    tol_oracle: float = 1e-3,
) -> tuple[list[CheckRow], bool]:
    """Run every suite; returns (rows, all_passed).

    xfail rows never fail a run.  The randomized suites draw from
    numpy's default_rng(seed), so a report is reproducible from its seed.
    """
    rng = np.random.default_rng(seed)
    rows = []
    rows += spinor_suite(rng, trials, tol_algebra, tol_eigen)
    rows += waveguide_suite(rng, trials, tol_kinematics)
    rows += special_suite()
    rows += propagator_suite(tol_oracle)
    passed = all(r.status != "fail" for r in rows)
    return rows, passed
