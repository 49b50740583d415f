"""Invariant suite behind the CLI's ``validate`` subcommand.

Each check pins one physical or numerical invariant at its stated
tolerance; ``tol_scale`` multiplies every tolerance for exotic parameter
regimes.  The suite is deterministic (fixed RNG seed) and runs in a few
seconds for any valid parameter set.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

from . import core, observables, wavefunctions, wigner
from .errors import UndefinedStatisticsError

_SEED = 20240801


def _check(name, tolerance, max_error, tol_scale):
    return {
        "name": name,
        "tolerance": tolerance,
        "max_error": float(max_error),
        "passed": bool(max_error <= tolerance * tol_scale),
    }


def run_invariant_suite(params, A0=1.0, theta=0.0, tol_scale=1.0):
    """Run every invariant check; returns a JSON-ready report dict."""
    rng = np.random.default_rng(_SEED)
    w = params.omega
    t0 = params.t0
    span = 3.0 * params.wave_period
    amp = core.amplitude(params, A0, theta, t0)
    checks = []

    # envelope equation residual on random times
    ts = t0 + span * rng.random(2000)
    f = core.f_of_t(params, ts)
    fd = core.fdot_of_t(params, ts)
    fdd = core.fddot_of_t(params, ts)
    residual = np.abs(fdd - fd**2 / (2.0 * f) + 2.0 * w**2 * (f - 1.0 / f))
    checks.append(_check("envelope_equation_residual", 1e-8, residual.max(), tol_scale))

    # envelope periodicity, pi/omega
    tp = t0 + span * rng.random(400)
    per = np.abs(core.f_of_t(params, tp + params.pseudo_period) - core.f_of_t(params, tp))
    checks.append(_check("envelope_period", 1e-10, per.max(), tol_scale))

    # envelope minimum matches the closed form and stays positive
    fmin, fmax = params.f_extrema()
    crit = core.critical_times(params, t0, t0 + params.pseudo_period + 0.1 / w)
    err = 0.0 if fmin > 0 else math.inf
    for tc, kind in crit:
        target = fmin if kind == core.KIND_NODE else fmax
        err = max(err, abs(float(core.f_of_t(params, tc)) - target))
    checks.append(_check("envelope_extrema", 1e-10, err, tol_scale))

    # zeta * f * hbar == epsilon * omega
    zeta = core.zeta_of_t(params, ts)
    checks.append(_check(
        "zeta_identity", 1e-12,
        np.abs(zeta * f * params.hbar / (params.epsilon * w) - 1.0).max(), tol_scale))

    # phase integral vs adaptive quadrature
    sample = t0 + span * rng.random(25)
    closed = core.phase_integral(params, sample)
    err = 0.0
    for t_i, closed_i in zip(sample, closed):
        ref, _ = quad(lambda u: 1.0 / float(core.f_of_t(params, u)), t0, t_i,
                      limit=400, epsabs=1e-12, epsrel=1e-12)
        err = max(err, abs(closed_i - ref))
    checks.append(_check("phase_integral_vs_quadrature", 1e-8, err, tol_scale))

    # strict monotonicity and the exact pi/omega advance per envelope period
    dense = np.linspace(t0, t0 + span, 2001)
    tvals = core.phase_integral(params, dense)
    checks.append(_check("phase_integral_monotone", 0.0,
                         max(0.0, -np.diff(tvals).min()), tol_scale))
    adv = core.phase_integral(params, t0 + params.pseudo_period) - params.pseudo_period
    checks.append(_check("phase_integral_pseudo_period", 1e-10, abs(adv), tol_scale))

    # amplitude modulus is a constant of motion
    values = core.amplitude_values(params, A0, theta, dense)
    checks.append(_check("amplitude_modulus", 1e-10,
                         np.abs(np.abs(values) - A0).max(), tol_scale))

    # phase rate of A equals -omega/f (finite difference on the closed form)
    h = 1e-4 / w
    mid = dense[1:-1:40]
    dphase = (np.unwrap(np.angle(core.amplitude_values(params, 1.0, theta, mid + h)))
              - np.unwrap(np.angle(core.amplitude_values(params, 1.0, theta, mid - h)))) / (2 * h)
    checks.append(_check("amplitude_phase_rate", 1e-6,
                         np.abs(dphase + w / core.f_of_t(params, mid)).max(), tol_scale))

    # energy conservation
    ek, ep, etot = observables.energies(params, amp, dense)
    checks.append(_check("energy_conservation", 1e-10,
                         np.abs(etot - etot[0]).max() / abs(etot[0]), tol_scale))

    # uncertainty floor and equality at the critical instants
    dq, dp, product = observables.fluctuations(params, dense)
    floor = 0.5 * params.hbar
    checks.append(_check("uncertainty_floor", 1e-12,
                         max(0.0, float((floor - product).max())), tol_scale))
    err = 0.0
    for tc, _kind in core.critical_times(params, t0, t0 + span):
        err = max(err, abs(float(observables.fluctuations(params, tc)[2]) - floor))
    checks.append(_check("uncertainty_at_critical_times", 1e-10, err, tol_scale))

    # Bogoliubov identity and the fluctuations rebuilt from (mu, nu)
    tr = t0 + span * rng.random(500)
    mu, nu = observables._mu_nu(params, tr)
    checks.append(_check("bogoliubov_identity", 1e-10,
                         np.abs(np.abs(mu) ** 2 - np.abs(nu) ** 2 - 1.0).max(), tol_scale))
    ew = params.epsilon * w
    dq_b = np.sqrt(params.hbar / (2.0 * ew)) * (mu - nu).real
    dp_b = np.sqrt(params.hbar * ew / 2.0) * np.abs(mu + nu)
    dq_r, dp_r, _ = observables.fluctuations(params, tr)
    err = max(np.abs(dq_b - dq_r).max(), np.abs(dp_b - dp_r).max(),
              np.abs((mu - nu).imag).max())
    checks.append(_check("bogoliubov_fluctuations", 1e-10, err, tol_scale))

    # Mandel Q constant in time (skipped for the static vacuum, where it
    # is undefined by construction)
    try:
        qvals = observables.mandel_q(params, amp, dense)
        qerr = np.abs(qvals - qvals[0]).max()
    except UndefinedStatisticsError:
        qerr = 0.0
    checks.append(_check("mandel_q_constant", 1e-8, qerr, tol_scale))

    # grid norms: position-space norm over time, Parseval against p-space
    fmin, fmax = params.f_extrema()
    centre = math.sqrt(2.0 * params.hbar * fmax / ew) * A0
    sq = math.sqrt(params.hbar * fmax / (2.0 * ew))
    qgrid = wavefunctions.QuadratureGrid("q", -(centre + 10 * sq), centre + 10 * sq, 3001)
    pc = math.sqrt(2.0 * params.hbar * ew * fmax) * A0
    sp = math.sqrt(params.hbar * ew * fmax / 2.0)
    pgrid = wavefunctions.QuadratureGrid("p", -(pc + 10 * sp), pc + 10 * sp, 3001)
    norm_err = 0.0
    parseval_err = 0.0
    for t_i in np.linspace(t0, t0 + params.wave_period, 9):
        fq = wavefunctions.coherent_q(params, amp, qgrid, t_i)
        fp = wavefunctions.coherent_p(params, amp, pgrid, t_i)
        norm_err = max(norm_err, abs(fq.norm - 1.0))
        parseval_err = max(parseval_err, abs(fq.norm - fp.norm))
    checks.append(_check("coherent_norm", 1e-6, norm_err, tol_scale))
    checks.append(_check("parseval", 1e-6, parseval_err, tol_scale))

    # small number-state orthonormality block
    tq = t0 + 0.37 / w
    reach = math.sqrt(9.0 * params.hbar * fmax / ew) + 6 * sq
    ngrid = wavefunctions.QuadratureGrid("q", -reach, reach, 2001)
    fields = [wavefunctions.fock_q(params, n, ngrid, tq) for n in range(5)]
    err = 0.0
    for i, fi in enumerate(fields):
        for j, fj in enumerate(fields):
            overlap = np.trapezoid(np.conj(fi.values) * fj.values, ngrid.points)
            err = max(err, abs(overlap - (1.0 if i == j else 0.0)))
    checks.append(_check("fock_orthonormality", 1e-6, err, tol_scale))

    # quick Wigner cross-check: closed vs integral form, norm, marginals
    tw = t0 + 0.51 / w
    cw = float(observables.expectation_q(params, amp, tw))
    cpw = float(observables.expectation_p(params, amp, tw))
    sig = wigner.covariance(params, tw)
    hq = 6.0 * math.sqrt(sig[0, 0])
    hp = 6.0 * math.sqrt(sig[1, 1])
    grid = wigner.PhaseSpaceGrid(cw - hq, cw + hq, 61, cpw - hp, cpw + hp, 61, t=tw)
    closed_w = wigner.wigner_closed(params, amp, grid)
    numeric_w = wigner.wigner_numeric(params, amp, grid)
    checks.append(_check("wigner_vs_integral", 1e-6,
                         np.abs(closed_w.values - numeric_w.values).max(), tol_scale))
    total = np.trapezoid(np.trapezoid(closed_w.values, grid.p, axis=1), grid.q)
    checks.append(_check("wigner_norm", 1e-6, abs(float(total) - 1.0), tol_scale))
    marg_q = np.trapezoid(closed_w.values, grid.p, axis=1)
    dens_q = np.abs(wavefunctions.coherent_q_values(params, amp, grid.q, tw)) ** 2
    marg_p = np.trapezoid(closed_w.values, grid.q, axis=0)
    dens_p = np.abs(wavefunctions.coherent_p_values(params, amp, grid.p, tw)) ** 2
    checks.append(_check("wigner_marginals", 1e-6,
                         max(np.abs(marg_q - dens_q).max(), np.abs(marg_p - dens_p).max()),
                         tol_scale))

    return {
        "schema_version": 1,
        "nonstaticity_measure": core.nonstaticity_measure(params),
        "tol_scale": tol_scale,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
